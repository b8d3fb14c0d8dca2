#include "doctest.h"

#include <random>
#include <stdexcept>

#include "alexcert/laurent.hpp"

using namespace alexcert;

namespace {

HalfLaurent poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    HalfLaurent p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

HalfLaurent random_poly(std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-6, 6);
    std::uniform_int_distribution<int> coeff(-4, 4);
    HalfLaurent p;
    const int k = n_terms(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), coeff(rng));
    return p;
}

const HalfLaurent u = HalfLaurent::skein_factor();
const HalfLaurent trefoil = poly({{2, 1}, {0, -1}, {-2, 1}});

}  // namespace

TEST_CASE("addition") {
    CHECK(u + HalfLaurent() == u);
    CHECK(trefoil + (-trefoil) == HalfLaurent());
    CHECK(poly({{2, 1}, {0, -2}, {-2, 1}}) + HalfLaurent::one() == trefoil);
}

TEST_CASE("multiplication") {
    CHECK(u * u == poly({{2, 1}, {0, -2}, {-2, 1}}));
    CHECK(trefoil * HalfLaurent::one() == trefoil);
    // trefoil times T(2,5) polynomial, convolved by hand
    HalfLaurent t25 = poly({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}});
    HalfLaurent expected =
        poly({{6, 1}, {4, -2}, {2, 3}, {0, -3}, {-2, 3}, {-4, -2}, {-6, 1}});
    CHECK(trefoil * t25 == expected);
}

TEST_CASE("schoolbook multiplication oracle") {
    // independent convolution over dense arrays
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        HalfLaurent a = random_poly(rng), b = random_poly(rng);
        std::int64_t dense[200] = {};
        for (auto [ea, ca] : a.terms())
            for (auto [eb, cb] : b.terms()) dense[ea + eb + 100] += ca * cb;
        HalfLaurent want;
        for (int e = 0; e < 200; ++e) want.add_term(e - 100, dense[e]);
        CHECK(a * b == want);
    }
}

TEST_CASE("coeff") {
    CHECK(u.coeff(1) == 1);
    CHECK(trefoil.coeff(0) == -1);
    CHECK(HalfLaurent().coeff(4) == 0);
}

TEST_CASE("summarize") {
    AlexSummary s = summarize(u);
    CHECK(s.degree_doubled == 1);
    CHECK(s.alpha == 1);
    CHECK(s.beta == -1);

    s = summarize(HalfLaurent::one());
    CHECK(s.degree_doubled == 0);
    CHECK(s.alpha == 1);
    CHECK(s.beta == 0);

    s = summarize(poly({{4, 1}, {2, -1}, {-2, -1}, {-4, 1}}));
    CHECK(s.degree_doubled == 4);
    CHECK(s.alpha == 1);
    CHECK(s.beta == -1);

    CHECK(summarize(HalfLaurent()).is_zero);
}

TEST_CASE("substitute_power") {
    CHECK(substitute_power(trefoil, 2) == poly({{4, 1}, {0, -1}, {-4, 1}}));
    CHECK(substitute_power(trefoil, 1) == trefoil);
    CHECK(substitute_power(trefoil, 0) == HalfLaurent::one());
    SUBCASE("composition") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            HalfLaurent p = random_poly(rng);
            for (int a : {-2, 1, 2, 3})
                for (int b : {-1, 2})
                    CHECK(substitute_power(substitute_power(p, a), b) ==
                          substitute_power(p, a * b));
        }
    }
}

TEST_CASE("conway_parity") {
    CHECK(conway_parity(trefoil) == ConwayClass::SymmetricIntegral);
    CHECK(conway_parity(u) == ConwayClass::AntisymmetricHalf);
    CHECK(conway_parity(poly({{2, 1}, {0, 1}, {-2, -1}})) == ConwayClass::Violation);
    CHECK(conway_parity(HalfLaurent()) == ConwayClass::Zero);
    CHECK(conway_parity(poly({{2, 1}, {1, 1}})) == ConwayClass::Violation);
}

TEST_CASE("ring properties") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        HalfLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) {
            AlexSummary sa = summarize(a), sb = summarize(b), sp = summarize(a * b);
            CHECK(sp.degree_doubled == sa.degree_doubled + sb.degree_doubled);
            CHECK(sp.alpha == sa.alpha * sb.alpha);
        }
    }
}

TEST_CASE("divide_exact") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        HalfLaurent a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(HalfLaurent::one(), HalfLaurent()), std::domain_error);
    CHECK_THROWS_AS(divide_exact(poly({{2, 1}, {0, 1}}), poly({{1, 1}, {0, 1}})),
                    std::domain_error);
}

TEST_CASE("text form") {
    HalfLaurent p =
        poly({{6, 1}, {4, -2}, {2, 3}, {0, -3}, {-2, 3}, {-4, -2}, {-6, 1}});
    CHECK(to_string(p) == "t^3 - 2*t^2 + 3*t - 3 + 3*t^-1 - 2*t^-2 + t^-3");
    CHECK(to_string(u) == "t^(1/2) - t^(-1/2)");
    CHECK(to_string(HalfLaurent()) == "0");
    CHECK(parse_poly(to_string(p)) == p);
    CHECK(parse_poly(to_string(u)) == u);
    CHECK(parse_poly("1") == HalfLaurent::one());
}

TEST_CASE("json form") {
    CHECK(to_json_string(u) == "[[1,1],[-1,-1]]");
    CHECK(to_json_string(HalfLaurent()) == "[]");
    CHECK(parse_poly(to_json_string(trefoil)) == trefoil);
}

TEST_CASE("overflow is a hard error") {
    HalfLaurent big = HalfLaurent::term(0, (std::int64_t(1) << 62));
    CHECK_THROWS_AS(big * poly({{0, 4}}), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}
