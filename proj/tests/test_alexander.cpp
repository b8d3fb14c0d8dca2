#include "doctest.h"

#include "alexcert/alexander.hpp"

using namespace alexcert;

namespace {

PositiveBraidWord word(int n, std::vector<int> letters) {
    return PositiveBraidWord{n, std::move(letters)};
}

HalfLaurent poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    HalfLaurent p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

const HalfLaurent u = HalfLaurent::skein_factor();
const HalfLaurent hopf = u;
const HalfLaurent trefoil = poly({{2, 1}, {0, -1}, {-2, 1}});
const HalfLaurent t25 = poly({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}});
const HalfLaurent t33 = poly({{4, 1}, {2, -1}, {-2, -1}, {-4, 1}});
const HalfLaurent t34 = poly({{6, 1}, {4, -1}, {0, 1}, {-4, -1}, {-6, 1}});

}  // namespace

TEST_CASE("det_laurent") {
    LaurentMatrix m;
    m.dim = 1;
    m.entries = {{u}};
    CHECK(det_laurent(m) == u);

    CHECK(det_laurent(LaurentMatrix::identity(3)) == HalfLaurent::one());

    m.dim = 2;
    m.entries = {{u, HalfLaurent::term(-1, 1)}, {HalfLaurent::term(1, -1), u}};
    CHECK(det_laurent(m) == trefoil);

    SUBCASE("multiplicativity against matmul") {
        LaurentMatrix a, b;
        a.dim = b.dim = 3;
        a.entries = {{HalfLaurent::term(2, 1), HalfLaurent::one(), HalfLaurent()},
                     {HalfLaurent(), u, HalfLaurent::term(-2, 3)},
                     {HalfLaurent::one(), HalfLaurent::term(1, -2), HalfLaurent::one()}};
        b.entries = {{u, HalfLaurent(), HalfLaurent::one()},
                     {HalfLaurent::term(-1, 1), HalfLaurent::one(), HalfLaurent()},
                     {HalfLaurent::one(), HalfLaurent::term(3, 2), u}};
        CHECK(det_laurent(matmul(a, b)) == det_laurent(a) * det_laurent(b));
    }

    SUBCASE("large-dimension path uses the elimination route") {
        // bidiagonal 14x14 from T(2,15): known closed form
        SeifertMatrix v = seifert_from_braid(word(2, std::vector<int>(15, 1)));
        REQUIRE(v.dim == 14);
        HalfLaurent expect;
        for (int k = 0; k <= 14; ++k) expect.add_term(14 - 2 * k, k % 2 ? -1 : 1);
        CHECK(from_seifert(v) == expect);
    }
}

TEST_CASE("from_seifert") {
    SeifertMatrix v;
    v.dim = 1;
    v.entries = {{-1}};
    v.components = 1;
    v.euler = 0;
    CHECK(from_seifert(v) == hopf);

    v.dim = 2;
    v.entries = {{-1, 1}, {0, -1}};
    v.euler = -1;
    CHECK(from_seifert(v) == trefoil);

    CHECK(from_seifert(seifert_from_braid(torus_word(3, 3))) == t33);
}

TEST_CASE("skein_oracle") {
    CHECK(skein_oracle(word(2, {1, 1})) == hopf);
    CHECK(skein_oracle(word(2, {1, 1, 1})) == trefoil);
    CHECK(skein_oracle(torus_word(3, 3)) == t33);
    CHECK(skein_oracle(word(1, {})) == HalfLaurent::one());
    CHECK(skein_oracle(word(3, {1, 1})) == HalfLaurent());
}

TEST_CASE("burau_poly") {
    CHECK(burau_poly(word(2, {1, 1})) == hopf);
    CHECK(burau_poly(word(2, {1, 1, 1})) == trefoil);
    CHECK(burau_poly(word(3, {1, 2, 1, 2})) == trefoil);
    CHECK(burau_poly(torus_word(3, 4)) == t34);
}

TEST_CASE("braid_poly") {
    CHECK(braid_poly(word(3, {1, 1})) == HalfLaurent());
    CHECK(braid_poly(word(2, {1, 1, 1, 1, 1})) == t25);
    CHECK(braid_poly(word(3, {1, 1, 1, 2, 2})) == trefoil * u);
    CHECK(braid_poly(word(1, {})) == HalfLaurent::one());
    CHECK(braid_poly(word(2, {1})) == HalfLaurent::one());
}

TEST_CASE("tree_poly") {
    CHECK(tree_poly(single_vertex_tree()) == hopf);
    CHECK(tree_poly(path_tree(3)) == poly({{3, 1}, {1, -1}, {-1, 1}, {-3, -1}}));
    CHECK(tree_poly(parse_tree("v(v)(v)(v)")) == t33);
}

TEST_CASE("three-method agreement") {
    SkeinOracle oracle;
    for (const auto& w : enumerate_words(4, 7)) {
        HalfLaurent a = braid_poly(w);
        CHECK(a == oracle(w));
        CHECK(a == burau_poly(w));
    }
}

TEST_CASE("skein identity on adjacent squares") {
    for (const auto& w : enumerate_words(4, 7)) {
        for (size_t j = 0; j + 1 < w.letters.size(); ++j) {
            if (w.letters[j] != w.letters[j + 1]) continue;
            PositiveBraidWord l0 = word_with_letter_removed(w, static_cast<int>(j));
            PositiveBraidWord lm = word_with_letter_removed(l0, static_cast<int>(j));
            CHECK(braid_poly(w) == braid_poly(lm) + u * braid_poly(l0));
        }
    }
}

TEST_CASE("fibered outputs: alpha 1, degree b1, parity matches components") {
    for (const auto& w : enumerate_words(4, 7)) {
        HalfLaurent p = braid_poly(w);
        AlexSummary s = summarize(p);
        CHECK(!s.is_zero);
        CHECK(s.alpha == 1);
        CHECK(s.degree_doubled == betti_data(w).b1);
        ConwayClass cls = conway_parity(p);
        if (closure_components(w) % 2 == 1)
            CHECK(cls == ConwayClass::SymmetricIntegral);
        else
            CHECK(cls == ConwayClass::AntisymmetricHalf);
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_plane_trees(n)) {
            AlexSummary s = summarize(tree_poly(t));
            CHECK(s.alpha == 1);
            CHECK(s.degree_doubled == n);
        }
}
