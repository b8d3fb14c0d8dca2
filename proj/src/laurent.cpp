#include "alexcert/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace alexcert {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial multiplication");
    return r;
}

}  // namespace

std::string to_string(ConwayClass c) {
    switch (c) {
        case ConwayClass::SymmetricIntegral: return "symmetric-integral";
        case ConwayClass::AntisymmetricHalf: return "antisymmetric-half";
        case ConwayClass::Zero: return "zero";
        case ConwayClass::Violation: return "violation";
    }
    return "?";
}

HalfLaurent HalfLaurent::one() { return term(0, 1); }

HalfLaurent HalfLaurent::term(int doubled_exp, std::int64_t coefficient) {
    HalfLaurent p;
    if (coefficient != 0) p.terms_[doubled_exp] = coefficient;
    return p;
}

HalfLaurent HalfLaurent::skein_factor() {
    HalfLaurent p;
    p.terms_[1] = 1;
    p.terms_[-1] = -1;
    return p;
}

std::int64_t HalfLaurent::coeff(int doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? 0 : it->second;
}

int HalfLaurent::min_doubled_exp() const {
    if (terms_.empty()) throw std::logic_error("min_doubled_exp of zero polynomial");
    return terms_.begin()->first;
}

int HalfLaurent::max_doubled_exp() const {
    if (terms_.empty()) throw std::logic_error("max_doubled_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void HalfLaurent::add_term(int doubled_exp, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(doubled_exp, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) terms_.erase(it);
    }
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r;
    for (auto [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
    for (auto [e, c] : other.terms_) add_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
    for (auto [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

AlexSummary summarize(const HalfLaurent& p) {
    AlexSummary s;
    if (p.is_zero()) {
        s.is_zero = true;
        return s;
    }
    s.degree_doubled = p.max_doubled_exp();
    s.alpha = p.coeff(s.degree_doubled);
    s.beta = p.coeff(s.degree_doubled - 2);
    return s;
}

HalfLaurent substitute_power(const HalfLaurent& p, int w) {
    HalfLaurent r;
    for (auto [e, c] : p.terms()) r.add_term(e * w, c);
    return r;
}

ConwayClass conway_parity(const HalfLaurent& p) {
    if (p.is_zero()) return ConwayClass::Zero;
    bool all_even = true, all_odd = true;
    for (auto [e, c] : p.terms()) {
        if (e % 2 == 0) all_odd = false; else all_even = false;
    }
    if (all_even) {
        for (auto [e, c] : p.terms())
            if (p.coeff(-e) != c) return ConwayClass::Violation;
        return ConwayClass::SymmetricIntegral;
    }
    if (all_odd) {
        for (auto [e, c] : p.terms())
            if (p.coeff(-e) != -c) return ConwayClass::Violation;
        return ConwayClass::AntisymmetricHalf;
    }
    return ConwayClass::Violation;
}

HalfLaurent divide_exact(const HalfLaurent& p, const HalfLaurent& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return {};
    HalfLaurent rem = p;
    HalfLaurent quot;
    const int qtop = q.max_doubled_exp();
    const std::int64_t qlead = q.coeff(qtop);
    // any exact quotient has minimal exponent p.min - q.min; descending below
    // that bound proves non-exactness (and keeps the loop finite)
    const int quot_min = p.min_doubled_exp() - q.min_doubled_exp();
    while (!rem.is_zero()) {
        const int rtop = rem.max_doubled_exp();
        if (rtop - qtop < quot_min)
            throw std::domain_error("non-exact polynomial division");
        const std::int64_t rlead = rem.coeff(rtop);
        if (rlead % qlead != 0) throw std::domain_error("non-exact polynomial division");
        HalfLaurent t = HalfLaurent::term(rtop - qtop, rlead / qlead);
        quot += t;
        rem -= t * q;
        if (!rem.is_zero() && rem.max_doubled_exp() >= rtop)
            throw std::domain_error("non-exact polynomial division");
    }
    return quot;
}

std::string format_half(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

void append_monomial(std::ostringstream& out, int e, std::int64_t c, bool first) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
        out << mag;
        return;
    }
    if (mag != 1) out << mag << "*";
    if (e == 2) {
        out << "t";
    } else if (e % 2 == 0) {
        out << "t^" << e / 2;
    } else {
        out << "t^(" << e << "/2)";
    }
}

}  // namespace

std::string to_string(const HalfLaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        append_monomial(out, it->first, it->second, first);
        first = false;
    }
    return out.str();
}

std::string to_json_string(const HalfLaurent& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back({it->first, it->second});
    return arr.dump();
}

namespace {

// Parses the canonical text form, e.g. "t^2 - t + 1 - t^-1 + t^-2" or
// "t^(1/2) - t^(-1/2)".
HalfLaurent parse_poly_text(const std::string& text) {
    HalfLaurent p;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(i));
        }
        std::int64_t mag = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            mag = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                mag = mag * 10 + (text[i++] - '0');
            saw_digits = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        }
        int doubled = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            doubled = 2;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool paren = i < text.size() && text[i] == '(';
                if (paren) ++i;
                int esign = 1;
                if (i < text.size() && text[i] == '-') { esign = -1; ++i; }
                if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
                    throw std::invalid_argument("bad exponent at position " + std::to_string(i));
                int num = 0;
                while (i < text.size() && std::isdigit((unsigned char)text[i]))
                    num = num * 10 + (text[i++] - '0');
                int denom = 1;
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    if (i >= text.size() || text[i] != '2')
                        throw std::invalid_argument("only /2 exponents supported");
                    ++i;
                    denom = 2;
                }
                if (paren) {
                    if (i >= text.size() || text[i] != ')')
                        throw std::invalid_argument("unclosed exponent at position " + std::to_string(i));
                    ++i;
                }
                doubled = esign * (denom == 2 ? num : 2 * num);
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("expected term at position " + std::to_string(i));
        }
        p.add_term(doubled, sign * mag);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return p;
}

}  // namespace

HalfLaurent parse_poly(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    if (i < text.size() && text[i] == '[') {
        auto j = nlohmann::json::parse(text);
        HalfLaurent p;
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("polynomial JSON entries must be [exponent, coefficient]");
            p.add_term(pair[0].get<int>(), pair[1].get<std::int64_t>());
        }
        return p;
    }
    return parse_poly_text(text);
}

}  // namespace alexcert
