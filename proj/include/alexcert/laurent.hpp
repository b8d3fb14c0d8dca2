#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace alexcert {

// Conway symmetry classes of an Alexander polynomial: a_i = a_{-i} with
// integral powers of t (odd component count), a_i = -a_{-i} with strictly
// half-integral powers (even component count), the zero polynomial, or
// neither.
enum class ConwayClass { SymmetricIntegral, AntisymmetricHalf, Zero, Violation };

std::string to_string(ConwayClass c);

struct AlexSummary {
    bool is_zero = false;
    int degree_doubled = 0;       // 2*d(L)
    std::int64_t alpha = 0;       // leading coefficient
    std::int64_t beta = 0;        // coefficient at degree - 1
};

// Integer Laurent polynomial in t^{1/2}.
//
// Exponents are stored doubled: key k stands for t^{k/2}, so integral powers
// of t have even keys and half-integral powers have odd keys. Zero
// coefficients are never stored; the zero polynomial is the empty map.
// Coefficient arithmetic is 64-bit with overflow checks; overflow throws.
class HalfLaurent {
public:
    HalfLaurent() = default;

    static HalfLaurent one();
    static HalfLaurent term(int doubled_exp, std::int64_t coefficient);
    // t^{1/2} - t^{-1/2}, the multiplier in the skein relation.
    static HalfLaurent skein_factor();

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int doubled_exp) const;
    int min_doubled_exp() const;  // nonzero polynomials only
    int max_doubled_exp() const;

    const std::map<int, std::int64_t>& terms() const { return terms_; }

    void add_term(int doubled_exp, std::int64_t coefficient);

    HalfLaurent operator-() const;
    HalfLaurent& operator+=(const HalfLaurent& other);
    HalfLaurent& operator-=(const HalfLaurent& other);

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);

    bool operator==(const HalfLaurent& other) const { return terms_ == other.terms_; }

private:
    std::map<int, std::int64_t> terms_;
};

AlexSummary summarize(const HalfLaurent& p);

// t -> t^w on every term; w = 0 collapses to the coefficient sum, negative w
// mirrors the exponents.
HalfLaurent substitute_power(const HalfLaurent& p, int w);

ConwayClass conway_parity(const HalfLaurent& p);

// Exact division in the Laurent ring; throws std::domain_error if q is zero
// or does not divide p.
HalfLaurent divide_exact(const HalfLaurent& p, const HalfLaurent& q);

// Canonical text, decreasing exponents: "t^3 - 2*t^2 + 3*t - 3 + 3*t^-1",
// half powers as "t^(1/2)". Zero polynomial is "0".
std::string to_string(const HalfLaurent& p);

// Renders 2*d as "d" or "d/2", e.g. degree_doubled 3 -> "3/2".
std::string format_half(int doubled);

// JSON: array of [doubled_exponent, coefficient] pairs, decreasing exponent.
std::string to_json_string(const HalfLaurent& p);

// Accepts the JSON array form or the canonical text form.
HalfLaurent parse_poly(const std::string& text);

}  // namespace alexcert
