#include "alexcert/alexander.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace alexcert {

LaurentMatrix LaurentMatrix::identity(int dim) {
    LaurentMatrix m;
    m.dim = dim;
    m.entries.assign(dim, std::vector<HalfLaurent>(dim));
    for (int i = 0; i < dim; ++i) m.entries[i][i] = HalfLaurent::one();
    return m;
}

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
    LaurentMatrix r;
    r.dim = a.dim;
    r.entries.assign(a.dim, std::vector<HalfLaurent>(a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            if (a.entries[i][k].is_zero()) continue;
            for (int j = 0; j < a.dim; ++j)
                r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    return r;
}

namespace {

// Cofactor expansion memoized on the set of unused columns; rows are consumed
// top-down, so the subset determines the submatrix.
HalfLaurent det_cofactor(const LaurentMatrix& m) {
    const int n = m.dim;
    std::unordered_map<unsigned, HalfLaurent> memo;
    std::function<const HalfLaurent&(unsigned)> minor = [&](unsigned mask) -> const HalfLaurent& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        HalfLaurent det;
        if (mask == 0) {
            det = HalfLaurent::one();
        } else {
            const int row = n - __builtin_popcount(mask);
            int sign = 1;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                if (!m.entries[row][j].is_zero()) {
                    HalfLaurent sub = minor(mask & ~(1u << j));
                    sub = m.entries[row][j] * sub;
                    if (sign < 0) sub = -sub;
                    det += sub;
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(det)).first->second;
    };
    unsigned full = n == 32 ? ~0u : ((1u << n) - 1);
    return minor(full);
}

// Fraction-free (Bareiss) elimination over the Laurent ring; exact divisions
// by the previous pivot stay in the ring.
HalfLaurent det_bareiss(LaurentMatrix m) {
    const int n = m.dim;
    int sign = 1;
    HalfLaurent prev = HalfLaurent::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (m.entries[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.entries[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return {};
            std::swap(m.entries[k], m.entries[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                HalfLaurent num = m.entries[k][k] * m.entries[i][j] -
                                  m.entries[i][k] * m.entries[k][j];
                m.entries[i][j] = divide_exact(num, prev);
            }
            m.entries[i][k] = HalfLaurent();
        }
        prev = m.entries[k][k];
    }
    HalfLaurent det = m.entries[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

HalfLaurent det_laurent(const LaurentMatrix& m) {
    if (m.dim == 0) return HalfLaurent::one();
    if (m.dim <= 12) return det_cofactor(m);
    return det_bareiss(m);
}

HalfLaurent from_seifert(const SeifertMatrix& v) {
    LaurentMatrix a;
    a.dim = v.dim;
    a.entries.assign(v.dim, std::vector<HalfLaurent>(v.dim));
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) {
            HalfLaurent e;
            e.add_term(-1, v.entries[i][j]);
            e.add_term(1, -v.entries[j][i]);
            a.entries[i][j] = e;
        }
    return det_laurent(a);
}

HalfLaurent SkeinOracle::operator()(const PositiveBraidWord& w) {
    validate_word(w);
    if (w.strands == 1) return HalfLaurent::one();
    if (!has_full_support(w)) return {};
    const std::string key = canonical_key(w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    HalfLaurent result;
    std::vector<int> count(w.strands, 0);
    for (int l : w.letters) ++count[l];
    bool single = false;
    for (int i = 1; i <= w.strands - 1; ++i)
        if (count[i] == 1) { single = true; break; }
    if (single) {
        result = HalfLaurent::one();
        for (const auto& f : factor_single_occurrence(w)) result = result * (*this)(f);
    } else {
        PositiveBraidWord sq = find_square_rewrite(w);
        int j = -1;
        for (int p = 0; p + 1 < static_cast<int>(sq.letters.size()); ++p)
            if (sq.letters[p] == sq.letters[p + 1]) { j = p; break; }
        PositiveBraidWord both = word_with_letter_removed(word_with_letter_removed(sq, j), j);
        PositiveBraidWord one = word_with_letter_removed(sq, j);
        result = (*this)(both) + HalfLaurent::skein_factor() * (*this)(one);
    }
    memo_.emplace(key, result);
    return result;
}

HalfLaurent skein_oracle(const PositiveBraidWord& w) {
    SkeinOracle oracle;
    return oracle(w);
}

namespace {

// Reduced Burau matrix of sigma_i on n strands, over integer powers of t
// (doubled exponents). Convention pinned so that sigma_1 on 2 strands is [-t].
LaurentMatrix reduced_burau(int n, int i) {
    LaurentMatrix m = LaurentMatrix::identity(n - 1);
    const HalfLaurent t = HalfLaurent::term(2, 1);
    m.entries[i - 1][i - 1] = HalfLaurent::term(2, -1);
    if (i >= 2) m.entries[i - 1][i - 2] = t;
    if (i <= n - 2) m.entries[i - 1][i] = HalfLaurent::one();
    return m;
}

}  // namespace

HalfLaurent burau_poly(const PositiveBraidWord& w) {
    validate_word(w);
    if (w.strands < 2 || !has_full_support(w))
        throw std::invalid_argument("burau_poly requires full support on >= 2 strands");
    const int n = w.strands;
    LaurentMatrix rho = LaurentMatrix::identity(n - 1);
    for (int l : w.letters) rho = matmul(rho, reduced_burau(n, l));
    for (int i = 0; i < n - 1; ++i)
        rho.entries[i][i] -= HalfLaurent::one();
    HalfLaurent det = det_laurent(rho);
    HalfLaurent cyc;  // 1 + t + ... + t^{n-1}
    for (int j = 0; j < n; ++j) cyc.add_term(2 * j, 1);
    HalfLaurent q = divide_exact(det, cyc);
    if (q.is_zero())
        throw std::domain_error("burau determinant vanished on a non-split word");

    // unit normalization: center the exponents, then fix the sign
    const int shift = -(q.max_doubled_exp() + q.min_doubled_exp()) / 2;
    if ((q.max_doubled_exp() + q.min_doubled_exp()) % 2 != 0)
        throw std::domain_error("burau polynomial cannot be centered");
    HalfLaurent centered;
    for (auto [e, c] : q.terms()) centered.add_term(e + shift, c);
    if (centered.coeff(centered.max_doubled_exp()) < 0) centered = -centered;
    const int components = closure_components(w);
    const ConwayClass expected = components % 2 == 1 ? ConwayClass::SymmetricIntegral
                                                     : ConwayClass::AntisymmetricHalf;
    if (conway_parity(centered) != expected)
        throw std::domain_error("burau normalization failed the Conway symmetry check");
    return centered;
}

HalfLaurent braid_poly(const PositiveBraidWord& w) {
    validate_word(w);
    if (w.strands == 1) return HalfLaurent::one();
    if (!has_full_support(w)) return {};
    HalfLaurent result = HalfLaurent::one();
    for (const auto& f : factor_single_occurrence(w))
        result = result * from_seifert(seifert_from_braid(f));
    return result;
}

HalfLaurent tree_poly(const PlaneTree& t) { return from_seifert(seifert_from_tree(t)); }

}  // namespace alexcert
