#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "alexcert/braid.hpp"
#include "alexcert/laurent.hpp"
#include "alexcert/surfaces.hpp"

namespace alexcert {

struct LaurentMatrix {
    int dim = 0;
    std::vector<std::vector<HalfLaurent>> entries;

    static LaurentMatrix identity(int dim);
};

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b);

// Exact determinant: memoized cofactor expansion for small matrices,
// fraction-free elimination beyond.
HalfLaurent det_laurent(const LaurentMatrix& m);

// Conway-normalized Alexander polynomial det(t^{-1/2} V - t^{1/2} V^T) of a
// Seifert matrix with the diagonal -1 convention.
HalfLaurent from_seifert(const SeifertMatrix& v);

// Recursive skein-relation evaluation over positive braid words, memoized on
// the cyclic canonical form. Independent of the Seifert-matrix route.
class SkeinOracle {
public:
    HalfLaurent operator()(const PositiveBraidWord& w);

private:
    std::unordered_map<std::string, HalfLaurent> memo_;
};

HalfLaurent skein_oracle(const PositiveBraidWord& w);

// Reduced-Burau route: det(burau(w) - I) / (1 + t + ... + t^{n-1}), then the
// unique +-t^{k/2} unit normalization to a Conway-valid polynomial with
// positive leading coefficient. Requires full support, n >= 2. Throws
// std::domain_error if the division is not exact or no unit works.
HalfLaurent burau_poly(const PositiveBraidWord& w);

// Default route: 1 for one strand, 0 for split words, otherwise the product
// of Seifert determinants over connected-sum factors.
HalfLaurent braid_poly(const PositiveBraidWord& w);

HalfLaurent tree_poly(const PlaneTree& t);

}  // namespace alexcert
