#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alexcert {

// A word in the positive generators sigma_1 .. sigma_{n-1} of the braid group
// on n strands. The empty word on n strands closes to the n-component unlink.
struct PositiveBraidWord {
    int strands = 1;
    std::vector<int> letters;  // each in [1, strands-1]

    bool operator==(const PositiveBraidWord& other) const = default;
};

// Raised when the relation-preserving square search exhausts the reachable
// class without finding two equal adjacent letters.
struct SquareSearchExhausted : std::runtime_error {
    explicit SquareSearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

void validate_word(const PositiveBraidWord& w);

std::set<int> missing_generators(const PositiveBraidWord& w);
bool has_full_support(const PositiveBraidWord& w);

// Splits off connected-sum factors at generators occurring exactly once,
// recursively; unknot factors are dropped. Requires full support. An empty
// result means the closure is the unknot.
std::vector<PositiveBraidWord> factor_single_occurrence(const PositiveBraidWord& w);

// Lexicographically minimal cyclic rotation; memo/dedup key for closures.
PositiveBraidWord cyclic_canonical(const PositiveBraidWord& w);

// "n:l1,l2,..." form of the canonical rotation, for hash maps.
std::string canonical_key(const PositiveBraidWord& w);

// Searches the conjugacy class of w (cyclic rotations, far commutations,
// braid relations; all length-preserving) for a word with two equal adjacent
// letters, breadth-first, and returns the first one found. Requires full
// support and every generator occurring at least twice.
PositiveBraidWord find_square_rewrite(const PositiveBraidWord& w);

// Word whose closure is the connected sum of the two closures: letters of b
// shifted up by a.strands - 1 on a.strands + b.strands - 1 strands.
PositiveBraidWord connected_sum_word(const PositiveBraidWord& a, const PositiveBraidWord& b);

// (sigma_1 ... sigma_{p-1})^q on p strands, closing to the torus link T(p,q).
PositiveBraidWord torus_word(int p, int q);

// All full-support words with 2 <= n <= max_strands and length <= max_len,
// one representative per cyclic class, ordered by (n, length, lex).
std::vector<PositiveBraidWord> enumerate_words(int max_strands, int max_len);

// Number of components of the closure (cycles of the underlying permutation).
int closure_components(const PositiveBraidWord& w);

PositiveBraidWord word_with_letter_removed(const PositiveBraidWord& w, int index);

// Text format "n: l1 l2 ... lk"; also accepts comma-separated letters.
std::string format_word(const PositiveBraidWord& w);
PositiveBraidWord parse_word(const std::string& text);
PositiveBraidWord parse_word_flags(int strands, const std::string& letters_csv);

}  // namespace alexcert
