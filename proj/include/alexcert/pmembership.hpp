#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexcert/alexander.hpp"
#include "alexcert/braid.hpp"
#include "alexcert/laurent.hpp"
#include "alexcert/surfaces.hpp"

namespace alexcert {

// Input whose closure is the unknot, split, or otherwise outside the
// certificate generators' scope.
struct NotInScopeError : std::runtime_error {
    explicit NotInScopeError(const std::string& what) : std::runtime_error(what) {}
};

// Derivation tree witnessing membership in the set of links generated from
// the positive Hopf link by Hopf-band plumbing steps whose cut surface
// satisfies the star condition. Certificates store combinatorial data only;
// the verifier recomputes every polynomial.
struct PCertificate {
    enum class Kind { HopfBase, BraidStep, TreeStep, SumStep };

    Kind kind = Kind::HopfBase;

    // BraidStep: word with two equal adjacent letters at square_at (1-based);
    // the child certifies the closure with one of the two letters removed,
    // the cut link is the closure with both removed.
    PositiveBraidWord word;
    int square_at = 0;
    PositiveBraidWord l_minus_word;
    int b1_minus = 0;  // BraidStep: brick count of the cut word;
                       // TreeStep: vertex count of the cut forest

    // TreeStep: tree with the removed leaf (preorder index); the child
    // certifies the tree without the leaf, the cut link is the connected sum
    // over the forest without leaf and parent.
    PlaneTree tree;
    int leaf = -1;
    std::vector<PlaneTree> forest;

    // one child for BraidStep/TreeStep, two for SumStep
    std::vector<std::unique_ptr<PCertificate>> children;
};

struct ConditionStar {
    bool holds = false;
    std::int64_t c = 0;  // coefficient of t^{b1_minus/2} in the cut polynomial
};

// The star condition: the coefficient of t^{b1(cut surface)/2} in the cut
// link's polynomial is at most 1.
ConditionStar condition_star(const HalfLaurent& delta_minus, int b1_minus);

PCertificate certify_braid(const PositiveBraidWord& w);
PCertificate certify_tree(const PlaneTree& t);
PCertificate certify_sum(PCertificate a, PCertificate b);

struct NodeRecord {
    std::string path;  // "root", "root.0", "root.0.1", ...
    std::string kind;
    int b1_minus = 0;
    std::int64_t c = 0;
    bool has_c = false;
    bool ok = true;
    std::string failure;
};

struct VerificationReport {
    bool valid = false;
    HalfLaurent delta;
    AlexSummary root;
    std::vector<NodeRecord> nodes;
    std::string first_failure;  // "<path>: <message>" of the first failed check
};

// Bottom-up verification: recomputes all three polynomials at every step
// node, checks the skein identity, the star condition, and the coefficient
// bookkeeping alpha(L+) = alpha(L0), beta(L+) = c - alpha(L0) + beta(L0).
// Total: failures are reported, never thrown.
VerificationReport verify(const PCertificate& cert);

struct ItoCase {
    PositiveBraidWord word;
    int prime_summands = 0;
};

struct ItoReport {
    int cases = 0;
    std::vector<std::string> failures;
};

// For knots built as connected sums of prime positive braid knots, checks
// that -beta equals the number of prime summands.
ItoReport ito_summand_check(const std::vector<ItoCase>& cases);

// Certificate JSON, shape {"kind": "braid_step", "word": "3: 2 2 1 2 2 1",
// "square_at": 1, "l_minus_b1": 2, "child": {...}}.
std::string certificate_to_json(const PCertificate& cert);
PCertificate certificate_from_json(const std::string& json_text);

}  // namespace alexcert
