#pragma once

#include <string>
#include <vector>

#include "alexcert/braid.hpp"

namespace alexcert {

// H1 generator of the fiber surface of a positive braid word: one band per
// pair of consecutive occurrences of a generator in its column. Positions are
// 1-based letter indices.
struct Brick {
    int column;
    int top;
    int bottom;

    bool operator==(const Brick&) const = default;
};

// Integer Seifert matrix with surface bookkeeping. The invariant
// dim = components - euler (b1 = c - chi) holds for every constructor here.
struct SeifertMatrix {
    int dim = 0;
    std::vector<std::vector<int>> entries;
    int components = 1;
    int euler = 1;
};

// Rooted ordered tree encoding an arborescent positive Hopf plumbing.
// Vertices are stored in depth-first preorder; vertex 0 is the root.
struct PlaneTree {
    struct Node {
        int parent = -1;
        std::vector<int> children;

        bool operator==(const Node&) const = default;
    };
    std::vector<Node> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
    bool operator==(const PlaneTree&) const = default;
};

std::vector<Brick> bricks(const PositiveBraidWord& w);

SeifertMatrix seifert_from_braid(const PositiveBraidWord& w);

SeifertMatrix seifert_from_tree(const PlaneTree& t);

struct BettiData {
    int b1 = 0;
    int components = 1;
};

BettiData betti_data(const PositiveBraidWord& w);

// Tree text format: one 'v' per vertex, children in parentheses,
// e.g. path-3 = "v(v(v))", star-4 = "v(v)(v)(v)".
PlaneTree parse_tree(const std::string& text);
std::string format_tree(const PlaneTree& t);

PlaneTree single_vertex_tree();
PlaneTree path_tree(int vertices);

// Deepest leaf, leftmost among those (preorder position breaks ties).
int deepest_leftmost_leaf(const PlaneTree& t);

// Tree with leaf v removed (preorder renumbering of the rest).
PlaneTree remove_leaf(const PlaneTree& t, int leaf);

// Components of T minus {leaf, parent(leaf)}: the parent's other child
// subtrees in order, then the component containing the root (if the parent
// is not the root).
std::vector<PlaneTree> forest_without_leaf_and_parent(const PlaneTree& t, int leaf);

// Re-roots the underlying abstract tree at the given vertex.
PlaneTree reroot(const PlaneTree& t, int new_root);

// Canonical string of the underlying unrooted abstract tree (centroid-rooted,
// children sorted); equal strings mean isomorphic abstract trees.
std::string abstract_tree_key(const PlaneTree& t);

// All rooted ordered trees with exactly n vertices, deterministic order.
std::vector<PlaneTree> enumerate_plane_trees(int vertices);

}  // namespace alexcert
