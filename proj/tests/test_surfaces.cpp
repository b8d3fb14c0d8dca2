#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "alexcert/alexander.hpp"
#include "alexcert/surfaces.hpp"

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

// from_seifert applied after a simultaneous row/column permutation
HalfLaurent delta_of_permuted(const SeifertMatrix& m, const std::vector<int>& perm) {
    SeifertMatrix p = m;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            p.entries[i][j] = m.entries[perm[i]][perm[j]];
    return from_seifert(p);
}

}  // namespace

TEST_CASE("bricks") {
    CHECK(bricks(word(2, {1, 1})) == std::vector<Brick>{{1, 1, 2}});
    CHECK(bricks(word(3, {1, 2, 1, 2})) == std::vector<Brick>{{1, 1, 3}, {2, 2, 4}});
    CHECK(bricks(word(2, {1, 1, 1})) == std::vector<Brick>{{1, 1, 2}, {1, 2, 3}});
    CHECK(bricks(word(3, {1, 2})).empty());
}

TEST_CASE("seifert_from_braid") {
    SUBCASE("Hopf") {
        SeifertMatrix m = seifert_from_braid(word(2, {1, 1}));
        CHECK(m.dim == 1);
        CHECK(m.entries == std::vector<std::vector<int>>{{-1}});
        CHECK(m.components == 1);
        CHECK(m.euler == 0);
    }
    SUBCASE("trefoil") {
        SeifertMatrix m = seifert_from_braid(word(2, {1, 1, 1}));
        CHECK(m.entries == std::vector<std::vector<int>>{{-1, 1}, {0, -1}});
    }
    SUBCASE("T(3,3) calibration matrix") {
        // bricks in column-major order: x1=(1;1,3), x2=(1;3,5), y1=(2;2,4),
        // y2=(2;4,6). The interleaved entry sits on the smaller-column brick.
        SeifertMatrix m = seifert_from_braid(word(3, {1, 2, 1, 2, 1, 2}));
        REQUIRE(m.dim == 4);
        CHECK(m.entries == std::vector<std::vector<int>>{{-1, 1, 1, 0},
                                                         {0, -1, -1, 1},
                                                         {0, 0, -1, 1},
                                                         {0, 0, 0, -1}});
        CHECK(from_seifert(m) == poly({{4, 1}, {2, -1}, {-2, -1}, {-4, 1}}));
    }
    SUBCASE("surface bookkeeping invariant dim = components - euler") {
        for (const auto& w : enumerate_words(4, 7)) {
            SeifertMatrix m = seifert_from_braid(w);
            CHECK(m.dim == m.components - m.euler);
            CHECK(m.dim == static_cast<int>(bricks(w).size()));
            CHECK(m.dim == betti_data(w).b1);
        }
    }
    SUBCASE("split word gives a block matrix, disconnected surface") {
        SeifertMatrix m = seifert_from_braid(word(3, {1, 1}));
        CHECK(m.dim == 1);
        CHECK(m.components == 2);
    }
}

TEST_CASE("brick permutation invariance of the polynomial") {
    std::mt19937 rng(23);
    for (const auto& w : {word(3, {1, 2, 1, 2, 1, 2}), word(4, {1, 2, 3, 2, 1, 2, 3, 2}),
                          word(2, {1, 1, 1, 1, 1})}) {
        SeifertMatrix m = seifert_from_braid(w);
        HalfLaurent base = from_seifert(m);
        std::vector<int> perm(m.dim);
        for (int i = 0; i < m.dim; ++i) perm[i] = i;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(delta_of_permuted(m, perm) == base);
        }
    }
}

TEST_CASE("seifert_from_tree") {
    SeifertMatrix m = seifert_from_tree(single_vertex_tree());
    CHECK(m.entries == std::vector<std::vector<int>>{{-1}});
    CHECK(m.components == 1);
    CHECK(m.euler == 0);

    m = seifert_from_tree(path_tree(3));
    CHECK(m.entries ==
          std::vector<std::vector<int>>{{-1, 1, 0}, {0, -1, 1}, {0, 0, -1}});
    CHECK(from_seifert(m) == poly({{3, 1}, {1, -1}, {-1, 1}, {-3, -1}}));

    // star with three leaves: determinant u^4 + 3u^2 = T(3,3) polynomial
    CHECK(tree_poly(parse_tree("v(v)(v)(v)")) ==
          poly({{4, 1}, {2, -1}, {-2, -1}, {-4, 1}}));
}

TEST_CASE("betti_data") {
    BettiData d = betti_data(word(2, {1, 1}));
    CHECK(d.b1 == 1);
    CHECK(d.components == 1);
    d = betti_data(word(3, {1, 1}));
    CHECK(d.b1 == 1);
    CHECK(d.components == 2);
    d = betti_data(word(3, {1, 2, 1, 2}));
    CHECK(d.b1 == 2);
    CHECK(d.components == 1);
}

TEST_CASE("tree text format") {
    CHECK(format_tree(path_tree(3)) == "v(v(v))");
    CHECK(parse_tree("v(v(v))") == path_tree(3));
    CHECK(parse_tree(" v ( v ) ( v ) ( v ) ").size() == 4);
    CHECK(parse_tree("v") == single_vertex_tree());
    CHECK_THROWS_AS(parse_tree("v(v"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("w"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("v(v))"), std::invalid_argument);
}

TEST_CASE("leaf operations") {
    PlaneTree t = parse_tree("v(v(v))(v)");
    int leaf = deepest_leftmost_leaf(t);
    CHECK(leaf == 2);
    CHECK(format_tree(remove_leaf(t, leaf)) == "v(v)(v)");
    // cutting leaf 2 and its parent leaves the root with its other child
    auto forest = forest_without_leaf_and_parent(t, leaf);
    REQUIRE(forest.size() == 1);
    CHECK(forest[0] == path_tree(2));

    // removing a leaf directly under the root: the other child subtrees
    // survive and there is no root-side component
    PlaneTree star = parse_tree("v(v)(v)(v)");
    CHECK(deepest_leftmost_leaf(star) == 1);
    auto f2 = forest_without_leaf_and_parent(star, 1);
    CHECK(f2.size() == 2);

    CHECK_THROWS_AS(remove_leaf(t, 1), std::invalid_argument);
    CHECK_THROWS_AS(remove_leaf(single_vertex_tree(), 0), std::invalid_argument);
}

TEST_CASE("reroot and child-order invariance of the polynomial") {
    for (int n = 1; n <= 7; ++n) {
        std::map<std::string, HalfLaurent> by_abstract_class;
        for (const auto& t : enumerate_plane_trees(n)) {
            HalfLaurent p = tree_poly(t);
            for (int v = 0; v < t.size(); ++v) CHECK(tree_poly(reroot(t, v)) == p);
            // all plane trees with the same abstract key share one polynomial
            auto [it, fresh] = by_abstract_class.emplace(abstract_tree_key(t), p);
            if (!fresh) CHECK(it->second == p);
        }
    }
}

TEST_CASE("enumerate_plane_trees") {
    // Catalan counts of rooted ordered trees
    CHECK(enumerate_plane_trees(1).size() == 1);
    CHECK(enumerate_plane_trees(2).size() == 1);
    CHECK(enumerate_plane_trees(3).size() == 2);
    CHECK(enumerate_plane_trees(4).size() == 5);
    CHECK(enumerate_plane_trees(5).size() == 14);
    CHECK(enumerate_plane_trees(6).size() == 42);
    CHECK(enumerate_plane_trees(7).size() == 132);
    SUBCASE("no duplicates") {
        for (int n = 1; n <= 6; ++n) {
            auto ts = enumerate_plane_trees(n);
            std::set<std::string> seen;
            for (const auto& t : ts) {
                CHECK(t.size() == n);
                CHECK(seen.insert(format_tree(t)).second);
            }
        }
    }
}

TEST_CASE("abstract_tree_key") {
    CHECK(abstract_tree_key(path_tree(4)) ==
          abstract_tree_key(reroot(path_tree(4), 3)));
    CHECK(abstract_tree_key(parse_tree("v(v)(v(v))")) ==
          abstract_tree_key(parse_tree("v(v(v))(v)")));
    CHECK(abstract_tree_key(path_tree(4)) != abstract_tree_key(parse_tree("v(v)(v)(v)")));
}
