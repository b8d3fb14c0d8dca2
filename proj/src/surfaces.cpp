#include "alexcert/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace alexcert {

std::vector<Brick> bricks(const PositiveBraidWord& w) {
    std::vector<Brick> out;
    for (int col = 1; col <= w.strands - 1; ++col) {
        int prev = 0;
        for (int pos = 1; pos <= static_cast<int>(w.letters.size()); ++pos) {
            if (w.letters[pos - 1] != col) continue;
            if (prev != 0) out.push_back({col, prev, pos});
            prev = pos;
        }
    }
    return out;
}

namespace {

bool interleaved(const Brick& x, const Brick& y) {
    return (x.top < y.top && y.top < x.bottom && x.bottom < y.bottom) ||
           (y.top < x.top && x.top < y.bottom && y.bottom < x.bottom);
}

}  // namespace

SeifertMatrix seifert_from_braid(const PositiveBraidWord& w) {
    validate_word(w);
    std::vector<Brick> bs = bricks(w);
    const int dim = static_cast<int>(bs.size());
    SeifertMatrix m;
    m.dim = dim;
    m.entries.assign(dim, std::vector<int>(dim, 0));
    for (int i = 0; i < dim; ++i) m.entries[i][i] = -1;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            const Brick& x = bs[i];
            const Brick& y = bs[j];
            if (x.column == y.column && x.bottom == y.top) {
                // consecutive bands in one column
                m.entries[i][j] = 1;
            } else if (std::abs(x.column - y.column) == 1 && interleaved(x, y)) {
                // interleaved bands in adjacent columns: the band in the
                // smaller column carries the entry, +1 if it starts first.
                // Nested and disjoint pairs stay 0. Calibrated against the
                // skein recursion on all full-support words up to length 8.
                if (x.column < y.column) m.entries[i][j] = x.top < y.top ? 1 : -1;
            }
        }
    }
    m.components = 1 + static_cast<int>(missing_generators(w).size());
    m.euler = w.strands - static_cast<int>(w.letters.size());
    return m;
}

SeifertMatrix seifert_from_tree(const PlaneTree& t) {
    const int n = t.size();
    if (n == 0) throw std::invalid_argument("empty tree");
    SeifertMatrix m;
    m.dim = n;
    m.entries.assign(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v) {
        m.entries[v][v] = -1;
        for (int c : t.nodes[v].children) m.entries[v][c] = 1;
    }
    m.components = 1;
    m.euler = 1 - n;
    return m;
}

BettiData betti_data(const PositiveBraidWord& w) {
    BettiData d;
    d.components = 1 + static_cast<int>(missing_generators(w).size());
    d.b1 = static_cast<int>(w.letters.size()) - w.strands + d.components;
    return d;
}

namespace {

int parse_tree_rec(const std::string& s, size_t& i, PlaneTree& t, int parent) {
    if (i >= s.size() || s[i] != 'v')
        throw std::invalid_argument("expected 'v' at position " + std::to_string(i));
    ++i;
    int me = t.size();
    t.nodes.push_back({parent, {}});
    while (i < s.size() && s[i] == '(') {
        ++i;
        int child = parse_tree_rec(s, i, t, me);
        t.nodes[me].children.push_back(child);
        if (i >= s.size() || s[i] != ')')
            throw std::invalid_argument("expected ')' at position " + std::to_string(i));
        ++i;
    }
    return me;
}

// Appends a copy of src's subtree at src_v as a child of dst_parent (or as
// the root when dst_parent is -1), preserving preorder.
int graft(PlaneTree& dst, int dst_parent, const PlaneTree& src, int src_v) {
    int me = dst.size();
    dst.nodes.push_back({dst_parent, {}});
    if (dst_parent >= 0) dst.nodes[dst_parent].children.push_back(me);
    for (int c : src.nodes[src_v].children) graft(dst, me, src, c);
    return me;
}

}  // namespace

PlaneTree parse_tree(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t i = 0;
    PlaneTree t;
    parse_tree_rec(s, i, t, -1);
    if (i != s.size())
        throw std::invalid_argument("trailing characters in tree text at position " +
                                    std::to_string(i));
    return t;
}

std::string format_tree(const PlaneTree& t) {
    std::string out;
    std::function<void(int)> rec = [&](int v) {
        out += 'v';
        for (int c : t.nodes[v].children) {
            out += '(';
            rec(c);
            out += ')';
        }
    };
    if (t.size() == 0) throw std::invalid_argument("empty tree");
    rec(0);
    return out;
}

PlaneTree single_vertex_tree() {
    PlaneTree t;
    t.nodes.push_back({-1, {}});
    return t;
}

PlaneTree path_tree(int vertices) {
    if (vertices < 1) throw std::invalid_argument("path_tree requires >= 1 vertex");
    PlaneTree t;
    for (int v = 0; v < vertices; ++v) {
        t.nodes.push_back({v - 1, {}});
        if (v > 0) t.nodes[v - 1].children.push_back(v);
    }
    return t;
}

int deepest_leftmost_leaf(const PlaneTree& t) {
    int best = -1, best_depth = -1;
    std::function<void(int, int)> rec = [&](int v, int depth) {
        if (t.nodes[v].children.empty()) {
            if (depth > best_depth) {
                best = v;
                best_depth = depth;
            }
            return;
        }
        for (int c : t.nodes[v].children) rec(c, depth + 1);
    };
    rec(0, 0);
    return best;
}

PlaneTree remove_leaf(const PlaneTree& t, int leaf) {
    if (leaf < 0 || leaf >= t.size()) throw std::out_of_range("leaf index out of range");
    if (!t.nodes[leaf].children.empty())
        throw std::invalid_argument("vertex is not a leaf");
    if (t.size() == 1) throw std::invalid_argument("cannot remove the only vertex");
    if (leaf == 0) throw std::invalid_argument("leaf is the root of a larger tree");
    PlaneTree out;
    std::function<void(int, int)> rec = [&](int v, int parent) {
        int me = out.size();
        out.nodes.push_back({parent, {}});
        if (parent >= 0) out.nodes[parent].children.push_back(me);
        for (int c : t.nodes[v].children)
            if (c != leaf) rec(c, me);
    };
    rec(0, -1);
    return out;
}

std::vector<PlaneTree> forest_without_leaf_and_parent(const PlaneTree& t, int leaf) {
    if (leaf <= 0 || leaf >= t.size() || !t.nodes[leaf].children.empty())
        throw std::invalid_argument("expected a non-root leaf");
    const int parent = t.nodes[leaf].parent;
    std::vector<PlaneTree> forest;
    for (int c : t.nodes[parent].children) {
        if (c == leaf) continue;
        PlaneTree comp;
        graft(comp, -1, t, c);
        forest.push_back(std::move(comp));
    }
    if (parent != 0) {
        // component containing the root: T with the parent's subtree removed
        PlaneTree rest;
        std::function<void(int, int)> rec = [&](int v, int p) {
            int me = rest.size();
            rest.nodes.push_back({p, {}});
            if (p >= 0) rest.nodes[p].children.push_back(me);
            for (int c : t.nodes[v].children)
                if (c != parent) rec(c, me);
        };
        rec(0, -1);
        forest.push_back(std::move(rest));
    }
    return forest;
}

PlaneTree reroot(const PlaneTree& t, int new_root) {
    if (new_root < 0 || new_root >= t.size())
        throw std::out_of_range("vertex index out of range");
    std::vector<std::vector<int>> adj(t.size());
    for (int v = 0; v < t.size(); ++v)
        for (int c : t.nodes[v].children) {
            adj[v].push_back(c);
            adj[c].push_back(v);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    PlaneTree out;
    std::function<void(int, int, int)> rec = [&](int v, int from, int parent) {
        int me = out.size();
        out.nodes.push_back({parent, {}});
        if (parent >= 0) out.nodes[parent].children.push_back(me);
        for (int u : adj[v])
            if (u != from) rec(u, v, me);
    };
    rec(new_root, -1, -1);
    return out;
}

namespace {

std::string ahu_rooted(const std::vector<std::vector<int>>& adj, int v, int from) {
    std::vector<std::string> parts;
    for (int u : adj[v])
        if (u != from) parts.push_back(ahu_rooted(adj, u, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::string abstract_tree_key(const PlaneTree& t) {
    const int n = t.size();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (int c : t.nodes[v].children) {
            adj[v].push_back(c);
            adj[c].push_back(v);
        }
    // centroid(s) by iterative leaf pruning
    std::vector<int> degree(n);
    std::vector<int> layer, next;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        next.clear();
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : adj[v])
                if (!removed[u] && --degree[u] == 1) next.push_back(u);
        }
        layer.swap(next);
    }
    std::string best;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        std::string s = ahu_rooted(adj, v, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<PlaneTree> enumerate_plane_trees(int vertices) {
    if (vertices < 1) throw std::invalid_argument("vertex count must be >= 1");
    static std::map<int, std::vector<PlaneTree>> cache;
    auto it = cache.find(vertices);
    if (it != cache.end()) return it->second;
    std::vector<PlaneTree> out;
    if (vertices == 1) {
        out.push_back(single_vertex_tree());
    } else {
        // root plus an ordered sequence of subtrees: first subtree of size k,
        // remaining vertices form a smaller tree's forest. Recurse on
        // (first child subtree, tree with that subtree removed).
        for (int k = 1; k <= vertices - 1; ++k) {
            auto firsts = enumerate_plane_trees(k);
            auto rests = enumerate_plane_trees(vertices - k);
            for (const auto& rest : rests) {
                for (const auto& first : firsts) {
                    // attach `first` as the leftmost child subtree of rest's root
                    PlaneTree t;
                    t.nodes.push_back({-1, {}});
                    graft(t, 0, first, 0);
                    for (int c : rest.nodes[0].children) graft(t, 0, rest, c);
                    out.push_back(std::move(t));
                }
            }
        }
    }
    cache[vertices] = out;
    return out;
}

}  // namespace alexcert
