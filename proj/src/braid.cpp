#include "alexcert/braid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace alexcert {

void validate_word(const PositiveBraidWord& w) {
    if (w.strands < 1) throw std::invalid_argument("strand count must be >= 1");
    for (int l : w.letters)
        if (l < 1 || l > w.strands - 1)
            throw std::invalid_argument("generator index " + std::to_string(l) +
                                        " out of range for " + std::to_string(w.strands) +
                                        " strands");
}

std::set<int> missing_generators(const PositiveBraidWord& w) {
    std::vector<char> seen(std::max(w.strands, 1), 0);
    for (int l : w.letters) seen[l] = 1;
    std::set<int> missing;
    for (int i = 1; i <= w.strands - 1; ++i)
        if (!seen[i]) missing.insert(i);
    return missing;
}

bool has_full_support(const PositiveBraidWord& w) { return missing_generators(w).empty(); }

namespace {

void factor_rec(const PositiveBraidWord& w, std::vector<PositiveBraidWord>& out) {
    if (w.strands == 1) return;  // unknot factor, dropped
    // smallest generator occurring exactly once
    std::vector<int> count(w.strands, 0);
    for (int l : w.letters) ++count[l];
    int split = 0;
    for (int i = 1; i <= w.strands - 1; ++i)
        if (count[i] == 1) { split = i; break; }
    if (split == 0) {
        out.push_back(w);
        return;
    }
    PositiveBraidWord left{split, {}};
    PositiveBraidWord right{w.strands - split, {}};
    for (int l : w.letters) {
        if (l < split) left.letters.push_back(l);
        else if (l > split) right.letters.push_back(l - split);
    }
    factor_rec(left, out);
    factor_rec(right, out);
}

}  // namespace

std::vector<PositiveBraidWord> factor_single_occurrence(const PositiveBraidWord& w) {
    if (!has_full_support(w))
        throw std::invalid_argument("factor_single_occurrence requires full support");
    std::vector<PositiveBraidWord> out;
    factor_rec(w, out);
    return out;
}

PositiveBraidWord cyclic_canonical(const PositiveBraidWord& w) {
    const auto& v = w.letters;
    const size_t n = v.size();
    if (n == 0) return w;
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        for (size_t k = 0; k < n; ++k) {
            int a = v[(r + k) % n], b = v[(best + k) % n];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    PositiveBraidWord out{w.strands, {}};
    out.letters.reserve(n);
    for (size_t k = 0; k < n; ++k) out.letters.push_back(v[(best + k) % n]);
    return out;
}

std::string canonical_key(const PositiveBraidWord& w) {
    PositiveBraidWord c = cyclic_canonical(w);
    std::string key = std::to_string(c.strands) + ":";
    for (size_t i = 0; i < c.letters.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(c.letters[i]);
    }
    return key;
}

namespace {

bool has_adjacent_square(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) return true;
    return false;
}

// Rotation of w with a linear adjacent square, smallest rotation then
// smallest position; w must have a cyclically adjacent equal pair.
PositiveBraidWord rotate_to_square(const PositiveBraidWord& w) {
    const size_t n = w.letters.size();
    for (size_t r = 0; r < n; ++r) {
        std::vector<int> rot(n);
        for (size_t k = 0; k < n; ++k) rot[k] = w.letters[(r + k) % n];
        if (has_adjacent_square(rot)) return {w.strands, rot};
    }
    throw std::logic_error("rotate_to_square: no cyclic square present");
}

bool has_cyclic_square(const std::vector<int>& v) {
    const size_t n = v.size();
    if (n < 2) return false;
    for (size_t i = 0; i < n; ++i)
        if (v[i] == v[(i + 1) % n]) return true;
    return false;
}

}  // namespace

PositiveBraidWord find_square_rewrite(const PositiveBraidWord& w) {
    validate_word(w);
    if (!has_full_support(w))
        throw std::invalid_argument("find_square_rewrite requires full support");
    if (has_adjacent_square(w.letters)) return w;
    if (has_cyclic_square(w.letters)) return rotate_to_square(w);

    // BFS over the length-preserving move class, deduplicated by cyclic
    // canonical form. Far commutations and braid relations are applied at
    // every position of every rotation, which subsumes single rotations.
    std::deque<PositiveBraidWord> queue;
    std::unordered_set<std::string> visited;
    PositiveBraidWord start = cyclic_canonical(w);
    queue.push_back(start);
    visited.insert(canonical_key(start));
    const size_t n = w.letters.size();
    while (!queue.empty()) {
        PositiveBraidWord cur = queue.front();
        queue.pop_front();
        for (size_t r = 0; r < n; ++r) {
            std::vector<int> rot(n);
            for (size_t k = 0; k < n; ++k) rot[k] = cur.letters[(r + k) % n];
            // far commutations
            for (size_t p = 0; p + 1 < n; ++p) {
                if (std::abs(rot[p] - rot[p + 1]) >= 2) {
                    std::vector<int> next = rot;
                    std::swap(next[p], next[p + 1]);
                    PositiveBraidWord cand{cur.strands, std::move(next)};
                    std::string key = canonical_key(cand);
                    if (visited.insert(key).second) {
                        if (has_cyclic_square(cand.letters))
                            return rotate_to_square(cyclic_canonical(cand));
                        queue.push_back(cyclic_canonical(cand));
                    }
                }
            }
            // braid relations aba -> bab
            for (size_t p = 0; p + 2 < n; ++p) {
                if (rot[p] == rot[p + 2] && std::abs(rot[p] - rot[p + 1]) == 1) {
                    std::vector<int> next = rot;
                    // (a,b,a) -> (b,a,b)
                    next[p] = rot[p + 1];
                    next[p + 1] = rot[p];
                    next[p + 2] = rot[p + 1];
                    PositiveBraidWord cand{cur.strands, std::move(next)};
                    std::string key = canonical_key(cand);
                    if (visited.insert(key).second) {
                        if (has_cyclic_square(cand.letters))
                            return rotate_to_square(cyclic_canonical(cand));
                        queue.push_back(cyclic_canonical(cand));
                    }
                }
            }
        }
    }
    throw SquareSearchExhausted("no square reachable from " + format_word(w));
}

PositiveBraidWord connected_sum_word(const PositiveBraidWord& a, const PositiveBraidWord& b) {
    PositiveBraidWord out{a.strands + b.strands - 1, a.letters};
    const int shift = a.strands - 1;
    for (int l : b.letters) out.letters.push_back(l + shift);
    return out;
}

PositiveBraidWord torus_word(int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("torus_word requires p >= 2, q >= 1");
    PositiveBraidWord w{p, {}};
    w.letters.reserve(static_cast<size_t>(p - 1) * q);
    for (int rep = 0; rep < q; ++rep)
        for (int i = 1; i <= p - 1; ++i) w.letters.push_back(i);
    return w;
}

std::vector<PositiveBraidWord> enumerate_words(int max_strands, int max_len) {
    if (max_strands < 1 || max_len < 1)
        throw std::invalid_argument("enumeration bounds must be >= 1");
    std::vector<PositiveBraidWord> out;
    for (int n = 2; n <= max_strands; ++n) {
        for (int len = n - 1; len <= max_len; ++len) {
            std::vector<int> cur(len, 1);
            while (true) {
                PositiveBraidWord w{n, cur};
                if (has_full_support(w) && cyclic_canonical(w).letters == cur)
                    out.push_back(w);
                int pos = len - 1;
                while (pos >= 0 && cur[pos] == n - 1) cur[pos--] = 1;
                if (pos < 0) break;
                ++cur[pos];
            }
        }
    }
    return out;
}

int closure_components(const PositiveBraidWord& w) {
    std::vector<int> perm(w.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : w.letters) std::swap(perm[l - 1], perm[l]);
    std::vector<char> seen(w.strands, 0);
    int cycles = 0;
    for (int i = 0; i < w.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return cycles;
}

PositiveBraidWord word_with_letter_removed(const PositiveBraidWord& w, int index) {
    if (index < 0 || index >= static_cast<int>(w.letters.size()))
        throw std::out_of_range("letter index out of range");
    PositiveBraidWord out{w.strands, {}};
    out.letters.reserve(w.letters.size() - 1);
    for (int i = 0; i < static_cast<int>(w.letters.size()); ++i)
        if (i != index) out.letters.push_back(w.letters[i]);
    return out;
}

std::string format_word(const PositiveBraidWord& w) {
    std::ostringstream out;
    out << w.strands << ":";
    for (int l : w.letters) out << " " << l;
    return out.str();
}

PositiveBraidWord parse_word(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("braid word must be 'n: l1 l2 ...'");
    PositiveBraidWord w;
    try {
        w.strands = std::stoi(text.substr(0, colon));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad strand count in braid word");
    }
    std::string rest = text.substr(colon + 1);
    for (char& c : rest)
        if (c == ',') c = ' ';
    std::istringstream in(rest);
    int l;
    while (in >> l) w.letters.push_back(l);
    if (!in.eof())
        throw std::invalid_argument("bad letter in braid word");
    validate_word(w);
    return w;
}

PositiveBraidWord parse_word_flags(int strands, const std::string& letters_csv) {
    return parse_word(std::to_string(strands) + ": " + letters_csv);
}

}  // namespace alexcert
