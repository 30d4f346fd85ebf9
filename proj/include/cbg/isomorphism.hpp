#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cbg {

namespace detail {

// Upper-triangle adjacency bits of g under the labeling pi (pi[k] = original
// vertex placed at new label k+1), read column by column: (1,2), (1,3),
// (2,3), (1,4), (2,4), (3,4), ...
inline std::vector<char> column_string(const SimpleGraph& g, const std::vector<int>& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<char> s;
    s.reserve(std::size_t(n) * (n - 1) / 2);
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i) s.push_back(g.has_edge(pi[i], pi[k]) ? 1 : 0);
    return s;
}

}  // namespace detail

// Canonical form: the lexicographically smallest upper-triangle adjacency
// bitstring over all vertex relabelings (column-major bit order, so each new
// vertex extends the string). Degree-guided backtracking with prefix pruning;
// candidates that can only produce a string larger than the best known are
// cut. Worst case factorial, hence guarded.
inline std::vector<char> canonical_form(const SimpleGraph& g, int max_vertices = 10) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw GuardError("canonical form guard: " + std::to_string(n) + " vertices, limit " +
                         std::to_string(max_vertices));
    if (n <= 1) return {};

    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 1);
    std::vector<char> best = detail::column_string(g, ident);

    std::size_t bits = std::size_t(n) * (n - 1) / 2;
    std::vector<char> cur(bits, 0);
    std::vector<int> pi;
    pi.reserve(n);
    std::vector<char> taken(n + 1, 0);

    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 1);
    std::vector<int> deg(n + 1);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });

    // maybe_less: the current prefix was strictly below `best` at the moment
    // it was compared; used only to skip pruning, never to skip the final
    // full comparison (best may have improved since).
    const std::function<void(int, std::size_t, bool)> rec = [&](int k, std::size_t pos,
                                                                bool maybe_less) {
        if (k == n) {
            if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end()))
                best = cur;
            return;
        }
        for (int v : cand) {
            if (taken[v]) continue;
            std::size_t p = pos;
            bool less = maybe_less, ok = true;
            for (int i = 0; i < k; ++i, ++p) {
                char b = g.has_edge(pi[i], v) ? 1 : 0;
                cur[p] = b;
                if (!less) {
                    if (b > best[p]) {
                        ok = false;
                        break;
                    }
                    if (b < best[p]) less = true;
                }
            }
            if (!ok) continue;
            taken[v] = 1;
            pi.push_back(v);
            rec(k + 1, pos + k, less);
            pi.pop_back();
            taken[v] = 0;
        }
    };
    rec(0, 0, false);
    return best;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int max_vertices = 10) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const SimpleGraph& g) {
        std::vector<int> d;
        for (int v = 1; v <= g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace cbg
