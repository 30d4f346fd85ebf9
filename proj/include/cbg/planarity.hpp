#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace cbg {

namespace detail {

// Left-right planarity criterion, decision variant: a DFS orientation is
// computed with lowpoints and nesting order, then back edges are partitioned
// into two interleaving-free sides using a stack of conflict pairs. A graph
// is planar iff the partition never forces a same-side interleaving.
class LeftRightTester {
  public:
    explicit LeftRightTester(const SimpleGraph& g) : n_(g.vertex_count()) {
        m_ = static_cast<int>(g.edge_count());
        src_.assign(m_, -1);
        dst_.assign(m_, -1);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        oriented_.assign(m_, false);
        lowpt_edge_.assign(m_, -1);
        ref_.assign(m_, -1);
        stack_bottom_.assign(m_, 0);
        height_.assign(n_ + 1, -1);
        parent_edge_.assign(n_ + 1, -1);
        inc_.assign(n_ + 1, {});
        int id = 0;
        for (const auto& e : g.edges()) {
            inc_[e.first].push_back({e.second, id});
            inc_[e.second].push_back({e.first, id});
            ++id;
        }
    }

    bool run() {
        if (n_ > 2 && m_ > 3 * n_ - 6) return false;
        std::vector<int> roots;
        for (int s = 1; s <= n_; ++s)
            if (height_[s] == -1) {
                height_[s] = 0;
                roots.push_back(s);
                orient(s);
            }
        out_.assign(n_ + 1, {});
        for (int e = 0; e < m_; ++e)
            if (oriented_[e]) out_[src_[e]].push_back(e);
        for (int v = 1; v <= n_; ++v)
            std::sort(out_[v].begin(), out_[v].end(), [&](int a, int b) {
                return nesting_[a] != nesting_[b] ? nesting_[a] < nesting_[b] : a < b;
            });
        for (int s : roots)
            if (!test(s)) return false;
        return true;
    }

  private:
    struct Interval {
        int lo = -1, hi = -1;
        bool empty() const { return lo == -1 && hi == -1; }
    };
    struct ConflictPair {
        Interval L, R;
        void swap_sides() { std::swap(L, R); }
    };

    void orient(int v) {
        int e = parent_edge_[v];
        for (const auto& [w, id] : inc_[v]) {
            if (oriented_[id]) continue;
            oriented_[id] = true;
            src_[id] = v;
            dst_[id] = w;
            lowpt_[id] = height_[v];
            lowpt2_[id] = height_[v];
            if (height_[w] == -1) {  // tree edge
                parent_edge_[w] = id;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {  // back edge
                lowpt_[id] = height_[w];
            }
            nesting_[id] = 2 * lowpt_[id];
            if (lowpt2_[id] < height_[v]) ++nesting_[id];  // chordal: needs to nest inside
            if (e != -1) {
                if (lowpt_[id] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
                    lowpt_[e] = lowpt_[id];
                } else if (lowpt_[id] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.hi] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty() && p.R.empty()) return INT_MAX;
        if (p.L.empty()) return lowpt_[p.R.lo];
        if (p.R.empty()) return lowpt_[p.L.lo];
        return std::min(lowpt_[p.L.lo], lowpt_[p.R.lo]);
    }

    bool test(int v) {
        int e = parent_edge_[v];
        bool first = true;
        for (int ei : out_[v]) {
            stack_bottom_[ei] = static_cast<int>(stack_.size());
            if (ei == parent_edge_[dst_[ei]]) {  // tree edge
                if (!test(dst_[ei])) return false;
            } else {  // back edge
                lowpt_edge_[ei] = ei;
                ConflictPair p;
                p.R = {ei, ei};
                stack_.push_back(p);
            }
            if (lowpt_[ei] < height_[v]) {  // ei has a return edge below v
                if (first) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != -1) remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // merge return edges of ei into p.R
        while (true) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.L.empty()) q.swap_sides();
            if (!q.L.empty()) return false;  // interleaving forced on both sides
            if (lowpt_[q.R.lo] > lowpt_[e]) {  // merge intervals
                if (p.R.empty())
                    p.R.hi = q.R.hi;
                else
                    ref_[p.R.lo] = q.R.hi;
                p.R.lo = q.R.lo;
            } else {  // align to the lowest return edge of e
                ref_[q.R.lo] = lowpt_edge_[e];
            }
            if (static_cast<int>(stack_.size()) == stack_bottom_[ei]) break;
        }
        // merge conflicting return edges of earlier siblings into p.L
        while (conflicting(stack_.back().L, ei) || conflicting(stack_.back().R, ei)) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.R, ei)) q.swap_sides();
            if (conflicting(q.R, ei)) return false;  // interleaving on both sides
            // merge the part below lowpt(ei) into p.R
            ref_[p.R.lo] = q.R.hi;
            if (q.R.lo != -1) p.R.lo = q.R.lo;
            if (p.L.empty())
                p.L.hi = q.L.hi;
            else
                ref_[p.L.lo] = q.L.hi;
            p.L.lo = q.L.lo;
        }
        if (!(p.L.empty() && p.R.empty())) stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e) {
        int u = src_[e];
        // drop conflict pairs whose lowest return edge ends at u
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.L.hi != -1 && dst_[p.L.hi] == u) p.L.hi = ref_[p.L.hi];
            if (p.L.hi == -1 && p.L.lo != -1) {  // just emptied
                ref_[p.L.lo] = p.R.lo;
                p.L.lo = -1;
            }
            while (p.R.hi != -1 && dst_[p.R.hi] == u) p.R.hi = ref_[p.R.hi];
            if (p.R.hi == -1 && p.R.lo != -1) {
                ref_[p.R.lo] = p.L.lo;
                p.R.lo = -1;
            }
            stack_.push_back(p);
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {  // e has a return edge
            int hl = stack_.back().L.hi, hr = stack_.back().R.hi;
            if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }

    int n_, m_;
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, lowpt_edge_, ref_, stack_bottom_;
    std::vector<char> oriented_;
    std::vector<int> height_, parent_edge_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    std::vector<std::vector<int>> out_;
    std::vector<ConflictPair> stack_;
};

}  // namespace detail

// Planarity by the DFS-based left-right criterion. Unguarded: linear-ish cost.
inline bool is_planar(const SimpleGraph& g) {
    return detail::LeftRightTester(g).run();
}

}  // namespace cbg
