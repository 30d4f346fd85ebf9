#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbg {

// Finite simple graph on vertices 1..n. Edges are stored normalized (i < j)
// and sorted; loops and duplicates are rejected at construction.
class SimpleGraph {
  public:
    using Edge = std::pair<int, int>;

    SimpleGraph() : n_(0) {}

    explicit SimpleGraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    SimpleGraph(int n, std::vector<Edge> edges) : SimpleGraph(n) {
        for (auto& e : edges) add_edge(e.first, e.second);
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    bool has_edge(int i, int j) const {
        if (!has_vertex(i) || !has_vertex(j) || i == j) return false;
        return std::binary_search(edges_.begin(), edges_.end(), normalize(i, j));
    }

    void add_edge(int i, int j) {
        Edge e = normalize(i, j);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e)
            throw std::invalid_argument("duplicate edge {" + std::to_string(i) + "," +
                                        std::to_string(j) + "}");
        edges_.insert(it, e);
    }

    void remove_edge(int i, int j) {
        Edge e = normalize(i, j);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            throw std::invalid_argument("absent edge {" + std::to_string(i) + "," +
                                        std::to_string(j) + "}");
        edges_.erase(it);
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& e : edges_) d += (e.first == v || e.second == v);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (const auto& e : edges_) {
            if (e.first == v) out.push_back(e.second);
            if (e.second == v) out.push_back(e.first);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Adjacency rows as bitmasks (bit v-1 for vertex v); only for n <= 32.
    std::vector<std::uint32_t> adjacency_masks() const {
        if (n_ > 32) throw std::invalid_argument("adjacency masks need n <= 32");
        std::vector<std::uint32_t> adj(n_, 0);
        for (const auto& e : edges_) {
            adj[e.first - 1] |= 1u << (e.second - 1);
            adj[e.second - 1] |= 1u << (e.first - 1);
        }
        return adj;
    }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

  private:
    Edge normalize(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
        return i < j ? Edge{i, j} : Edge{j, i};
    }
    void check_vertex(int v) const {
        if (!has_vertex(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n_));
    }

    int n_;
    std::vector<Edge> edges_;
};

// An injective assignment of pattern vertices 1..k to host vertices.
struct VertexMap {
    std::vector<int> image;  // image[i-1] = host vertex assigned to pattern vertex i

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("vertex map argument outside domain");
        return image[i - 1];
    }
    bool is_injective() const {
        std::set<int> s(image.begin(), image.end());
        return s.size() == image.size();
    }
    // Every pattern edge must land on a host edge.
    bool is_embedding(const SimpleGraph& pattern, const SimpleGraph& host) const {
        if (size() != pattern.vertex_count() || !is_injective()) return false;
        for (int v : image)
            if (!host.has_vertex(v)) return false;
        for (const auto& e : pattern.edges())
            if (!host.has_edge((*this)(e.first), (*this)(e.second))) return false;
        return true;
    }
};

inline SimpleGraph complement(const SimpleGraph& g) {
    int n = g.vertex_count();
    SimpleGraph c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

// Two distinct vertices with identical neighbor sets (necessarily
// non-adjacent, since neither can appear in its own set).
inline bool has_twins(const SimpleGraph& g) {
    int n = g.vertex_count();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (g.neighbors(u) == g.neighbors(v)) return true;
    return false;
}

inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n + 1, 0);
    int c = 0;
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (comp[s]) continue;
        ++c;
        std::vector<int> stack{s}, members;
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (!comp[w]) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// Common named graphs, used repeatedly by tests and fixtures.
inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace cbg
