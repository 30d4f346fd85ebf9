#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace cbg {

// A degree-1 class written in the vertex-dual coordinates of its defining
// graph: coefficient i multiplies the dual of vertex i.
class Degree1Vector {
  public:
    Degree1Vector(SimpleGraph graph, PrimeField field, std::vector<std::int64_t> coeffs)
        : graph_(std::move(graph)), field_(field) {
        if (static_cast<int>(coeffs.size()) != graph_.vertex_count())
            throw std::invalid_argument("coefficient count differs from vertex count");
        coeffs_.reserve(coeffs.size());
        for (std::int64_t c : coeffs) coeffs_.push_back(field_.reduce(c));
    }

    static Degree1Vector from_reduced(SimpleGraph graph, PrimeField field,
                                      std::vector<std::uint32_t> coeffs) {
        Degree1Vector v(std::move(graph), field);
        if (static_cast<int>(coeffs.size()) != v.graph_.vertex_count())
            throw std::invalid_argument("coefficient count differs from vertex count");
        v.coeffs_ = std::move(coeffs);
        return v;
    }

    const SimpleGraph& graph() const { return graph_; }
    const PrimeField& field() const { return field_; }
    int size() const { return static_cast<int>(coeffs_.size()); }

    std::uint32_t coeff(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("coefficient index outside 1..n");
        return coeffs_[static_cast<std::size_t>(i) - 1];
    }

    bool operator==(const Degree1Vector& o) const {
        return graph_ == o.graph_ && field_ == o.field_ && coeffs_ == o.coeffs_;
    }

  private:
    Degree1Vector(SimpleGraph graph, PrimeField field)
        : graph_(std::move(graph)), field_(field) {}

    SimpleGraph graph_;
    PrimeField field_;
    std::vector<std::uint32_t> coeffs_;
};

// A degree-2 class in the edge-dual coordinates of its defining graph; only
// nonzero coefficients are stored, and the support can only contain edges of
// the graph.
class Degree2Vector {
  public:
    using Edge = SimpleGraph::Edge;

    Degree2Vector(SimpleGraph graph, PrimeField field)
        : graph_(std::move(graph)), field_(field) {}

    const SimpleGraph& graph() const { return graph_; }
    const PrimeField& field() const { return field_; }

    void set(int i, int j, std::uint32_t value) {
        if (i > j) std::swap(i, j);
        if (!graph_.has_edge(i, j))
            throw std::invalid_argument("degree-2 coordinate {" + std::to_string(i) + "," +
                                        std::to_string(j) + "} is not an edge");
        if (value == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = value;
    }

    std::uint32_t value_on(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    bool is_zero() const { return entries_.empty(); }
    const std::map<Edge, std::uint32_t>& support() const { return entries_; }

    bool operator==(const Degree2Vector& o) const {
        return graph_ == o.graph_ && field_ == o.field_ && entries_ == o.entries_;
    }

  private:
    SimpleGraph graph_;
    PrimeField field_;
    std::map<Edge, std::uint32_t> entries_;
};

// Cup product of two degree-1 classes.  With the orientation convention that
// edge {i<j} carries the pair (i,j) in that order, the coefficient on it is
// u_i v_j - u_j v_i; pairs that are not edges of the graph multiply to zero.
inline Degree2Vector cup_deg1(const SimpleGraph& graph, const Degree1Vector& u,
                              const Degree1Vector& v) {
    if (u.graph() != graph || v.graph() != graph)
        throw std::invalid_argument("cup product arguments defined over a different graph");
    if (u.field() != v.field())
        throw std::invalid_argument("cup product arguments over different fields");
    const PrimeField& f = u.field();
    Degree2Vector out(graph, f);
    for (const auto& [i, j] : graph.edges()) {
        std::uint32_t c = f.sub(f.mul(u.coeff(i), v.coeff(j)), f.mul(u.coeff(j), v.coeff(i)));
        if (c != 0) out.set(i, j, c);
    }
    return out;
}

// Rows r and s of A are null-connected over the graph when every edge {i,j}
// selects a singular 2x2 minor on those rows; equivalently the cup product
// of the two row classes vanishes.
inline bool null_connected(const SimpleGraph& graph, const PrimeFieldMatrix& a, int r, int s) {
    if (r == s) throw std::invalid_argument("null-connectedness needs two distinct rows");
    if (r < 1 || r > a.rows() || s < 1 || s > a.rows())
        throw std::out_of_range("row index outside matrix");
    for (const auto& [i, j] : graph.edges())
        if (!minor2_is_singular(a, r, s, i, j)) return false;
    return true;
}

// A basis of the degree-1 cohomology of the group defined by the graph: an
// invertible coordinate matrix whose row r expresses the r-th basis vector
// in vertex-dual coordinates.
class CohomologyBasis {
  public:
    CohomologyBasis(SimpleGraph graph, PrimeFieldMatrix a)
        : graph_(std::move(graph)), a_(std::move(a)) {
        if (a_.rows() != a_.cols() || a_.rows() != graph_.vertex_count())
            throw std::invalid_argument("basis matrix must be square of size |V|");
        if (!is_invertible(a_))
            throw SingularMatrixError("basis matrix is singular: rows do not form a basis");
    }

    const SimpleGraph& graph() const { return graph_; }
    const PrimeFieldMatrix& matrix() const { return a_; }
    const PrimeField& field() const { return a_.field(); }
    int size() const { return a_.rows(); }

    Degree1Vector row_vector(int r) const {
        auto row = a_.row(r);
        return Degree1Vector::from_reduced(graph_, a_.field(), std::move(row));
    }

  private:
    SimpleGraph graph_;
    PrimeFieldMatrix a_;
};

// The graph on the basis rows whose edges are the pairs with nonvanishing
// cup product.
inline SimpleGraph cohomology_basis_graph(const CohomologyBasis& basis) {
    int n = basis.size();
    SimpleGraph out(n);
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            if (!null_connected(basis.graph(), basis.matrix(), r, s)) out.add_edge(r, s);
    return out;
}

inline SimpleGraph cohomology_basis_graph(const SimpleGraph& graph, const PrimeFieldMatrix& a) {
    return cohomology_basis_graph(CohomologyBasis(graph, a));
}

// Edge counts of the defining graph and of the basis graph, with the flag
// telling whether the basis achieves the minimum possible count (which the
// defining graph itself realizes via the identity basis).
struct EdgeReport {
    std::size_t defining_edges = 0;
    std::size_t basis_graph_edges = 0;
    bool minimal = false;
};

inline EdgeReport edge_report(const CohomologyBasis& basis) {
    EdgeReport rep;
    rep.defining_edges = basis.graph().edge_count();
    rep.basis_graph_edges = cohomology_basis_graph(basis).edge_count();
    rep.minimal = rep.basis_graph_edges == rep.defining_edges;
    return rep;
}

}  // namespace cbg
