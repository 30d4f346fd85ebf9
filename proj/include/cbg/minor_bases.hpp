#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "minor_ops.hpp"

namespace cbg {

// One row removed while cleaning up a transported basis, with the reason.
struct DiscardedRow {
    int row;             // 1-based index into the input matrix
    std::string reason;  // "zero after substitution" | "duplicate of row k" |
                         // "dependent on earlier rows"

    bool operator==(const DiscardedRow& o) const { return row == o.row && reason == o.reason; }
};

// A basis for the minor's degree-1 cohomology derived from a basis of the
// original graph's: the rows of `basis` are rows of the input matrix with the
// move's column substitution applied and the discards listed in `discarded`.
struct MinorBasisResult {
    SimpleGraph minor_graph;
    PrimeFieldMatrix basis;
    MinorOp op;
    std::vector<DiscardedRow> discarded;
};

namespace detail {

// Incremental row-space membership via reduced pivot rows.
class RowSpace {
  public:
    explicit RowSpace(const PrimeField& f) : f_(f) {}

    // Returns false when the row is already in the span; otherwise absorbs it.
    bool insert(std::vector<std::uint32_t> row) {
        reduce(row);
        int lead = leading(row);
        if (lead < 0) return false;
        std::uint32_t scale = f_.inv(row[lead]);
        for (auto& x : row) x = f_.mul(scale, x);
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(std::vector<std::uint32_t> row) const {
        reduce(row);
        return leading(row) < 0;
    }

  private:
    void reduce(std::vector<std::uint32_t>& row) const {
        for (const auto& pivot : rows_) {
            int lead = leading(pivot);
            std::uint32_t factor = row[lead];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < row.size(); ++c)
                row[c] = f_.sub(row[c], f_.mul(factor, pivot[c]));
        }
    }

    static int leading(const std::vector<std::uint32_t>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) return static_cast<int>(c);
        return -1;
    }

    PrimeField f_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace detail

// Transports a basis along one elementary minor operation.  Edge deletion
// keeps the matrix; vertex deletion drops the vertex's coordinate from every
// row; edge contraction replaces the two endpoint coordinates by their sum
// (the coordinate of the merged vertex).  Cleanup discards, in order: rows
// that became zero, later duplicates of an earlier row (lowest index kept),
// and rows dependent on earlier kept rows — a deterministic rule; the
// surviving rows always span, so exactly one discard beyond zeros and
// duplicates can ever be needed.
inline MinorBasisResult elementary_minor_basis(const SimpleGraph& g, const PrimeFieldMatrix& a,
                                               const MinorOp& op) {
    if (a.rows() != a.cols() || a.rows() != g.vertex_count())
        throw std::invalid_argument("basis matrix must be square of size |V|");
    if (!is_invertible(a)) throw SingularMatrixError("basis matrix is singular");

    SimpleGraph minor = apply_minor_op(g, op);
    if (op.kind == MinorOp::Kind::DeleteEdge) return MinorBasisResult{minor, a, op, {}};

    const PrimeField& f = a.field();
    int n = g.vertex_count();
    int nn = n - 1;

    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(nn, 0));
    if (op.kind == MinorOp::Kind::DeleteVertex) {
        int v = op.u;
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                if (c == v) continue;
                rows[r - 1][c - (c > v) - 1] = a.at(r, c);
            }
    } else {
        int keep = std::min(op.u, op.v), drop = std::max(op.u, op.v);
        for (int r = 1; r <= n; ++r) {
            for (int c = 1; c <= n; ++c) {
                if (c == keep || c == drop) continue;
                rows[r - 1][c - (c > drop) - 1] = a.at(r, c);
            }
            rows[r - 1][keep - 1] = f.add(a.at(r, keep), a.at(r, drop));
        }
    }

    std::vector<DiscardedRow> discarded;
    std::vector<int> kept;
    detail::RowSpace space(f);
    for (int r = 1; r <= n; ++r) {
        const auto& row = rows[r - 1];
        if (std::all_of(row.begin(), row.end(), [](std::uint32_t x) { return x == 0; })) {
            discarded.push_back({r, "zero after substitution"});
            continue;
        }
        int duplicate_of = 0;
        for (int k : kept)
            if (rows[k - 1] == row) {
                duplicate_of = k;
                break;
            }
        if (duplicate_of != 0) {
            discarded.push_back({r, "duplicate of row " + std::to_string(duplicate_of)});
            continue;
        }
        if (!space.insert(row)) {
            discarded.push_back({r, "dependent on earlier rows"});
            continue;
        }
        kept.push_back(r);
    }

    if (static_cast<int>(kept.size()) != nn)
        throw InvariantViolation("cleanup failed: " + std::to_string(kept.size()) +
                                 " independent rows survive, need " + std::to_string(nn));
    PrimeFieldMatrix out(nn, nn, f);
    for (int r = 1; r <= nn; ++r)
        for (int c = 1; c <= nn; ++c) out.set(r, c, rows[kept[r - 1] - 1][c - 1]);
    if (!is_invertible(out))
        throw InvariantViolation("cleanup failed: surviving rows are not a basis");
    return MinorBasisResult{std::move(minor), std::move(out), op, std::move(discarded)};
}

// Both basis graphs around one move, plus whether the derived one is a minor
// of the original one.  True is guaranteed for edge and vertex deletion;
// contraction can fail, and an edge-count excess already decides that.
struct MinorRelationReport {
    SimpleGraph basis_graph;        // of the input pair
    MinorBasisResult move;
    SimpleGraph minor_basis_graph;  // of the derived pair
    bool holds;
};

inline MinorRelationReport verify_minor_relation(const SimpleGraph& g, const PrimeFieldMatrix& a,
                                                 const MinorOp& op, int max_host_vertices = 12) {
    SimpleGraph host = cohomology_basis_graph(g, a);
    MinorBasisResult move = elementary_minor_basis(g, a, op);
    SimpleGraph derived = cohomology_basis_graph(move.minor_graph, move.basis);
    bool holds = has_minor(host, derived, max_host_vertices);
    return MinorRelationReport{std::move(host), std::move(move), std::move(derived), holds};
}

// Two stars joined by an edge, with the basis whose graph gains edges under
// contraction of the joining edge.  Vertex order: 1 and 2 are the star
// centers, 3..n+2 the leaves a_1..a_n of center 1, n+3..n+m+2 the leaves
// b_1..b_m of center 2.  Basis rows, in order: the m duals b_i*; a_1*+b_1*;
// the n sums v_1*+a_j*; and v_2*+a_1*.  Over F_2.
inline CohomologyBasis dumbbell(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("dumbbell needs n >= 1 and m >= 1");
    int total = n + m + 2;
    SimpleGraph g(total);
    g.add_edge(1, 2);
    for (int j = 1; j <= n; ++j) g.add_edge(1, 2 + j);
    for (int i = 1; i <= m; ++i) g.add_edge(2, n + 2 + i);

    PrimeFieldMatrix a(total, total, PrimeField(2));
    int r = 0;
    for (int i = 1; i <= m; ++i) a.set(++r, n + 2 + i, 1);  // b_i*
    ++r;                                                    // a_1* + b_1*
    a.set(r, 3, 1);
    a.set(r, n + 3, 1);
    for (int j = 1; j <= n; ++j) {  // v_1* + a_j*
        ++r;
        a.set(r, 1, 1);
        a.set(r, 2 + j, 1);
    }
    ++r;  // v_2* + a_1*
    a.set(r, 2, 1);
    a.set(r, 3, 1);
    return CohomologyBasis(std::move(g), std::move(a));
}

// Edge surplus of the contracted dumbbell's basis graph over the original's,
// computed from the actual graphs and checked against the closed form
// (m-1)(n-1) - 2.  Positive surplus certifies that contraction broke the
// minor relation.
inline int contraction_gap(int n, int m) {
    CohomologyBasis base = dumbbell(n, m);
    SimpleGraph host = cohomology_basis_graph(base);
    MinorBasisResult move =
        elementary_minor_basis(base.graph(), base.matrix(), MinorOp::contract_edge(1, 2));
    SimpleGraph derived = cohomology_basis_graph(move.minor_graph, move.basis);
    int gap = static_cast<int>(derived.edge_count()) - static_cast<int>(host.edge_count());
    if (gap != (m - 1) * (n - 1) - 2)
        throw InvariantViolation("contraction gap " + std::to_string(gap) +
                                 " differs from the closed form for n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m));
    return gap;
}

}  // namespace cbg
