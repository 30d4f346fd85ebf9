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
#include "tracks.hpp"

namespace cbg {

// The degree-1 cup-product pairing of a group, with vertex labels erased:
// for each pair r < s of basis indices, the product of basis vectors r and s
// expressed in a fixed degree-2 basis of dimension m.  The extension to
// arbitrary index pairs is antisymmetric and the diagonal is zero.
class PairingTensor {
  public:
    PairingTensor(int n, int m, PrimeField field, std::vector<std::vector<std::uint32_t>> values)
        : n_(n), m_(m), field_(field), values_(std::move(values)) {
        if (n < 0 || m < 0) throw std::invalid_argument("pairing dimensions must be nonnegative");
        std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        if (values_.size() != pairs)
            throw std::invalid_argument("pairing needs one value per index pair: expected " +
                                        std::to_string(pairs) + ", got " +
                                        std::to_string(values_.size()));
        for (const auto& v : values_) {
            if (static_cast<int>(v.size()) != m)
                throw std::invalid_argument("pairing value has wrong degree-2 dimension");
            for (std::uint32_t x : v)
                if (x >= field_.modulus())
                    throw std::invalid_argument("pairing value entry not reduced mod p");
        }
    }

    int h1_dimension() const { return n_; }
    int h2_dimension() const { return m_; }
    const PrimeField& field() const { return field_; }

    // Pairing of basis vectors r and s, antisymmetrically extended.
    std::vector<std::uint32_t> value(int r, int s) const {
        check_index(r);
        check_index(s);
        if (r == s) return std::vector<std::uint32_t>(m_, 0);
        if (r < s) return values_[index(r, s)];
        std::vector<std::uint32_t> v = values_[index(s, r)];
        for (auto& x : v) x = field_.neg(x);
        return v;
    }

    bool is_nonzero(int r, int s) const {
        check_index(r);
        check_index(s);
        if (r == s) return false;
        const auto& v = values_[r < s ? index(r, s) : index(s, r)];
        return std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    }

  private:
    void check_index(int r) const {
        if (r < 1 || r > n_) throw std::out_of_range("pairing index outside basis");
    }
    // Linear index of the pair (r,s), r < s, in lexicographic order.
    std::size_t index(int r, int s) const {
        return static_cast<std::size_t>(r - 1) * n_ - static_cast<std::size_t>(r) * (r - 1) / 2 +
               (s - r - 1);
    }

    int n_, m_;
    PrimeField field_;
    std::vector<std::vector<std::uint32_t>> values_;
};

// The pairing carried by a cohomology basis, in the degree-2 basis given by
// the defining graph's sorted edge list.
inline PairingTensor pairing_from(const CohomologyBasis& basis) {
    const SimpleGraph& g = basis.graph();
    int n = basis.size();
    int m = static_cast<int>(g.edge_count());
    std::vector<std::vector<std::uint32_t>> values;
    values.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            Degree2Vector cup = cup_deg1(g, basis.row_vector(r), basis.row_vector(s));
            std::vector<std::uint32_t> v;
            v.reserve(m);
            for (const auto& [i, j] : g.edges()) v.push_back(cup.value_on(i, j));
            values.push_back(std::move(v));
        }
    return PairingTensor(n, m, basis.field(), std::move(values));
}

inline PairingTensor pairing_from(const SimpleGraph& graph, const PrimeFieldMatrix& a) {
    return pairing_from(CohomologyBasis(graph, a));
}

// The graph on basis indices whose edges mark nonvanishing pairings after
// the change of basis C: edge {r,s} iff sum_{a,b} C_r^a C_s^b P[a][b] != 0.
inline SimpleGraph nonvanishing_graph(const PairingTensor& p, const PrimeFieldMatrix& c) {
    int n = p.h1_dimension();
    if (c.rows() != n || c.cols() != n)
        throw std::invalid_argument("change of basis must be square of the pairing dimension");
    if (c.field().modulus() != p.field().modulus())
        throw std::invalid_argument("change of basis over the wrong field");
    if (!is_invertible(c)) throw SingularMatrixError("change of basis must be invertible");
    const PrimeField& f = p.field();
    int m = p.h2_dimension();
    SimpleGraph out(n);
    std::vector<std::uint32_t> acc(m);
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            std::fill(acc.begin(), acc.end(), 0u);
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    // Antisymmetry folds the (a,b) and (b,a) terms into a
                    // 2x2 minor coefficient.
                    std::uint32_t coeff =
                        f.sub(f.mul(c.at(r, a), c.at(s, b)), f.mul(c.at(r, b), c.at(s, a)));
                    if (coeff == 0) continue;
                    auto v = p.value(a, b);
                    for (int e = 0; e < m; ++e)
                        acc[e] = f.add(acc[e], f.mul(coeff, v[e]));
                }
            if (std::any_of(acc.begin(), acc.end(), [](std::uint32_t x) { return x != 0; }))
                out.add_edge(r, s);
        }
    return out;
}

struct ReconstructionResult {
    SimpleGraph graph;
    PrimeFieldMatrix witness;
};

// Sweeps all of GL_n(F_2) for the change of basis whose nonvanishing graph
// has the fewest edges, breaking ties by lexicographically least edge list;
// when the pairing came from a graph group, the result is isomorphic to the
// defining graph.  Exhaustive, hence restricted to p = 2 and n <= 5.
inline ReconstructionResult reconstruct_minimal_edges(const PairingTensor& p) {
    if (p.field().modulus() != 2)
        throw GuardError("reconstruction sweep supports only p = 2, got p = " +
                         std::to_string(p.field().modulus()));
    int n = p.h1_dimension();
    if (n < 1 || n > 5)
        throw GuardError("reconstruction sweep needs 1 <= n <= 5, got n = " + std::to_string(n));
    int m = p.h2_dimension();
    if (m > 64)
        throw GuardError("reconstruction sweep packs degree-2 values into 64 bits, got m = " +
                         std::to_string(m));

    // Pack each pairing value into a bit mask (symmetric over F_2, zero on
    // the diagonal).
    std::uint64_t pv[6][6] = {};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            auto v = p.value(a, b);
            std::uint64_t bits = 0;
            for (int e = 0; e < m; ++e)
                if (v[e]) bits |= std::uint64_t(1) << e;
            pv[a][b] = pv[b][a] = bits;
        }
    // q[a][mask] = XOR of pv[a][b] over the columns b packed in mask, using
    // the row-mask convention of the GL_2 enumeration: bit (n-b) is column b.
    std::vector<std::vector<std::uint64_t>> q(n + 1,
                                              std::vector<std::uint64_t>(std::size_t(1) << n, 0));
    for (int a = 1; a <= n; ++a)
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::uint32_t rest = mask & (mask - 1);
            std::uint32_t bit = mask ^ rest;
            int b = n - __builtin_ctz(bit);
            q[a][mask] = q[a][rest] ^ pv[a][b];
        }

    const int npairs = n * (n - 1) / 2;
    bool have_best = false;
    int best_count = 0;
    std::uint32_t best_edge_mask = 0;
    std::vector<std::uint32_t> best_rows(n);

    detail::enumerate_gl2_masks(n, [&](const std::uint32_t* rows) {
        std::uint32_t edge_mask = 0;
        int count = 0;
        int t = 0;
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s, ++t) {
                std::uint64_t acc = 0;
                std::uint32_t rm = rows[r - 1];
                while (rm) {
                    std::uint32_t bit = rm & (~rm + 1);
                    rm ^= bit;
                    int a = n - __builtin_ctz(bit);
                    acc ^= q[a][rows[s - 1]];
                }
                if (acc) {
                    // High-bit-first so that larger masks are the
                    // lexicographically earlier edge lists.
                    edge_mask |= std::uint32_t(1) << (npairs - 1 - t);
                    ++count;
                }
            }
        if (!have_best || count < best_count ||
            (count == best_count && edge_mask > best_edge_mask)) {
            have_best = true;
            best_count = count;
            best_edge_mask = edge_mask;
            std::copy(rows, rows + n, best_rows.begin());
        }
    });

    PrimeField f2(2);
    PrimeFieldMatrix witness = detail::matrix_from_masks(n, best_rows.data(), f2);
    SimpleGraph graph(n);
    int t = 0;
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s, ++t)
            if (best_edge_mask & (std::uint32_t(1) << (npairs - 1 - t))) graph.add_edge(r, s);
    return ReconstructionResult{std::move(graph), std::move(witness)};
}

// An ideal generated by distinct square-free degree-2 monomials x_i x_j,
// identified with the edge list of the graph having it as edge ideal.
struct EdgeIdeal {
    int n = 0;
    std::vector<SimpleGraph::Edge> generators;

    EdgeIdeal(int variables, std::vector<SimpleGraph::Edge> gens)
        : n(variables), generators(std::move(gens)) {
        SimpleGraph check(n, generators);  // validates range, loops, duplicates
        generators = check.edges();        // normalized and sorted
    }

    SimpleGraph graph() const { return SimpleGraph(n, generators); }
};

// The generator graph of the ideal together with the graph of monomials
// w_i w_j surviving the change of variables in the quotient that kills
// squares and non-generator monomials.  The first always embeds into the
// second, though not necessarily with matching labels (the variables of the
// survivor graph are the transformed ones); the embedding is re-certified on
// every call.
inline std::pair<SimpleGraph, SimpleGraph> graphs_from_edge_ideal(const EdgeIdeal& ideal,
                                                                  const PrimeFieldMatrix& c) {
    if (c.field().modulus() != 2)
        throw std::invalid_argument("edge-ideal changes of variables live over p = 2");
    if (c.rows() != ideal.n || c.cols() != ideal.n)
        throw std::invalid_argument("change of variables must be square of the variable count");
    if (!is_invertible(c)) throw SingularMatrixError("change of variables must be invertible");
    SimpleGraph gamma_i = ideal.graph();
    SimpleGraph gamma_j(ideal.n);
    for (int i = 1; i <= ideal.n; ++i)
        for (int j = i + 1; j <= ideal.n; ++j) {
            // w_i w_j survives iff some generator monomial x_k x_l keeps a
            // nonzero coefficient: C_i^k C_j^l + C_i^l C_j^k mod 2.
            bool survives = false;
            for (const auto& [k, l] : gamma_i.edges()) {
                std::uint32_t coeff = (c.at(i, k) * c.at(j, l) + c.at(i, l) * c.at(j, k)) % 2;
                if (coeff != 0) {
                    survives = true;
                    break;
                }
            }
            if (survives) gamma_j.add_edge(i, j);
        }
    // Certify that the generator graph embeds into the survivor graph.  When
    // the labels already line up there is nothing to search; otherwise a good
    // row reordering of the change of variables supplies the embedding.
    bool literal = true;
    for (const auto& [i, j] : gamma_i.edges())
        if (!gamma_j.has_edge(i, j)) {
            literal = false;
            break;
        }
    if (!literal) {
        Permutation sigma = find_good_reordering(gamma_i, c);
        for (const auto& [i, j] : gamma_i.edges())
            if (!gamma_j.has_edge(sigma(i), sigma(j)))
                throw InvariantViolation(
                    "generator graph does not embed into the survivor graph");
    }
    return {std::move(gamma_i), std::move(gamma_j)};
}

// The double cover scaffold on {e_1..e_n, w_1..w_n} used by the
// graph-theoretic reformulation: e-vertices copy the defining graph, and
// w_i connects to e_j exactly where the matrix entry (i,j) is nonzero.
// Vertices 1..n are e_1..e_n and n+1..2n are w_1..w_n.
inline SimpleGraph gamma_prime_scaffold(const SimpleGraph& graph, const PrimeFieldMatrix& a) {
    int n = graph.vertex_count();
    SimpleGraph s(2 * n);
    for (const auto& [i, j] : graph.edges()) s.add_edge(i, j);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j) != 0) s.add_edge(n + i, j);
    return s;
}

enum class GammaPrimeRule {
    corrected,  // edge iff some defining edge admits exactly one length-3 path
    literal,    // edge iff a length-3 path exists and no length-2 path joins
                // the endpoints inside the induced 4-vertex subgraph
};

// The graph spanned by the w-vertices of the scaffold under rule (3).  The
// corrected rule reproduces the basis graph over F_2; the literal rule is
// the reformulation's stated wording, kept because it provably differs.
inline SimpleGraph gamma_prime(const SimpleGraph& graph, const PrimeFieldMatrix& a,
                               GammaPrimeRule rule) {
    if (a.field().modulus() != 2)
        throw std::invalid_argument("the scaffold construction lives over p = 2");
    if (a.rows() != a.cols() || a.rows() != graph.vertex_count())
        throw std::invalid_argument("matrix must be square of size |V|");
    if (!is_invertible(a)) throw SingularMatrixError("scaffold needs an invertible matrix");
    int n = graph.vertex_count();
    SimpleGraph s = gamma_prime_scaffold(graph, a);
    SimpleGraph out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool edge = false;
            for (const auto& [k, l] : graph.edges()) {
                bool through_kl = s.has_edge(n + i, k) && s.has_edge(l, n + j);
                bool through_lk = s.has_edge(n + i, l) && s.has_edge(k, n + j);
                if (rule == GammaPrimeRule::corrected) {
                    if (through_kl != through_lk) {
                        edge = true;
                        break;
                    }
                } else {
                    bool two_path = (s.has_edge(n + i, k) && s.has_edge(n + j, k)) ||
                                    (s.has_edge(n + i, l) && s.has_edge(n + j, l));
                    if ((through_kl || through_lk) && !two_path) {
                        edge = true;
                        break;
                    }
                }
            }
            if (edge) out.add_edge(i, j);
        }
    return out;
}

}  // namespace cbg
