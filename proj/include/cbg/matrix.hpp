#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace cbg {

// Dense matrix over a prime field. Accessors are 1-based and range-checked;
// entries are stored reduced mod p.
class PrimeFieldMatrix {
  public:
    PrimeFieldMatrix(int rows, int cols, PrimeField field)
        : rows_(rows), cols_(cols), field_(field), e_(std::size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static PrimeFieldMatrix identity(int n, PrimeField field) {
        PrimeFieldMatrix m(n, n, field);
        for (int i = 1; i <= n; ++i) m.set(i, i, 1);
        return m;
    }

    static PrimeFieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                      PrimeField field) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        PrimeFieldMatrix m(r, c, field);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < c; ++j) m.set(i + 1, j + 1, rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t at(int i, int j) const {
        check(i, j);
        return e_[idx(i, j)];
    }

    void set(int i, int j, std::int64_t v) {
        check(i, j);
        e_[idx(i, j)] = field_.reduce(v);
    }

    std::vector<std::uint32_t> row(int i) const {
        check(i, 1);
        return std::vector<std::uint32_t>(e_.begin() + idx(i, 1), e_.begin() + idx(i, cols_) + 1);
    }

    std::vector<std::uint32_t> col(int j) const {
        check(1, j);
        std::vector<std::uint32_t> out(rows_);
        for (int i = 1; i <= rows_; ++i) out[i - 1] = e_[idx(i, j)];
        return out;
    }

    bool operator==(const PrimeFieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
    }
    bool operator!=(const PrimeFieldMatrix& o) const { return !(*this == o); }

  private:
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
    }
    std::size_t idx(int i, int j) const { return std::size_t(i - 1) * cols_ + (j - 1); }

    int rows_, cols_;
    PrimeField field_;
    std::vector<std::uint32_t> e_;
};

inline PrimeFieldMatrix mat_mul(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch in product");
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
    const PrimeField& f = a.field();
    PrimeFieldMatrix c(a.rows(), b.cols(), f);
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            std::uint32_t s = 0;
            for (int k = 1; k <= a.cols(); ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
            c.set(i, j, s);
        }
    return c;
}

// Determinant by fraction-free Gaussian elimination with partial pivoting.
inline std::uint32_t det_gaussian(const PrimeFieldMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const PrimeField& f = m.field();
    int n = m.rows();
    std::vector<std::vector<std::uint32_t>> a(n);
    for (int i = 0; i < n; ++i) a[i] = m.row(i + 1);
    std::uint32_t det = 1 % f.modulus();
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            negate = !negate;
        }
        det = f.mul(det, a[c][c]);
        std::uint32_t inv = f.inv(a[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            std::uint32_t factor = f.mul(a[r][c], inv);
            for (int k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[c][k]));
        }
    }
    return negate ? f.neg(det) : det;
}

// Determinant as the signed sum over all n! permutation products. Exponential;
// kept as an independent cross-check route and guarded accordingly.
inline std::uint32_t det_leibniz(const PrimeFieldMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n > 9) throw GuardError("det_leibniz guard: n = " + std::to_string(n) + " exceeds 9");
    const PrimeField& f = m.field();
    if (n == 0) return 1 % f.modulus();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t acc = 0;
    do {
        std::uint32_t prod = 1 % f.modulus();
        for (int i = 0; i < n && prod != 0; ++i) prod = f.mul(prod, m.at(perm[i] + 1, i + 1));
        if (prod == 0) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        acc = (inversions % 2 == 0) ? f.add(acc, prod) : f.sub(acc, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline int rank(const PrimeFieldMatrix& m) {
    const PrimeField& f = m.field();
    int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<std::uint32_t>> a(nr);
    for (int i = 0; i < nr; ++i) a[i] = m.row(i + 1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        std::uint32_t inv = f.inv(a[r][c]);
        for (int i = r + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            std::uint32_t factor = f.mul(a[i][c], inv);
            for (int k = c; k < nc; ++k) a[i][k] = f.sub(a[i][k], f.mul(factor, a[r][k]));
        }
        ++r;
    }
    return r;
}

inline bool is_invertible(const PrimeFieldMatrix& m) {
    return m.is_square() && det_gaussian(m) != 0;
}

// Whether the 2x2 minor of rows {r,s} and columns {i,j} is singular.
inline bool minor2_is_singular(const PrimeFieldMatrix& m, int r, int s, int i, int j) {
    const PrimeField& f = m.field();
    std::uint32_t d = f.sub(f.mul(m.at(r, i), m.at(s, j)), f.mul(m.at(r, j), m.at(s, i)));
    return d == 0;
}

namespace detail {

// Streams every invertible n x n matrix over F_2 as row bitmasks, in
// lexicographic order of the row tuple (row 1 varies slowest). Row encoding:
// column j sits at bit (n - j), so integer order on masks equals lexicographic
// order on (a^1, ..., a^n). The mask array handed to the visitor is reused.
inline void enumerate_gl2_masks(int n, const std::function<void(const std::uint32_t*)>& visit) {
    if (n < 1 || n > 5) throw GuardError("invertible enumeration guard: n must be in [1,5]");
    const std::uint32_t top = 1u << n;
    std::vector<char> in_span(top, 0);
    in_span[0] = 1;
    std::vector<std::uint32_t> span_elems{0};
    std::vector<std::uint32_t> rows(n, 0);

    const std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            visit(rows.data());
            return;
        }
        for (std::uint32_t v = 1; v < top; ++v) {
            if (in_span[v]) continue;
            rows[k] = v;
            if (k + 1 == n) {
                visit(rows.data());
                continue;
            }
            std::size_t old = span_elems.size();
            for (std::size_t t = 0; t < old; ++t) {
                std::uint32_t s = span_elems[t] ^ v;
                in_span[s] = 1;
                span_elems.push_back(s);
            }
            rec(k + 1);
            while (span_elems.size() > old) {
                in_span[span_elems.back()] = 0;
                span_elems.pop_back();
            }
        }
    };
    rec(0);
}

inline PrimeFieldMatrix matrix_from_masks(int n, const std::uint32_t* masks, PrimeField f2) {
    PrimeFieldMatrix m(n, n, f2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.set(i, j, (masks[i - 1] >> (n - j)) & 1u);
    return m;
}

}  // namespace detail

// Visits every element of GL_n(F_2) exactly once, in a fixed deterministic
// order (lexicographic by rows, each row the lexicographically smallest choice
// outside the span of the rows above it as the stream backtracks). The matrix
// reference passed to the visitor is only valid during the call.
inline void enumerate_invertible(int n, std::uint32_t p,
                                 const std::function<void(const PrimeFieldMatrix&)>& visit) {
    if (p != 2) throw GuardError("invertible enumeration guard: only p = 2 supported");
    PrimeField f2(2);
    PrimeFieldMatrix buf(n, n, f2);
    detail::enumerate_gl2_masks(n, [&](const std::uint32_t* masks) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) buf.set(i, j, (masks[i - 1] >> (n - j)) & 1u);
        visit(buf);
    });
}

namespace detail {

// Deterministic, platform-stable bounded sampling (no distribution objects).
inline std::uint32_t bounded(std::mt19937_64& g, std::uint32_t bound) {
    return static_cast<std::uint32_t>(g() % bound);
}

}  // namespace detail

// Uniform-ish random invertible matrix by rejection sampling; fully
// deterministic for a given seed.
inline PrimeFieldMatrix random_invertible(int n, PrimeField field, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random invertible matrix needs n >= 1");
    std::mt19937_64 gen(seed);
    PrimeFieldMatrix m(n, n, field);
    while (true) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m.set(i, j, detail::bounded(gen, field.modulus()));
        if (is_invertible(m)) return m;
    }
}

}  // namespace cbg
