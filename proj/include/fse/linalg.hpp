#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "fse/numbers.hpp"

// Exact integer/rational linear algebra: rank by fraction-free (Bareiss)
// elimination, nullspace and column-space bases, and dimensions of sums,
// intersections, restrictions and coordinate projections of subspaces.
// No floating point anywhere in this header.

namespace fse {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Int> row(int r) const {
        return {data.begin() + static_cast<std::size_t>(r) * cols, data.begin() + static_cast<std::size_t>(r + 1) * cols};
    }

    std::vector<Int> mul_vec(std::span<const Int> v) const {
        if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("mul_vec: size mismatch");
        std::vector<Int> out(rows);
        for (int i = 0; i < rows; ++i) {
            Int s = 0;
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0) s += at(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

namespace detail {

// Distinct nonzero rows; dedup is harmless for rank/row-space purposes and
// cuts the 1024-equation systems down to a few hundred rows.
inline std::vector<std::vector<Int>> unique_nonzero_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        auto r = m.row(i);
        if (std::ranges::any_of(r, [](const Int& v) { return v != 0; })) rows.push_back(std::move(r));
    }
    std::ranges::sort(rows);
    rows.erase(std::ranges::unique(rows).begin(), rows.end());
    return rows;
}

}  // namespace detail

// Rank over the rationals, Bareiss one-step fraction-free elimination.
// All divisions are exact; intermediate entries are minors of the input.
inline int rank(const IntMatrix& m) {
    auto rows = detail::unique_nonzero_rows(m);
    const int nr = static_cast<int>(rows.size());
    const int nc = m.cols;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pivot = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j)
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return r;
}

inline int image_dim(const IntMatrix& m) { return rank(m); }

struct RrefResult {
    std::vector<std::vector<Rational>> rows;  // nonzero rows, reduced echelon
    std::vector<int> pivot_cols;              // ascending
    int cols = 0;
};

// Reduced row echelon form over the rationals (independent of the Bareiss
// path; the two are cross-checked in tests).
inline RrefResult rref(const IntMatrix& m) {
    auto input = detail::unique_nonzero_rows(m);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(input.size());
    for (const auto& r : input) rows.emplace_back(r.begin(), r.end());

    RrefResult out;
    out.cols = m.cols;
    const int nr = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < m.cols && r < nr; ++c) {
        int pivot = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        const Rational inv = rows[r][c];
        for (int j = c; j < m.cols; ++j) rows[r][j] /= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (int j = c; j < m.cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

namespace detail {

// Scale a rational vector to a primitive integer vector with positive first
// nonzero entry. Zero vectors are rejected.
inline std::vector<Int> primitive_integer(std::span<const Rational> v) {
    Int lcm = 1;
    for (const Rational& x : v)
        if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i] * Rational(lcm));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g == 0) throw std::invalid_argument("primitive_integer: zero vector");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (out[i] != 0) {
            if (out[i] < 0) g = -g;
            break;
        }
    for (Int& x : out) x /= g;
    return out;
}

}  // namespace detail

// Linearly independent primitive integer spanning vectors of a subspace of
// Q^ambient_dim, kept in reduced-echelon order.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<std::vector<Int>> vectors;

    int dim() const { return static_cast<int>(vectors.size()); }

    IntMatrix as_matrix() const {
        IntMatrix m(dim(), ambient_dim);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
        return m;
    }

    // Canonicalizes an arbitrary integer spanning set.
    static SubspaceBasis from_span(int ambient, const std::vector<std::vector<Int>>& span) {
        IntMatrix m(static_cast<int>(span.size()), ambient);
        for (std::size_t i = 0; i < span.size(); ++i) {
            if (static_cast<int>(span[i].size()) != ambient) throw std::invalid_argument("from_span: vector length mismatch");
            for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = span[i][j];
        }
        const RrefResult r = rref(m);
        SubspaceBasis b;
        b.ambient_dim = ambient;
        b.vectors.reserve(r.rows.size());
        for (const auto& row : r.rows) b.vectors.push_back(detail::primitive_integer(row));
        return b;
    }
};

// Basis of {v : m v = 0}; size is cols - rank(m).
inline SubspaceBasis nullspace(const IntMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    SubspaceBasis basis;
    basis.ambient_dim = m.cols;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) v[r.pivot_cols[k]] = -r.rows[k][f];
        basis.vectors.push_back(detail::primitive_integer(v));
    }
    return basis;
}

inline IntMatrix stack(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix m(a.dim() + b.dim(), a.ambient_dim);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient_dim; ++j) m.at(i, j) = a.vectors[i][j];
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.ambient_dim; ++j) m.at(a.dim() + i, j) = b.vectors[i][j];
    return m;
}

inline int sum_dim(const SubspaceBasis& a, const SubspaceBasis& b) { return rank(stack(a, b)); }

// dim(a) + dim(b) - dim(a + b), by the dimension formula.
inline int intersect_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() + b.dim() - sum_dim(a, b);
}

// Basis of {v in span(a) : v_i = 0 for all i in coords} (0-based coords).
inline SubspaceBasis restrict_to_zero_block(const SubspaceBasis& a, std::span<const int> coords) {
    for (int c : coords)
        if (c < 0 || c >= a.ambient_dim) throw std::invalid_argument("restrict_to_zero_block: coordinate out of range");
    // Coefficient vectors whose combination vanishes on the selected coords.
    IntMatrix constraints(static_cast<int>(coords.size()), a.dim());
    for (std::size_t r = 0; r < coords.size(); ++r)
        for (int j = 0; j < a.dim(); ++j) constraints.at(static_cast<int>(r), j) = a.vectors[j][coords[r]];
    const SubspaceBasis coeffs = nullspace(constraints);

    std::vector<std::vector<Int>> span;
    span.reserve(coeffs.dim());
    for (const auto& c : coeffs.vectors) {
        std::vector<Int> v(a.ambient_dim);
        for (int j = 0; j < a.dim(); ++j)
            if (c[j] != 0)
                for (int k = 0; k < a.ambient_dim; ++k) v[k] += c[j] * a.vectors[j][k];
        span.push_back(std::move(v));
    }
    return SubspaceBasis::from_span(a.ambient_dim, span);
}

// Dimension of the image of span(a) under projection onto coords (0-based).
inline int projection_dim(const SubspaceBasis& a, std::span<const int> coords) {
    for (int c : coords)
        if (c < 0 || c >= a.ambient_dim) throw std::invalid_argument("projection_dim: coordinate out of range");
    IntMatrix m(a.dim(), static_cast<int>(coords.size()));
    for (int i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j) m.at(i, static_cast<int>(j)) = a.vectors[i][coords[j]];
    return rank(m);
}

// Basis of the column space (image) of m.
inline SubspaceBasis column_space_basis(const IntMatrix& m) {
    const IntMatrix t = m.transpose();
    std::vector<std::vector<Int>> span;
    span.reserve(t.rows);
    for (int i = 0; i < t.rows; ++i) span.push_back(t.row(i));
    return SubspaceBasis::from_span(m.rows, span);
}

}  // namespace fse
