#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fse/numbers.hpp"

// Sparse multivariate polynomials over the rationals in the six parameters
// a, b, c, a', b', c', and dense square matrices over that ring with tensor
// embedding and weighted partial trace. Exact arithmetic throughout.

namespace fse {

inline constexpr int kNumVars = 6;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"a", "b", "c", "a'", "b'", "c'"};

enum class Var : int { a = 0, b = 1, c = 2, ap = 3, bp = 4, cp = 5 };

using Monomial = std::array<std::uint8_t, kNumVars>;  // exponents

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic: by total degree, then by exponent tuple.
struct GradedLexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        const int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(Rational v) {
        MultiPoly p;
        if (v != 0) p.terms_[Monomial{}] = std::move(v);
        return p;
    }
    static MultiPoly variable(Var v, int exponent = 1) {
        if (exponent < 0) throw std::invalid_argument("MultiPoly: negative exponent");
        MultiPoly p;
        Monomial m{};
        m[static_cast<int>(v)] = static_cast<std::uint8_t>(exponent);
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }
    const TermMap& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator-(const MultiPoly& x) {
        MultiPoly p;
        for (const auto& [m, c] : x.terms_) p.terms_[m] = -c;
        return p;
    }

    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        MultiPoly p;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                Monomial m;
                for (int i = 0; i < kNumVars; ++i) m[i] = static_cast<std::uint8_t>(mx[i] + my[i]);
                p.add_term(m, cx * cy);
            }
        return p;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const Rational& s, const MultiPoly& x) {
        MultiPoly p;
        if (s == 0) return p;
        for (const auto& [m, c] : x.terms_) p.terms_[m] = s * c;
        return p;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    Rational eval(const std::array<Rational, kNumVars>& values) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kNumVars; ++i)
                for (int e = 0; e < m[i]; ++e) t *= values[i];
            sum += t;
        }
        return sum;
    }

    // Canonical form: graded-lex descending, e.g. "2 a^2 b' - 1/3 c + 4".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < kNumVars; ++i) {
                if (m[i] == 0) continue;
                if (!vars.empty()) vars += " ";
                vars += kVarNames[i];
                if (m[i] > 1) vars += "^" + std::to_string(int(m[i]));
            }
            if (vars.empty())
                out += to_string(mag);
            else if (mag == 1)
                out += vars;
            else
                out += to_string(mag) + " " + vars;
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;  // no zero coefficients stored
};

// Dense square matrix over the polynomial ring on `factors` two-dimensional
// tensor factors (dim = 2^factors). Factor 1 is the most significant index bit.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int factors)
        : factors_(factors), dim_(1 << factors), entries_(static_cast<std::size_t>(dim_) * dim_) {}

    int factors() const { return factors_; }
    int dim() const { return dim_; }

    MultiPoly& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
    const MultiPoly& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }

    static PolyMatrix identity(int factors) {
        PolyMatrix m(factors);
        for (int i = 0; i < m.dim(); ++i) m.at(i, i) = MultiPoly::constant(1);
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(factors_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.dim_ != y.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
        PolyMatrix d(x.factors_);
        for (std::size_t i = 0; i < x.entries_.size(); ++i) d.entries_[i] = x.entries_[i] - y.entries_[i];
        return d;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    int factors_ = 0;
    int dim_ = 1;
    std::vector<MultiPoly> entries_;
};

inline PolyMatrix matrix_mul(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("matrix_mul: dimension mismatch");
    PolyMatrix out(x.factors());
    for (int i = 0; i < x.dim(); ++i)
        for (int k = 0; k < x.dim(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.dim(); ++j)
                if (!y.at(k, j).is_zero()) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

namespace detail {

// Scatter the bits of a k-bit index into the given factor positions
// (1-based, ascending, MSB-first on both sides) of an n-factor index.
inline int scatter_bits(int sub, std::span<const int> positions, int n) {
    int out = 0;
    const int k = static_cast<int>(positions.size());
    for (int j = 0; j < k; ++j) {
        const int bit = (sub >> (k - 1 - j)) & 1;
        out |= bit << (n - positions[j]);
    }
    return out;
}

inline int insert_bit(int idx, int k, int bit, int n) {
    const int low_mask = (1 << (n - k)) - 1;
    return ((idx >> (n - k)) << (n - k + 1)) | (bit << (n - k)) | (idx & low_mask);
}

}  // namespace detail

// Extends x to total_factors tensor factors, acting as x on the given
// positions and as identity elsewhere.
inline PolyMatrix embed_matrix(const PolyMatrix& x, std::span<const int> positions, int total_factors) {
    const int k = x.factors();
    if (static_cast<int>(positions.size()) != k) throw std::invalid_argument("embed_matrix: positions size mismatch");
    for (int j = 0; j < k; ++j) {
        if (positions[j] < 1 || positions[j] > total_factors) throw std::invalid_argument("embed_matrix: position out of range");
        if (j > 0 && positions[j] <= positions[j - 1]) throw std::invalid_argument("embed_matrix: positions must increase");
    }
    int comp_mask = (1 << total_factors) - 1;
    for (int j = 0; j < k; ++j) comp_mask &= ~(1 << (total_factors - positions[j]));

    PolyMatrix out(total_factors);
    // Iterate over complementary bit patterns and the k-factor block.
    for (int comp = 0;; comp = (comp - comp_mask) & comp_mask) {
        for (int ro = 0; ro < x.dim(); ++ro) {
            const int row = comp | detail::scatter_bits(ro, positions, total_factors);
            for (int ri = 0; ri < x.dim(); ++ri) {
                if (x.at(ro, ri).is_zero()) continue;
                out.at(row, comp | detail::scatter_bits(ri, positions, total_factors)) = x.at(ro, ri);
            }
        }
        if (comp == comp_mask) break;
    }
    return out;
}

// Trace over factor k (1-based) of (w acting on factor k) * x, for a fixed
// 2x2 rational weight w: out[(o),(i)] = sum_{t,u} w[t][u] x[o^(t at k)][i^(u at k)].
inline PolyMatrix weighted_partial_trace(const PolyMatrix& x, int k, const std::array<std::array<Rational, 2>, 2>& w) {
    const int n = x.factors();
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("weighted_partial_trace: bad factor index");
    PolyMatrix out(n - 1);
    for (int o = 0; o < out.dim(); ++o)
        for (int i = 0; i < out.dim(); ++i) {
            MultiPoly sum;
            for (int t = 0; t < 2; ++t)
                for (int u = 0; u < 2; ++u) {
                    if (w[t][u] == 0) continue;
                    const MultiPoly& e = x.at(detail::insert_bit(o, k, t, n), detail::insert_bit(i, k, u, n));
                    if (!e.is_zero()) sum += w[t][u] * e;
                }
            out.at(o, i) = std::move(sum);
        }
    return out;
}

inline std::array<std::array<Rational, 2>, 2> all_ones_weight() {
    return {{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
}

inline std::array<std::array<Rational, 2>, 2> identity_weight() {
    return {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
}

// Entrywise evaluation at fixed parameter values; the result has constant entries.
inline PolyMatrix evaluate(const PolyMatrix& x, const std::array<Rational, kNumVars>& values) {
    PolyMatrix out(x.factors());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j)
            if (!x.at(i, j).is_zero()) out.at(i, j) = MultiPoly::constant(x.at(i, j).eval(values));
    return out;
}

}  // namespace fse
