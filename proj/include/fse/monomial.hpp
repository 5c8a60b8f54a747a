#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fse/cohomology.hpp"
#include "fse/numbers.hpp"
#include "fse/simplex.hpp"

// Monomial operators on n two-dimensional tensor factors: a permutation of
// the 2^n basis indices plus one exact scalar exponent per basis index,
// op(e_s) = base^{log_scalars[s]} e_{perm[s]}. All identity checks are done
// in additive log form; instantiation to literal matrices exists for
// interoperability.

namespace fse {

struct MonomialOperator {
    int arity = 0;
    std::vector<std::uint32_t> perm;  // bijection on 2^arity indices
    std::vector<Rational> log_scalars;

    int dim() const { return 1 << arity; }

    static MonomialOperator identity(int arity) {
        MonomialOperator op;
        op.arity = arity;
        op.perm.resize(std::size_t(1) << arity);
        for (std::uint32_t s = 0; s < op.perm.size(); ++s) op.perm[s] = s;
        op.log_scalars.assign(op.perm.size(), Rational(0));
        return op;
    }

    MonomialOperator inverse() const {
        MonomialOperator inv;
        inv.arity = arity;
        inv.perm.resize(perm.size());
        inv.log_scalars.resize(perm.size());
        for (std::uint32_t s = 0; s < perm.size(); ++s) {
            inv.perm[perm[s]] = s;
            inv.log_scalars[perm[s]] = -log_scalars[s];
        }
        return inv;
    }

    friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;
};

inline bool is_pure_permutation(const MonomialOperator& op) {
    for (const Rational& v : op.log_scalars)
        if (v != 0) return false;
    return true;
}

// Permutation-type operator of a bijective set map, unit scalars.
inline MonomialOperator from_set_map(const SetMap& r) {
    if (!r.is_bijective()) throw std::invalid_argument("from_set_map: map is not bijective");
    MonomialOperator op;
    op.arity = 4;
    op.perm.resize(16);
    for (int s = 0; s < 16; ++s) op.perm[s] = r.table[s].bits;
    op.log_scalars.assign(16, Rational(0));
    return op;
}

struct OperatorQuintuple {
    std::array<MonomialOperator, 5> ops;  // indexed by OpLabel

    MonomialOperator& operator[](OpLabel l) { return ops[static_cast<int>(l)]; }
    const MonomialOperator& operator[](OpLabel l) const { return ops[static_cast<int>(l)]; }
};

// Five operators sharing r's permutation, scaled by the cochain blocks.
inline OperatorQuintuple quintuple_from_cocycle(const SetMap& r, const CochainVector& c) {
    OperatorQuintuple q;
    for (OpLabel label : kAllLabels) {
        MonomialOperator op = from_set_map(r);
        const auto block = c.block(label);
        for (int s = 0; s < 16; ++s) op.log_scalars[s] = block[s];
        q[label] = op;
    }
    return q;
}

// Acts as op on the four positions p of a ten-factor space, identity elsewhere.
inline MonomialOperator embed(const MonomialOperator& op, const PositionQuadruple& p) {
    if (op.arity != 4) throw std::invalid_argument("embed: operator must have arity 4");
    MonomialOperator out;
    out.arity = 10;
    out.perm.resize(kNumStates10);
    out.log_scalars.resize(kNumStates10);
    for (int s = 0; s < kNumStates10; ++s) {
        const State10 st{static_cast<std::uint16_t>(s)};
        const std::uint8_t sub = extract(st, p).bits;
        out.perm[s] = insert(st, p, Tuple4{static_cast<std::uint8_t>(op.perm[sub])}).bits;
        out.log_scalars[s] = op.log_scalars[sub];
    }
    return out;
}

// Product of operators written left to right; the rightmost acts first.
// Scalar exponents accumulate along the permutation trajectory.
inline MonomialOperator compose(std::span<const MonomialOperator> ops) {
    if (ops.empty()) throw std::invalid_argument("compose: empty product");
    const int arity = ops.front().arity;
    for (const auto& op : ops)
        if (op.arity != arity) throw std::invalid_argument("compose: arity mismatch");

    MonomialOperator out;
    out.arity = arity;
    out.perm.resize(std::size_t(1) << arity);
    out.log_scalars.resize(out.perm.size());
    for (std::uint32_t s = 0; s < out.perm.size(); ++s) {
        std::uint32_t cur = s;
        Rational acc = 0;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            acc += it->log_scalars[cur];
            cur = it->perm[cur];
        }
        out.perm[s] = cur;
        out.log_scalars[s] = std::move(acc);
    }
    return out;
}

inline MonomialOperator compose(std::initializer_list<MonomialOperator> ops) {
    return compose(std::span<const MonomialOperator>(ops.begin(), ops.size()));
}

struct QfseVerdict {
    std::optional<std::uint32_t> counterexample;  // smallest failing basis index
    bool holds() const { return !counterexample.has_value(); }
};

// Exact check of the nonconstant equation: both sides composed on the full
// ten-factor space must agree in permutation and in scalar exponents on every
// basis index. No exponentiation happens, so the result is base-independent.
inline QfseVerdict verify_nonconstant_qfse(const OperatorQuintuple& q) {
    std::array<MonomialOperator, 5> factors;
    for (OpLabel label : kAllLabels)
        factors[static_cast<int>(label)] = embed(q[label], positions_of(label));

    const auto& [er, es, et, eu, ev] = factors;
    const MonomialOperator lhs = compose({er, es, et, eu, ev});
    const MonomialOperator rhs = compose({ev, eu, et, es, er});
    for (std::uint32_t s = 0; s < lhs.perm.size(); ++s)
        if (lhs.perm[s] != rhs.perm[s] || lhs.log_scalars[s] != rhs.log_scalars[s]) return QfseVerdict{s};
    return QfseVerdict{};
}

struct RationalMatrix {
    int dim = 0;
    std::vector<Rational> data;  // row-major

    RationalMatrix() = default;
    explicit RationalMatrix(int d) : dim(d), data(static_cast<std::size_t>(d) * d) {}

    Rational& at(int r, int c) { return data[static_cast<std::size_t>(r) * dim + c]; }
    const Rational& at(int r, int c) const { return data[static_cast<std::size_t>(r) * dim + c]; }

    static RationalMatrix identity(int d) {
        RationalMatrix m(d);
        for (int i = 0; i < d; ++i) m.at(i, i) = 1;
        return m;
    }
    static RationalMatrix all_ones(int d) {
        RationalMatrix m(d);
        for (Rational& v : m.data) v = 1;
        return m;
    }

    RationalMatrix mul(const RationalMatrix& o) const {
        if (dim != o.dim) throw std::invalid_argument("RationalMatrix::mul: dimension mismatch");
        RationalMatrix out(dim);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < dim; ++j)
                    if (o.at(k, j) != 0) out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

// Literal matrix with entry base^{log_scalars[s]} at (perm[s], s). Requires
// integer exponents; scale cocycle vectors to primitive integer form first.
inline RationalMatrix scalar_instantiate(const MonomialOperator& op, const Rational& base) {
    if (base <= 0 || base == 1) throw std::invalid_argument("scalar_instantiate: base must be positive and != 1");
    RationalMatrix m(op.dim());
    for (int s = 0; s < op.dim(); ++s) {
        const Rational& e = op.log_scalars[s];
        if (!is_integer(e)) throw std::invalid_argument("scalar_instantiate: non-integer exponent");
        m.at(static_cast<int>(op.perm[s]), s) = pow_rational(base, numerator(e));
    }
    return m;
}

// J M = M J for the 16x16 all-ones J; holds exactly for pure permutations.
inline bool commutes_with_all_ones(const MonomialOperator& op) {
    if (op.arity != 4) throw std::invalid_argument("commutes_with_all_ones: arity must be 4");
    const RationalMatrix m = scalar_instantiate(op, Rational(2));
    const RationalMatrix j = RationalMatrix::all_ones(16);
    return j.mul(m) == m.mul(j);
}

}  // namespace fse
