#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "fse/linalg.hpp"
#include "fse/numbers.hpp"
#include "fse/simplex.hpp"

// The log-linear cocycle system of a set-theoretical solution: 1024 equations
// on the 80 values of (log phi_R, ..., log phi_V), the coboundary map from
// the 20 values of (log psi_1, ..., log psi_10), and the dimension reports
// derived from them.

namespace fse {

inline constexpr int kCochainDim = 80;  // five 16-blocks
inline constexpr int kPsiDim = 20;      // ten spaces, two colors each

// Flattens (operator label, argument quadruple) to 0..79.
struct CochainIndex {
    OpLabel label;
    Tuple4 argument;

    int flat() const { return 16 * static_cast<int>(label) + argument.bits; }
    static CochainIndex from_flat(int i) {
        if (i < 0 || i >= kCochainDim) throw std::out_of_range("CochainIndex::from_flat");
        return {static_cast<OpLabel>(i / 16), Tuple4{static_cast<std::uint8_t>(i % 16)}};
    }
};

// The 16 coordinates of one operator's block, ascending.
inline std::vector<int> block_coords(OpLabel label) {
    std::vector<int> c(16);
    for (int i = 0; i < 16; ++i) c[i] = 16 * static_cast<int>(label) + i;
    return c;
}

// 80 exact rationals: log-cochain values of the five functions.
struct CochainVector {
    std::array<Rational, kCochainDim> values{};

    Rational& operator[](CochainIndex i) { return values[i.flat()]; }
    const Rational& operator[](CochainIndex i) const { return values[i.flat()]; }

    std::span<const Rational, 16> block(OpLabel label) const {
        return std::span<const Rational, 16>(values.data() + 16 * static_cast<int>(label), 16);
    }

    bool block_is_zero(OpLabel label) const {
        for (const Rational& v : block(label))
            if (v != 0) return false;
        return true;
    }

    static CochainVector from_integers(std::span<const Int> v) {
        if (v.size() != kCochainDim) throw std::invalid_argument("CochainVector: need 80 values");
        CochainVector c;
        for (int i = 0; i < kCochainDim; ++i) c.values[i] = Rational(v[i]);
        return c;
    }

    friend bool operator==(const CochainVector&, const CochainVector&) = default;
};

// 20 exact rationals: log psi_m(x) for space m = 1..10 and color x.
struct PsiVector {
    std::array<Rational, kPsiDim> values{};

    static int coord(int space, Color x) { return 2 * (space - 1) + (x & 1); }
};

// One row per state s: +1 at the cochain index consumed by each left-side
// factor, -1 for each right-side factor. Coincident contributions cancel, so
// entries stay in {-1, 0, 1}. The system characterizes cocycles only when r
// satisfies the four-simplex equation; it is built unconditionally.
inline IntMatrix build_cocycle_system(const SetMap& r) {
    IntMatrix m(kNumStates10, kCochainDim);
    for (int s = 0; s < kNumStates10; ++s) {
        const State10 st{static_cast<std::uint16_t>(s)};
        const Trajectory lhs = lhs_trajectory(r, st);
        const Trajectory rhs = rhs_trajectory(r, st);
        for (int i = 0; i < 5; ++i) {
            m.at(s, CochainIndex{kLhsOrder[i], lhs.args[i]}.flat()) += 1;
            m.at(s, CochainIndex{kRhsOrder[i], rhs.args[i]}.flat()) -= 1;
        }
    }
    return m;
}

// The linear map psi -> cochain quintuple: each operator contributes, per
// argument slot j with space m_j, the difference psi_{m_j}(primed) -
// psi_{m_j}(unprimed). The space assignment is the factor position table
// itself (space m is shared by exactly the two operators acting on it).
inline IntMatrix build_coboundary_map(const SetMap& r) {
    IntMatrix m(kCochainDim, kPsiDim);
    for (OpLabel label : kAllLabels) {
        const PositionQuadruple& spaces = positions_of(label);
        for (int arg = 0; arg < kNumTuples4; ++arg) {
            const Tuple4 in{static_cast<std::uint8_t>(arg)};
            const Tuple4 out = r(in);
            const int row = CochainIndex{label, in}.flat();
            for (int j = 0; j < 4; ++j) {
                m.at(row, PsiVector::coord(spaces[j], out.component(j + 1))) += 1;
                m.at(row, PsiVector::coord(spaces[j], in.component(j + 1))) -= 1;
            }
        }
    }
    return m;
}

// Indicator vectors of the five 16-blocks; these always solve the system.
inline SubspaceBasis constants_basis() {
    SubspaceBasis b;
    b.ambient_dim = kCochainDim;
    for (OpLabel label : kAllLabels) {
        std::vector<Int> v(kCochainDim, 0);
        for (int c : block_coords(label)) v[c] = 1;
        b.vectors.push_back(std::move(v));
    }
    return b;
}

inline bool in_nullspace(const IntMatrix& m, std::span<const Int> v) {
    for (const Int& x : m.mul_vec(v))
        if (x != 0) return false;
    return true;
}

namespace detail {

inline void require_fse(const SetMap& r) {
    if (!verify_set_fse(r).holds())
        throw std::invalid_argument("map does not satisfy the set-theoretical four-simplex equation");
}

}  // namespace detail

struct DimensionReport {
    int n = 0;             // independent equations
    int d = 0;             // coboundary dimension
    int h = 0;             // essential dimension, 80 - n - d - 5
    int solution_dim = 0;  // 80 - n
    bool direct_sum_ok = false;
};

inline DimensionReport dimension_report(const SetMap& r) {
    detail::require_fse(r);
    const IntMatrix system = build_cocycle_system(r);
    const IntMatrix cob = build_coboundary_map(r);

    DimensionReport rep;
    rep.n = rank(system);
    rep.d = image_dim(cob);
    rep.h = kCochainDim - rep.n - rep.d - 5;
    rep.solution_dim = kCochainDim - rep.n;

    // Coboundaries and constants must lie in the solution space and span a
    // (d+5)-dimensional direct sum there.
    const SubspaceBasis image = column_space_basis(cob);
    const SubspaceBasis constants = constants_basis();
    bool ok = sum_dim(image, constants) == rep.d + 5;
    for (const auto& v : image.vectors) ok = ok && in_nullspace(system, v);
    for (const auto& v : constants.vectors) ok = ok && in_nullspace(system, v);
    rep.direct_sum_ok = ok;
    return rep;
}

// Nullspace basis of the cocycle system, dimension 80 - n.
inline SubspaceBasis cocycle_basis(const SetMap& r) {
    detail::require_fse(r);
    return nullspace(build_cocycle_system(r));
}

struct ConstrainedReport {
    int constrained_dim = 0;             // cocycles with zero phi_V block
    int constrained_coboundary_dim = 0;  // coboundary image meeting that constraint
    int constant_dim = 0;                // R, S, T, U block indicators (V is pinned)
    int essential = 0;
};

// Basis of the cocycle subspace with log phi_V identically zero.
inline SubspaceBasis constrained_cocycle_basis(const SetMap& r) {
    return restrict_to_zero_block(cocycle_basis(r), block_coords(OpLabel::V));
}

inline SubspaceBasis constrained_coboundary_basis(const SetMap& r) {
    const SubspaceBasis image = column_space_basis(build_coboundary_map(r));
    return restrict_to_zero_block(image, block_coords(OpLabel::V));
}

inline ConstrainedReport constrained_report(const SetMap& r) {
    detail::require_fse(r);
    ConstrainedReport rep;
    rep.constrained_dim = constrained_cocycle_basis(r).dim();
    rep.constrained_coboundary_dim = constrained_coboundary_basis(r).dim();
    rep.constant_dim = 4;
    rep.essential = rep.constrained_dim - rep.constrained_coboundary_dim - rep.constant_dim;
    return rep;
}

struct PerOperatorDims {
    OpLabel label;
    int cocycle_proj_dim = 0;
    int coboundary_proj_dim = 0;
    int essential = 0;  // cocycle_proj - coboundary_proj - 1 (one constant)
};

// Projections of the constrained spaces onto each individual operator block.
inline std::vector<PerOperatorDims> per_operator_dims(const SetMap& r) {
    detail::require_fse(r);
    const SubspaceBasis cocycles = constrained_cocycle_basis(r);
    const SubspaceBasis coboundaries = constrained_coboundary_basis(r);

    std::vector<PerOperatorDims> out;
    for (OpLabel label : {OpLabel::R, OpLabel::S, OpLabel::T, OpLabel::U}) {
        const std::vector<int> coords = block_coords(label);
        PerOperatorDims d;
        d.label = label;
        d.cocycle_proj_dim = projection_dim(cocycles, coords);
        d.coboundary_proj_dim = projection_dim(coboundaries, coords);
        d.essential = d.cocycle_proj_dim - d.coboundary_proj_dim - 1;
        out.push_back(d);
    }
    return out;
}

}  // namespace fse
