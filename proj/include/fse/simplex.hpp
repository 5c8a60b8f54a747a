#pragma once

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Colors, tuples of colors, set-theoretical maps on four colors, and the
// exhaustive check of the four-simplex equation
//
//   R_1234 R_1567 R_2589 R_3680 R_4790 = R_4790 R_3680 R_2589 R_1567 R_1234
//
// on the tenth Cartesian power of {0,1} (subscript 0 stands for space 10,
// rightmost factor acts first).

namespace fse {

using Color = std::uint8_t;  // element of F2 = {0,1}

// Quadruple of colors packed into 4 bits, first component most significant.
struct Tuple4 {
    std::uint8_t bits = 0;

    static Tuple4 of(Color x, Color y, Color z, Color t) {
        return Tuple4{static_cast<std::uint8_t>((x & 1) << 3 | (y & 1) << 2 | (z & 1) << 1 | (t & 1))};
    }
    // 1-based component, component(1) = x.
    Color component(int i) const { return (bits >> (4 - i)) & 1; }
    Color x() const { return component(1); }
    Color y() const { return component(2); }
    Color z() const { return component(3); }
    Color t() const { return component(4); }

    friend bool operator==(Tuple4, Tuple4) = default;
    friend auto operator<=>(Tuple4, Tuple4) = default;
};

// Ten colors packed into 10 bits, slot 1 most significant.
struct State10 {
    std::uint16_t bits = 0;

    Color slot(int i) const { return (bits >> (10 - i)) & 1; }
    State10 with_slot(int i, Color v) const {
        const std::uint16_t mask = std::uint16_t(1) << (10 - i);
        return State10{static_cast<std::uint16_t>(v & 1 ? bits | mask : bits & ~mask)};
    }

    friend bool operator==(State10, State10) = default;
    friend auto operator<=>(State10, State10) = default;
};

inline constexpr int kNumStates10 = 1 << 10;
inline constexpr int kNumTuples4 = 1 << 4;

// Strictly increasing quadruple of positions in 1..10.
struct PositionQuadruple {
    std::array<int, 4> p;

    constexpr PositionQuadruple(int i, int j, int k, int l) : p{i, j, k, l} {
        if (!(1 <= i && i < j && j < k && k < l && l <= 10))
            throw std::invalid_argument("PositionQuadruple: positions must satisfy 1 <= i < j < k < l <= 10");
    }
    constexpr int operator[](int idx) const { return p[idx]; }
};

// Total map {0,1}^4 -> {0,1}^4 as a 16-entry lookup table. Bijectivity is not
// part of the type; callers that need it check is_bijective().
struct SetMap {
    std::array<Tuple4, 16> table{};

    Tuple4 operator()(Tuple4 in) const { return table[in.bits]; }

    bool is_bijective() const {
        std::uint16_t seen = 0;
        for (const Tuple4 out : table) seen |= std::uint16_t(1) << out.bits;
        return seen == 0xffff;
    }

    static SetMap identity() {
        SetMap m;
        for (int v = 0; v < 16; ++v) m.table[v] = Tuple4{static_cast<std::uint8_t>(v)};
        return m;
    }

    friend bool operator==(const SetMap&, const SetMap&) = default;
};

// 4x4 matrix over F2, acting on column vectors (x,y,z,t)^T.
struct BinaryMatrix4 {
    std::array<std::array<std::uint8_t, 4>, 4> e{};

    static BinaryMatrix4 from_rows(std::array<std::array<std::uint8_t, 4>, 4> rows) {
        for (auto& row : rows)
            for (auto& v : row)
                if (v > 1) throw std::invalid_argument("BinaryMatrix4: entries must be bits");
        return BinaryMatrix4{rows};
    }
    static BinaryMatrix4 identity() {
        BinaryMatrix4 m;
        for (int i = 0; i < 4; ++i) m.e[i][i] = 1;
        return m;
    }
    BinaryMatrix4 transpose() const {
        BinaryMatrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.e[i][j] = e[j][i];
        return m;
    }
    BinaryMatrix4 mul(const BinaryMatrix4& o) const {
        BinaryMatrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::uint8_t s = 0;
                for (int k = 0; k < 4; ++k) s ^= e[i][k] & o.e[k][j];
                m.e[i][j] = s;
            }
        return m;
    }
    Tuple4 apply(Tuple4 in) const {
        std::uint8_t out = 0;
        for (int i = 0; i < 4; ++i) {
            std::uint8_t s = 0;
            for (int j = 0; j < 4; ++j) s ^= e[i][j] & in.component(j + 1);
            out |= std::uint8_t(s) << (3 - i);
        }
        return Tuple4{out};
    }

    friend bool operator==(const BinaryMatrix4&, const BinaryMatrix4&) = default;
};

inline SetMap linear_map_from_matrix(const BinaryMatrix4& m) {
    SetMap r;
    for (int v = 0; v < 16; ++v) r.table[v] = m.apply(Tuple4{static_cast<std::uint8_t>(v)});
    return r;
}

// The five operator slots of the nonconstant equation and their spaces.
enum class OpLabel : int { R = 0, S = 1, T = 2, U = 3, V = 4 };

inline constexpr std::array<OpLabel, 5> kAllLabels = {OpLabel::R, OpLabel::S, OpLabel::T, OpLabel::U, OpLabel::V};

inline constexpr char label_char(OpLabel l) { return "RSTUV"[static_cast<int>(l)]; }

// Position quadruples of the five factors. Single source of truth: these same
// spaces index the psi functions of the coboundary map (space m is shared by
// exactly the two factors whose quadruples contain m).
inline const std::array<PositionQuadruple, 5>& factor_positions() {
    static const std::array<PositionQuadruple, 5> table = {
        PositionQuadruple{1, 2, 3, 4},   // R
        PositionQuadruple{1, 5, 6, 7},   // S
        PositionQuadruple{2, 5, 8, 9},   // T
        PositionQuadruple{3, 6, 8, 10},  // U
        PositionQuadruple{4, 7, 9, 10},  // V
    };
    return table;
}

inline const PositionQuadruple& positions_of(OpLabel l) { return factor_positions()[static_cast<int>(l)]; }

// Application order of the five factors (rightmost factor of the written
// product acts first).
inline constexpr std::array<OpLabel, 5> kLhsOrder = {OpLabel::V, OpLabel::U, OpLabel::T, OpLabel::S, OpLabel::R};
inline constexpr std::array<OpLabel, 5> kRhsOrder = {OpLabel::R, OpLabel::S, OpLabel::T, OpLabel::U, OpLabel::V};

inline Tuple4 extract(State10 s, const PositionQuadruple& p) {
    return Tuple4::of(s.slot(p[0]), s.slot(p[1]), s.slot(p[2]), s.slot(p[3]));
}

inline State10 insert(State10 s, const PositionQuadruple& p, Tuple4 v) {
    for (int i = 0; i < 4; ++i) s = s.with_slot(p[i], v.component(i + 1));
    return s;
}

inline State10 apply_embedded(const SetMap& r, const PositionQuadruple& p, State10 s) {
    return insert(s, p, r(extract(s, p)));
}

struct Trajectory {
    State10 final_state;
    std::array<Tuple4, 5> args;  // argument quadruples in application order
};

inline Trajectory run_trajectory(const SetMap& r, State10 s, const std::array<OpLabel, 5>& order) {
    Trajectory tr;
    for (int i = 0; i < 5; ++i) {
        const PositionQuadruple& p = positions_of(order[i]);
        tr.args[i] = extract(s, p);
        s = insert(s, p, r(tr.args[i]));
    }
    tr.final_state = s;
    return tr;
}

// Left side of the equation: factors act in order V, U, T, S, R.
inline Trajectory lhs_trajectory(const SetMap& r, State10 s) { return run_trajectory(r, s, kLhsOrder); }

// Right side: factors act in order R, S, T, U, V.
inline Trajectory rhs_trajectory(const SetMap& r, State10 s) { return run_trajectory(r, s, kRhsOrder); }

// Holds, or the smallest (in integer order) state where the two sides differ.
struct FseVerdict {
    std::optional<State10> counterexample;
    bool holds() const { return !counterexample.has_value(); }
};

inline FseVerdict verify_set_fse(const SetMap& r) {
    for (int s = 0; s < kNumStates10; ++s) {
        const State10 st{static_cast<std::uint16_t>(s)};
        if (lhs_trajectory(r, st).final_state != rhs_trajectory(r, st).final_state) return FseVerdict{st};
    }
    return FseVerdict{};
}

struct CatalogEntry {
    std::string name;
    BinaryMatrix4 matrix;
};

// The eight F2-linear solutions (Hietarinta's two-color list): A1..A4 and
// their transposes.
inline const std::vector<CatalogEntry>& hietarinta_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        const BinaryMatrix4 a1 = BinaryMatrix4::from_rows({{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}});
        const BinaryMatrix4 a2 = BinaryMatrix4::from_rows({{{0, 1, 1, 1}, {1, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
        const BinaryMatrix4 a3 = BinaryMatrix4::from_rows({{{1, 1, 1, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}}});
        const BinaryMatrix4 a4 = BinaryMatrix4::from_rows({{{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}}});
        return std::vector<CatalogEntry>{
            {"A1", a1},           {"A2", a2},           {"A3", a3},           {"A4", a4},
            {"A1T", a1.transpose()}, {"A2T", a2.transpose()}, {"A3T", a3.transpose()}, {"A4T", a4.transpose()},
        };
    }();
    return catalog;
}

// Case-insensitive catalog lookup.
inline std::optional<BinaryMatrix4> find_catalog(std::string_view name) {
    std::string upper(name);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& entry : hietarinta_catalog())
        if (entry.name == upper) return entry.matrix;
    return std::nullopt;
}

}  // namespace fse
