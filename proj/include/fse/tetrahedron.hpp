#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "fse/cohomology.hpp"
#include "fse/monomial.hpp"
#include "fse/numbers.hpp"
#include "fse/polynomial.hpp"
#include "fse/simplex.hpp"

// Tetrahedron operators K, L, M, N on three two-dimensional factors:
// the explicit symmetric families, the weighted-partial-trace descent from
// constrained cocycles of a four-simplex solution, and the verification
//
//   K_123 L_145 M_246 N_356 = N_356 M_246 L_145 K_123
//
// together with the irreducibility, vacuum-vector and thermodynamic analyses.

namespace fse {

// ---------------------------------------------------------------------------
// Explicit symmetric families

// Cell groups of the two sparsity patterns (0-based row, col). The two
// patterns share the same 16-cell support; they differ in which cells carry
// which parameter.
struct PatternCells {
    std::vector<std::pair<int, int>> first;   // cells carrying the first parameter
    std::vector<std::pair<int, int>> second;  // ... the second
    std::vector<std::pair<int, int>> third;   // ... the third
};

inline const PatternCells& family_kl_cells() {
    static const PatternCells cells = {
        {{0, 0}, {1, 2}, {2, 1}, {3, 3}},
        {{0, 5}, {1, 7}, {2, 4}, {3, 6}, {4, 2}, {5, 0}, {6, 3}, {7, 1}},
        {{4, 7}, {5, 5}, {6, 6}, {7, 4}},
    };
    return cells;
}

inline const PatternCells& family_mn_cells() {
    static const PatternCells cells = {
        {{0, 0}, {2, 4}, {4, 2}, {6, 6}},
        {{0, 5}, {1, 2}, {2, 1}, {3, 6}, {4, 7}, {5, 0}, {6, 3}, {7, 4}},
        {{1, 7}, {3, 3}, {5, 5}, {7, 1}},
    };
    return cells;
}

namespace detail {

inline PolyMatrix fill_pattern(const PatternCells& cells, const MultiPoly& p1, const MultiPoly& p2, const MultiPoly& p3) {
    PolyMatrix m(3);
    for (auto [r, c] : cells.first) m.at(r, c) = p1;
    for (auto [r, c] : cells.second) m.at(r, c) = p2;
    for (auto [r, c] : cells.third) m.at(r, c) = p3;
    return m;
}

}  // namespace detail

// The symmetric K = L family, 16 nonzero cells in parameters (a, b, c).
inline PolyMatrix family_KL(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
    return detail::fill_pattern(family_kl_cells(), a, b, c);
}
inline PolyMatrix family_KL() {
    return family_KL(MultiPoly::variable(Var::a), MultiPoly::variable(Var::b), MultiPoly::variable(Var::c));
}

// The symmetric M = N family in parameters (a', b', c').
inline PolyMatrix family_MN(const MultiPoly& ap, const MultiPoly& bp, const MultiPoly& cp) {
    return detail::fill_pattern(family_mn_cells(), ap, bp, cp);
}
inline PolyMatrix family_MN() {
    return family_MN(MultiPoly::variable(Var::ap), MultiPoly::variable(Var::bp), MultiPoly::variable(Var::cp));
}

// ---------------------------------------------------------------------------
// Tetrahedron equation

struct TetraQuadruple {
    PolyMatrix K, L, M, N;  // all on three factors (dim 8)
};

// Factor positions of K, L, M, N inside the six-factor space: the space
// labels {1,2,3,5,6,8} of the four-simplex picture relabeled order-
// preservingly to {1,...,6}.
inline constexpr std::array<std::array<int, 3>, 4> kTetraPositions = {{
    {1, 2, 3},  // K
    {1, 4, 5},  // L
    {2, 4, 6},  // M
    {3, 5, 6},  // N
}};

struct TetraVerdict {
    PolyMatrix difference;  // lhs - rhs on the 64-dimensional space
    bool holds() const { return difference.is_zero(); }
};

inline TetraVerdict verify_tetrahedron(const TetraQuadruple& q) {
    const std::array<const PolyMatrix*, 4> ops = {&q.K, &q.L, &q.M, &q.N};
    std::array<PolyMatrix, 4> emb;
    for (int i = 0; i < 4; ++i) {
        if (ops[i]->factors() != 3) throw std::invalid_argument("verify_tetrahedron: operators must act on 3 factors");
        emb[i] = embed_matrix(*ops[i], kTetraPositions[i], 6);
    }
    const PolyMatrix lhs = matrix_mul(matrix_mul(emb[0], emb[1]), matrix_mul(emb[2], emb[3]));
    const PolyMatrix rhs = matrix_mul(matrix_mul(emb[3], emb[2]), matrix_mul(emb[1], emb[0]));
    return TetraVerdict{lhs - rhs};
}

// ---------------------------------------------------------------------------
// Descent from constrained cocycles

namespace detail {

inline bool annihilated_by(const IntMatrix& m, std::span<const Rational> v) {
    if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("annihilated_by: size mismatch");
    for (int i = 0; i < m.rows; ++i) {
        Rational s = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) s += Rational(m.at(i, j)) * v[j];
        if (s != 0) return false;
    }
    return true;
}

// Scale to a primitive integer cochain (the zero cochain stays zero).
inline CochainVector primitive_integer_cochain(const CochainVector& c) {
    Int lcm = 1;
    for (const Rational& x : c.values)
        if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    Int g = 0;
    std::array<Int, kCochainDim> scaled;
    for (int i = 0; i < kCochainDim; ++i) {
        scaled[i] = numerator(c.values[i] * Rational(lcm));
        g = boost::multiprecision::gcd(g, scaled[i]);
    }
    if (g == 0) return c;
    CochainVector out;
    for (int i = 0; i < kCochainDim; ++i) out.values[i] = Rational(scaled[i] / g);
    return out;
}

inline void require_constrained_cocycle(const SetMap& r, const CochainVector& c) {
    if (!c.block_is_zero(OpLabel::V))
        throw std::invalid_argument("cochain is not constrained: phi_V block is not identically zero");
    if (!annihilated_by(build_cocycle_system(r), c.values))
        throw std::invalid_argument("cochain is not a cocycle of the given map");
}

inline PolyMatrix poly_from_rational(const RationalMatrix& m, int factors) {
    if (m.dim != (1 << factors)) throw std::invalid_argument("poly_from_rational: dimension mismatch");
    PolyMatrix out(factors);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (m.at(i, j) != 0) out.at(i, j) = MultiPoly::constant(m.at(i, j));
    return out;
}

}  // namespace detail

// K = Trace_4((1 1;1 1) R), and likewise L, M, N from S, T, U: each operator
// is traced over its fourth listed space (7, 9, 10 respectively) with the
// all-ones weight, leaving 8x8 matrices on spaces (1,2,3), (1,5,6), (2,5,8),
// (3,6,8) -- exactly the tetrahedron labels above.
inline TetraQuadruple trace_construct(const SetMap& r, const CochainVector& c, const Rational& base) {
    detail::require_constrained_cocycle(r, c);
    const CochainVector scaled = detail::primitive_integer_cochain(c);
    const OperatorQuintuple q = quintuple_from_cocycle(r, scaled);

    const auto w = all_ones_weight();
    auto descend = [&](OpLabel label) {
        return weighted_partial_trace(detail::poly_from_rational(scalar_instantiate(q[label], base), 4), 4, w);
    };
    return TetraQuadruple{descend(OpLabel::R), descend(OpLabel::S), descend(OpLabel::T), descend(OpLabel::U)};
}

// ---------------------------------------------------------------------------
// The conjugated identity on the full ten-factor space:
//
//   P_4790 R_1234 S_1567 T_2589 U_3680 = V_4790 P_4790 U_3680 T_2589 S_1567 R_1234 V_4790^{-1}
//
// with P the all-ones weight on spaces 4, 7, 9, 10. Both sides are computed
// column by column; everything except P is monomial, and P fans each basis
// vector out to the 16 states differing on those four spaces.

struct ConjugatedVerdict {
    std::optional<std::uint32_t> counterexample;  // smallest failing column
    bool holds() const { return !counterexample.has_value(); }
};

inline ConjugatedVerdict verify_conjugated_identity(const SetMap& r, const CochainVector& c, const Rational& base) {
    detail::require_constrained_cocycle(r, c);
    const CochainVector scaled = detail::primitive_integer_cochain(c);
    const OperatorQuintuple q = quintuple_from_cocycle(r, scaled);

    std::array<MonomialOperator, 5> emb;
    for (OpLabel label : kAllLabels) emb[static_cast<int>(label)] = embed(q[label], positions_of(label));
    const auto& [er, es, et, eu, ev] = emb;

    // Scalars as exact rationals; exponents are integers after scaling.
    auto scalar_of = [&](const MonomialOperator& op, std::uint32_t s) {
        return pow_rational(base, numerator(op.log_scalars[s]));
    };
    // Monomial chain applied rightmost-first to (state, scalar).
    auto apply_chain = [&](std::span<const MonomialOperator* const> chain, std::uint32_t s) {
        Rational scal = 1;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            scal *= scalar_of(**it, s);
            s = (*it)->perm[s];
        }
        return std::pair<std::uint32_t, Rational>{s, scal};
    };
    // The 16 states reachable from s by rewriting spaces 4, 7, 9, 10.
    const PositionQuadruple traced = positions_of(OpLabel::V);
    auto fan_out = [&](std::uint32_t s) {
        std::array<std::uint32_t, 16> rows;
        const State10 st{static_cast<std::uint16_t>(s)};
        for (int t = 0; t < 16; ++t) rows[t] = insert(st, traced, Tuple4{static_cast<std::uint8_t>(t)}).bits;
        return rows;
    };

    const MonomialOperator ev_inv = ev.inverse();
    using Column = std::vector<std::pair<std::uint32_t, Rational>>;
    auto normalize = [](Column col) {
        std::ranges::sort(col);
        return col;
    };

    const std::array<const MonomialOperator*, 4> rstu = {&er, &es, &et, &eu};
    for (std::uint32_t s = 0; s < kNumStates10; ++s) {
        // Left side: R S T U, then P.
        const auto [lm, lscal] = apply_chain(rstu, s);
        Column lhs;
        for (std::uint32_t row : fan_out(lm)) lhs.emplace_back(row, lscal);

        // Right side: V^{-1}, then R S T U, then P, then V.
        const auto [v0, vscal0] = apply_chain(std::array<const MonomialOperator*, 1>{&ev_inv}, s);
        const auto [rm, rscal] = apply_chain(rstu, v0);
        Column rhs;
        for (std::uint32_t row : fan_out(rm))
            rhs.emplace_back(ev.perm[row], vscal0 * rscal * scalar_of(ev, row));

        if (normalize(std::move(lhs)) != normalize(std::move(rhs))) return ConjugatedVerdict{s};
    }
    return ConjugatedVerdict{};
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q (for the irreducibility test)

struct UPoly {
    std::vector<Rational> coeff;  // ascending degree, no trailing zeros

    void normalize() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }
    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }  // -1 for zero
};

inline UPoly upoly_mod(UPoly a, const UPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational f = a.coeff.back() / b.coeff.back();
        const int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) a.coeff[i + shift] -= f * b.coeff[i];
        a.coeff.pop_back();
        a.normalize();
    }
    return a;
}

// Monic gcd; gcd(0, 0) = 0.
inline UPoly upoly_gcd(UPoly a, UPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        UPoly r = upoly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const Rational lead = a.coeff.back();
        for (Rational& c : a.coeff) c /= lead;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Genuine three-dimensionality

// A factor is reducible when some vector (1, u) on that input reduces the
// operator to two dimensions, i.e. when the 16 entry polynomials of
// B10 + u (B11 - B00) - u^2 B01 (4x4 blocks by that factor) share a root.
struct FactorReducibility {
    bool irreducible = false;
    UPoly common_factor;  // zero polynomial when the block equation degenerates
};

struct Genuine3dReport {
    std::array<FactorReducibility, 3> factor;
    bool all_irreducible() const {
        return factor[0].irreducible && factor[1].irreducible && factor[2].irreducible;
    }
};

// k must have constant (already evaluated) entries on 3 factors.
inline Genuine3dReport genuine_3d_check(const PolyMatrix& k) {
    if (k.factors() != 3) throw std::invalid_argument("genuine_3d_check: need 3 factors");
    std::array<Rational, 64> entries;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) entries[i * 8 + j] = k.at(i, j).constant_value();

    Genuine3dReport report;
    for (int f = 1; f <= 3; ++f) {
        auto block_entry = [&](int bi, int bj, int p, int q) {
            const int row = detail::insert_bit(p, f, bi, 3);
            const int col = detail::insert_bit(q, f, bj, 3);
            return entries[row * 8 + col];
        };
        std::vector<UPoly> polys;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) {
                UPoly u;
                u.coeff = {block_entry(1, 0, p, q), block_entry(1, 1, p, q) - block_entry(0, 0, p, q),
                           -block_entry(0, 1, p, q)};
                u.normalize();
                polys.push_back(std::move(u));
            }
        UPoly g;
        for (const UPoly& p : polys) g = upoly_gcd(std::move(g), p);
        FactorReducibility& fr = report.factor[f - 1];
        fr.common_factor = g;
        fr.irreducible = !g.is_zero() && g.degree() == 0;
    }
    (void)cache;
    return report;
}

inline Genuine3dReport genuine_3d_check_at(const PolyMatrix& k, const Rational& a, const Rational& b, const Rational& c) {
    return genuine_3d_check(evaluate(k, {a, b, c, Rational(0), Rational(0), Rational(0)}));
}

// ---------------------------------------------------------------------------
// Vacuum-vector search (numeric corroboration of nonexistence)

// A candidate basis of product vectors (one pair per factor, parameterized by
// angles) mapped by k to product vectors: all eight images of basis products
// must be product vectors themselves.
struct VacuumBasis {
    std::array<std::array<double, 2>, 2> u, v, w;
    double residual = 0.0;
};

namespace detail {

// Deviation of an 8-vector from being a pure tensor product: sum over the
// three 2x4 unfoldings of lambda_min(M M^T) / ||M||_F^2.
inline double product_deviation(const std::array<double, 8>& t) {
    double total = 0.0;
    for (int f = 1; f <= 3; ++f) {
        double m[2][4];
        for (int bit = 0; bit < 2; ++bit)
            for (int rest = 0; rest < 4; ++rest) m[bit][rest] = t[insert_bit(rest, f, bit, 3)];
        const double g00 = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[0][3] * m[0][3];
        const double g11 = m[1][0] * m[1][0] + m[1][1] * m[1][1] + m[1][2] * m[1][2] + m[1][3] * m[1][3];
        const double g01 = m[0][0] * m[1][0] + m[0][1] * m[1][1] + m[0][2] * m[1][2] + m[0][3] * m[1][3];
        const double tr = g00 + g11;
        const double det = g00 * g11 - g01 * g01;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        const double lmin = std::max(0.0, (tr - disc) / 2.0);
        if (tr > 1e-300) total += lmin / tr;
    }
    return total;
}

}  // namespace detail

// Multi-start Nelder-Mead over six angles; returns a basis whose eight
// product images all stay product vectors to within tol, or nothing.
inline std::optional<VacuumBasis> vacuum_search(const PolyMatrix& k, std::uint64_t seed = 0, int starts = 1000,
                                                double tol = 1e-10) {
    if (k.factors() != 3) throw std::invalid_argument("vacuum_search: need 3 factors");
    double kd[8][8];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) kd[i][j] = to_double(k.at(i, j).constant_value());

    using Angles = std::array<double, 6>;  // u1, u2, v1, v2, w1, w2
    auto objective = [&](const Angles& th) {
        double cosv[6], sinv[6];
        for (int i = 0; i < 6; ++i) {
            cosv[i] = std::cos(th[i]);
            sinv[i] = std::sin(th[i]);
        }
        double total = 0.0;
        for (int iu = 0; iu < 2; ++iu)
            for (int iv = 0; iv < 2; ++iv)
                for (int iw = 0; iw < 2; ++iw) {
                    std::array<double, 8> prod, img{};
                    for (int s = 0; s < 8; ++s) {
                        const double f1 = (s & 4) ? sinv[iu] : cosv[iu];
                        const double f2 = (s & 2) ? sinv[2 + iv] : cosv[2 + iv];
                        const double f3 = (s & 1) ? sinv[4 + iw] : cosv[4 + iw];
                        prod[s] = f1 * f2 * f3;
                    }
                    for (int i = 0; i < 8; ++i)
                        for (int j = 0; j < 8; ++j) img[i] += kd[i][j] * prod[j];
                    total += detail::product_deviation(img);
                }
        return total;
    };
    auto independent = [](const Angles& th) {
        return std::abs(std::sin(th[0] - th[1])) > 1e-6 && std::abs(std::sin(th[2] - th[3])) > 1e-6 &&
               std::abs(std::sin(th[4] - th[5])) > 1e-6;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 3.14159265358979323846);

    std::optional<VacuumBasis> best;
    for (int start = 0; start < starts; ++start) {
        // Nelder-Mead simplex on the 6 angles.
        constexpr int n = 6;
        std::array<std::pair<double, Angles>, n + 1> simplex;
        Angles base;
        for (double& a : base) a = uni(rng);
        simplex[0] = {objective(base), base};
        for (int i = 0; i < n; ++i) {
            Angles p = base;
            p[i] += 0.25;
            simplex[i + 1] = {objective(p), p};
        }
        for (int iter = 0; iter < 250; ++iter) {
            std::sort(simplex.begin(), simplex.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (simplex[0].first < tol * 1e-3 || simplex[n].first - simplex[0].first < 1e-16) break;
            Angles centroid{};
            for (int i = 0; i < n; ++i)
                for (int d = 0; d < n; ++d) centroid[d] += simplex[i].second[d] / n;
            auto blend = [&](double coef) {
                Angles p;
                for (int d = 0; d < n; ++d) p[d] = centroid[d] + coef * (simplex[n].second[d] - centroid[d]);
                return p;
            };
            const Angles refl = blend(-1.0);
            const double frefl = objective(refl);
            if (frefl < simplex[0].first) {
                const Angles exp2 = blend(-2.0);
                const double fexp = objective(exp2);
                simplex[n] = fexp < frefl ? std::pair{fexp, exp2} : std::pair{frefl, refl};
            } else if (frefl < simplex[n - 1].first) {
                simplex[n] = {frefl, refl};
            } else {
                const Angles contr = blend(0.5);
                const double fcontr = objective(contr);
                if (fcontr < simplex[n].first) {
                    simplex[n] = {fcontr, contr};
                } else {
                    for (int i = 1; i <= n; ++i) {
                        for (int d = 0; d < n; ++d)
                            simplex[i].second[d] = (simplex[i].second[d] + simplex[0].second[d]) / 2;
                        simplex[i].first = objective(simplex[i].second);
                    }
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        const auto& [fbest, th] = simplex[0];
        if (fbest < tol && independent(th)) {
            VacuumBasis basis;
            basis.u = {{{std::cos(th[0]), std::sin(th[0])}, {std::cos(th[1]), std::sin(th[1])}}};
            basis.v = {{{std::cos(th[2]), std::sin(th[2])}, {std::cos(th[3]), std::sin(th[3])}}};
            basis.w = {{{std::cos(th[4]), std::sin(th[4])}, {std::cos(th[5]), std::sin(th[5])}}};
            basis.residual = fbest;
            if (!best || fbest < best->residual) best = basis;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Thermodynamics of the symmetric family

// Elements p + q s of Q[s]/(s^2 - d): exact arithmetic in the quadratic
// extension defined by the discriminant.
struct QuadExt {
    Rational p, q, d;

    static QuadExt scalar(Rational v, Rational d) { return {std::move(v), Rational(0), std::move(d)}; }
    static QuadExt root(Rational d) { return {Rational(0), Rational(1), std::move(d)}; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.p + y.p, x.q + y.q, x.d}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.p - y.p, x.q - y.q, x.d}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.p * y.p + x.d * x.q * y.q, x.p * y.q + x.q * y.p, x.d};
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.p == y.p && x.q == y.q; }

    double approx() const { return to_double(p) + to_double(q) * std::sqrt(to_double(d)); }
};

struct ThermoResult {
    Rational trace;         // a + c
    Rational discriminant;  // (a - c)^2 + 4 b^2;  lambda = (trace + sqrt(disc)) / 2
    bool eigen_identity_exact = false;
    double lambda = 0.0;
    double u1 = 0.0;
    double free_energy = 0.0;  // log lambda
};

// Perron eigen-pair of ((a, b), (b, c)) and the exact check that
// Omega = (1, u1) x (1, 1) x (1, 1) is an eigenvector of the K family.
inline ThermoResult thermo(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("thermo: parameters must be positive");
    ThermoResult res;
    res.trace = a + c;
    res.discriminant = (a - c) * (a - c) + 4 * b * b;

    const Rational& d = res.discriminant;
    const QuadExt s = QuadExt::root(d);
    const QuadExt lambda = (QuadExt::scalar(res.trace, d) + s) * QuadExt::scalar(Rational(1, 2), d);
    // u1 = (lambda - a) / b, the positive eigenvector component.
    const QuadExt u1 = (lambda - QuadExt::scalar(a, d)) * QuadExt::scalar(Rational(1) / b, d);

    // Omega and K Omega, all in the extension.
    const PolyMatrix k = evaluate(family_KL(), {a, b, c, Rational(0), Rational(0), Rational(0)});
    std::array<QuadExt, 8> omega;
    for (int i = 0; i < 8; ++i) omega[i] = (i & 4) ? u1 : QuadExt::scalar(Rational(1), d);
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i) {
        QuadExt sum = QuadExt::scalar(Rational(0), d);
        for (int j = 0; j < 8; ++j) {
            const Rational e = k.at(i, j).constant_value();
            if (e != 0) sum = sum + QuadExt::scalar(e, d) * omega[j];
        }
        ok = sum == lambda * omega[i];
    }
    res.eigen_identity_exact = ok;
    res.lambda = lambda.approx();
    res.u1 = u1.approx();
    res.free_energy = std::log(res.lambda);
    return res;
}

// ---------------------------------------------------------------------------
// Pattern and symmetry report for trace-constructed quadruples

struct FamilyFit {
    bool pattern_ok = false;  // nonzero support contained in the family pattern
    bool symmetric = false;
    std::optional<std::array<MultiPoly, 3>> fitted;  // per-group values, when constant per group
};

struct SymmetricPatternReport {
    FamilyFit k, l, m, n;
};

namespace detail {

inline FamilyFit fit_against(const PolyMatrix& mat, const PatternCells& cells) {
    FamilyFit fit;
    std::array<bool, 64> in_pattern{};
    auto mark = [&](const std::vector<std::pair<int, int>>& group) {
        for (auto [r, c] : group) in_pattern[r * 8 + c] = true;
    };
    mark(cells.first);
    mark(cells.second);
    mark(cells.third);

    fit.pattern_ok = true;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (!in_pattern[r * 8 + c] && !mat.at(r, c).is_zero()) fit.pattern_ok = false;
    fit.symmetric = mat == mat.transpose();

    if (fit.symmetric && fit.pattern_ok) {
        auto group_value = [&](const std::vector<std::pair<int, int>>& group) -> std::optional<MultiPoly> {
            const MultiPoly& first = mat.at(group[0].first, group[0].second);
            for (auto [r, c] : group)
                if (!(mat.at(r, c) == first)) return std::nullopt;
            return first;
        };
        const auto va = group_value(cells.first);
        const auto vb = group_value(cells.second);
        const auto vc = group_value(cells.third);
        if (va && vb && vc) fit.fitted = std::array<MultiPoly, 3>{*va, *vb, *vc};
    }
    return fit;
}

}  // namespace detail

inline SymmetricPatternReport symmetric_pattern_check(const TetraQuadruple& q) {
    return SymmetricPatternReport{
        detail::fit_against(q.K, family_kl_cells()),
        detail::fit_against(q.L, family_kl_cells()),
        detail::fit_against(q.M, family_mn_cells()),
        detail::fit_against(q.N, family_mn_cells()),
    };
}

}  // namespace fse
