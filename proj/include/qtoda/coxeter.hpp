#pragma once

#include "qtoda/cartan.hpp"

namespace qtoda {

/// Cayley data of the Coxeter element s_pi and a chosen solution n of
/// d_j n_ij - d_i n_ji = c_ij, plus every derived rational matrix the
/// realization needs, expressed in the weight-type basis Y:
///   K[i]       : Y-coordinates of K H_i = sum_j (n_ij/d_i) Y_j
///   P[i]       : Y-coordinates of ((1+s)/(1-s)) H_i  (= K - K^*)
///   two_inv[i] : Y-coordinates of (2/(1-s)) H_i      (= H_i + P H_i)
///   H_in_Y[i]  : Y-coordinates of H_i itself
/// D is the session denominator: every q-exponent in the pipeline is an
/// integer multiple of 1/D.
struct CoxeterDatum {
    std::vector<int> pi;       // 0-based permutation; s_pi = s_pi[0] ... s_pi[l-1]
    std::vector<int> pi_inv;
    RatMat s_root;             // s_pi on the alpha basis
    RatMat s_h;                // s_pi on the H basis
    std::vector<std::vector<int>> eps;
    std::vector<std::vector<long>> c;
    RatMat n;
    RatMat K;
    RatMat P;
    RatMat two_inv;
    RatMat H_in_Y;
    RatMat Y_in_H;             // Y_i = sum_j d_i (a^-1)_ij H_j
    long D = 1;
};

namespace detail {

inline RatMat simple_reflection_on_roots(const CartanDatum& cd, int i) {
    int l = cd.rank;
    RatMat s = rat_identity(l);
    // s_i(alpha_j) = alpha_j - a_ij alpha_i; columns are images
    for (int j = 0; j < l; ++j) s[i][j] -= Rat(cd.a[i][j]);
    return s;
}

inline RatMat simple_reflection_on_h(const CartanDatum& cd, int i) {
    int l = cd.rank;
    RatMat s = rat_identity(l);
    // s_i(H_j) = H_j - alpha_i(H_j) H_i = H_j - a_ji H_i
    for (int j = 0; j < l; ++j) s[i][j] -= Rat(cd.a[j][i]);
    return s;
}

inline long denominator_lcm(const RatMat& m, long acc) {
    Int l(acc);
    for (const auto& row : m)
        for (const auto& x : row) l = int_lcm(l, rat_den(x));
    return to_long(l);
}

} // namespace detail

inline void validate_permutation(const std::vector<int>& pi, int l) {
    if (pi.size() != static_cast<size_t>(l)) throw Error("pi must be a permutation of 1..rank");
    std::vector<bool> seen(l, false);
    for (int x : pi) {
        if (x < 0 || x >= l || seen[x]) throw Error("pi must be a permutation of 1..rank");
        seen[x] = true;
    }
}

struct CayleyResult {
    std::vector<std::vector<int>> eps;
    std::vector<std::vector<long>> c;
    RatMat s_root;
    RatMat s_h;
};

/// Cayley coefficients c_ij computed two ways: by the eps_ij * b_ij case
/// split and by the explicit pairing ((1+s)(1-s)^{-1} alpha_i, alpha_j).
/// Any disagreement signals a convention bug and aborts.
inline CayleyResult cayley_coeffs(const CartanDatum& cd, const std::vector<int>& pi) {
    int l = cd.rank;
    validate_permutation(pi, l);
    CayleyResult res;

    res.s_root = rat_identity(l);
    res.s_h = rat_identity(l);
    for (int k = 0; k < l; ++k) {
        res.s_root = mat_mul(res.s_root, detail::simple_reflection_on_roots(cd, pi[k]));
        res.s_h = mat_mul(res.s_h, detail::simple_reflection_on_h(cd, pi[k]));
    }

    std::vector<int> pinv(l);
    for (int k = 0; k < l; ++k) pinv[pi[k]] = k;
    res.eps.assign(l, std::vector<int>(l, 0));
    res.c.assign(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j)
                res.eps[i][j] = 0;
            else
                res.eps[i][j] = pinv[i] < pinv[j] ? -1 : 1;
            res.c[i][j] = res.eps[i][j] * cd.b[i][j];
        }

    // independent linear-algebra route
    RatMat one_minus = mat_sub(rat_identity(l), res.s_root);
    RatMat cayley = mat_mul(mat_add(rat_identity(l), res.s_root), mat_inverse(one_minus));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Rat cij(0);
            for (int k = 0; k < l; ++k) cij += cayley[k][i] * Rat(cd.b[k][j]);
            if (cij != Rat(res.c[i][j]))
                throw Error("Cayley coefficient mismatch at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "): case split gives " + std::to_string(res.c[i][j]) +
                            ", pairing gives " + rat_to_string(cij));
        }
    return res;
}

/// Canonical solution of d_j n_ij - d_i n_ji = c_ij:
/// n_ij = c_ij / d_j when pi^{-1}(i) < pi^{-1}(j), otherwise 0.
/// The symmetric part is free; this choice keeps the support upper
/// triangular in the pi order. The residual is verified exactly.
inline RatMat solve_n(const CartanDatum& cd, const std::vector<std::vector<long>>& c, const std::vector<int>& pi) {
    int l = cd.rank;
    validate_permutation(pi, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (c[i][j] != -c[j][i]) throw Error("solve_n: c is not antisymmetric");
    std::vector<int> pinv(l);
    for (int k = 0; k < l; ++k) pinv[pi[k]] = k;
    RatMat n = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (pinv[i] < pinv[j]) n[i][j] = Rat(c[i][j], cd.d[j]);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (Rat(cd.d[j]) * n[i][j] - Rat(cd.d[i]) * n[j][i] != Rat(c[i][j]))
                throw Error("solve_n: residual nonzero");
    return n;
}

inline CoxeterDatum make_coxeter_datum(const CartanDatum& cd, const std::vector<int>& pi) {
    int l = cd.rank;
    CoxeterDatum cx;
    cx.pi = pi;
    cx.pi_inv.assign(l, 0);
    for (int k = 0; k < l; ++k) cx.pi_inv[pi[k]] = k;

    CayleyResult cay = cayley_coeffs(cd, pi);
    cx.eps = cay.eps;
    cx.c = cay.c;
    cx.s_root = cay.s_root;
    cx.s_h = cay.s_h;
    cx.n = solve_n(cd, cx.c, pi);

    cx.K = rat_mat(l, l);
    cx.P = rat_mat(l, l);
    cx.H_in_Y = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            cx.K[i][j] = cx.n[i][j] / cd.d[i];
            cx.P[i][j] = cx.n[i][j] / cd.d[i] - cx.n[j][i] / cd.d[j];
            cx.H_in_Y[i][j] = Rat(cd.a[i][j], cd.d[j]);
        }
    cx.two_inv = mat_add(cx.H_in_Y, cx.P);

    // Y_i = sum_j d_i (a^-1)_ij H_j
    RatMat ainv;
    {
        RatMat am = rat_mat(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) am[i][j] = Rat(cd.a[i][j]);
        ainv = mat_inverse(am);
    }
    cx.Y_in_H = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) cx.Y_in_H[i][j] = Rat(cd.d[i]) * ainv[i][j];

    // Session denominator. Beyond the exponents visible in n, K, P and
    // 2/(1-s), representation legs introduce q^{mu(Y_i)} with fundamental
    // weight denominators, and products of the two kinds occur in the
    // Cartan prefactors; the lcm is widened by the Y-lattice denominator
    // so every exponent stays an integer multiple of 1/D.
    long d0 = 1;
    d0 = detail::denominator_lcm(cx.n, d0);
    d0 = detail::denominator_lcm(cx.K, d0);
    d0 = detail::denominator_lcm(cx.P, d0);
    d0 = detail::denominator_lcm(cx.two_inv, d0);
    d0 = detail::denominator_lcm(cx.H_in_Y, d0);
    long dy = detail::denominator_lcm(cx.Y_in_H, 1);
    long drho = 1;
    {
        // rho has half-integral alpha coordinates in general
        Int acc(1);
        RootSystem rs = build_root_system(cd);
        for (const auto& x : rs.rho) acc = int_lcm(acc, rat_den(x));
        drho = to_long(acc);
    }
    cx.D = to_long(int_lcm(Int(d0) * dy, Int(drho) * dy));
    // Evaluating both R-matrix legs in a representation (the Yang-Baxter
    // route, desk scale = rank <= 2) compounds the weight-lattice
    // denominator once more.
    if (l <= 2) cx.D = to_long(int_lcm(Int(cx.D), Int(cx.D) * dy));
    return cx;
}

} // namespace qtoda
