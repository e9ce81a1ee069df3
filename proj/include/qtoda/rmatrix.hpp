#pragma once

#include "qtoda/session.hpp"

namespace qtoda {

/// Element of U (x) End(V): a dim x dim matrix with symbolic leg-1 entries.
struct MixedElement {
    ContextPtr ctx;
    int dim = 0;
    std::vector<AlgebraElement> a; // row major

    MixedElement() = default;
    MixedElement(ContextPtr c, int n) : ctx(std::move(c)), dim(n), a(n * n, AlgebraElement(ctx)) {}

    AlgebraElement& at(int i, int j) { return a[i * dim + j]; }
    const AlgebraElement& at(int i, int j) const { return a[i * dim + j]; }

    static MixedElement identity(const ContextPtr& c, int n) {
        MixedElement m(c, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::unit(c);
        return m;
    }

    /// 1 (x) M for a scalar matrix M.
    static MixedElement from_leg2(const ContextPtr& c, const QMat& m) {
        MixedElement r(c, static_cast<int>(m.size()));
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j)
                if (!m[i][j].is_zero()) r.at(i, j) = AlgebraElement::scalar(c, m[i][j]);
        return r;
    }

    /// Sum_k exp(h y_k . Y) (x) E_kk for per-weight Cartan vectors.
    static MixedElement cartan_diag(const ContextPtr& c, const std::vector<RatVec>& ys) {
        MixedElement r(c, static_cast<int>(ys.size()));
        for (int k = 0; k < r.dim; ++k) r.at(k, k) = AlgebraElement::cartan(c, ys[k]);
        return r;
    }

    MixedElement operator*(const MixedElement& o) const {
        MixedElement r(ctx, dim);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                if (at(i, k).empty()) continue;
                for (int j = 0; j < dim; ++j) {
                    if (o.at(k, j).empty()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    MixedElement operator-(const MixedElement& o) const {
        MixedElement r = *this;
        for (int i = 0; i < dim * dim; ++i) r.a[i] -= o.a[i];
        return r;
    }

    AlgebraElement trace_leg2() const {
        AlgebraElement t(ctx);
        for (int i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
};

/// exp_{qbase}[coeff * x (x) m] truncated by nilpotency of the leg-2 matrix.
inline MixedElement mixed_qexp(const ContextPtr& ctx, const QScalar& coeff, const AlgebraElement& x,
                               const QMat& m, const QScalar& qbase) {
    int n = static_cast<int>(m.size());
    MixedElement r = MixedElement::identity(ctx, n);
    QMat mk = m;
    AlgebraElement xk = x;
    QScalar ck = coeff;
    for (int k = 1;; ++k) {
        if (qmat_is_zero(mk)) break;
        if (k > n)
            throw Error("mixed_qexp: leg-2 factor is not nilpotent (invalid representation data)");
        QScalar c = ck / qexp_fact(k, qbase);
        QMat scaled = qmat_scale(mk, c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!scaled[i][j].is_zero()) r.at(i, j) += xk * scaled[i][j];
        mk = qmat_mul(mk, m);
        xk = xk * x;
        ck *= coeff;
    }
    return r;
}

enum class RVariant { R, R21 };

namespace detail {

struct RepData {
    RatMat wY;                    // mu_k(Y_j)
    std::vector<RatVec> mu_int;   // mu_k(H_i) as rationals
    std::vector<RatVec> mu_PH;    // (mu_k(P H_i))_i
    std::vector<RatVec> mu_Y_K;   // sum_i mu_k(Y_i) H_i in Y coords
    std::vector<RatVec> mu_Y_P;   // sum_i mu_k(Y_i) P H_i in Y coords
};

inline RepData rep_data(const Session& s, const Representation& rep) {
    RepData rd;
    int l = s.rank();
    rd.wY = rep.weights_Y(s.cox.Y_in_H);
    for (int k = 0; k < rep.dim; ++k) {
        RatVec mu(l, Rat(0)), muPH(l, Rat(0)), muYK(l, Rat(0)), muYP(l, Rat(0));
        for (int i = 0; i < l; ++i) mu[i] = Rat(rep.weights[k][i]);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                muPH[i] += s.cox.P[i][j] * rd.wY[k][j];
                muYK[j] += rd.wY[k][i] * s.cox.H_in_Y[i][j];
                muYP[j] += rd.wY[k][i] * s.cox.P[i][j];
            }
        rd.mu_int.push_back(std::move(mu));
        rd.mu_PH.push_back(std::move(muPH));
        rd.mu_Y_K.push_back(std::move(muYK));
        rd.mu_Y_P.push_back(std::move(muYP));
    }
    return rd;
}

} // namespace detail

/// The Coxeter-realization R-matrix with the second leg evaluated in a
/// representation. Variant R uses the factorization with the Cartan
/// prefactor exp[h(sum Y_i (x) H_i + sum P H_i (x) Y_i)] followed by the
/// root factors e_beta (x) exp(h P beta-check) f_beta; variant R21 is the
/// flip, built from the second factorization.
inline MixedElement r_matrix_leg2(const Session& s, const Representation& rep, RVariant variant) {
    auto rd = detail::rep_data(s, rep);
    const auto& ctx = s.cox_ctx;
    QScalar qdiff = QScalar::u_pow(s.D) - QScalar::u_pow(-s.D);

    if (variant == RVariant::R) {
        std::vector<RatVec> ys;
        for (int k = 0; k < rep.dim; ++k) ys.push_back(rd.mu_int[k] + rd.mu_Y_P[k]);
        MixedElement r = MixedElement::cartan_diag(ctx, ys);
        for (int p = 0; p < static_cast<int>(s.roots.count()); ++p) {
            int g = s.ordering.order[p];
            AlgebraElement leg2 = AlgebraElement::cartan(ctx, s.p_beta_vee(g)) * s.crv.f[g];
            QMat m = s.eval_cox(leg2, rep, rd.wY);
            r = r * mixed_qexp(ctx, qdiff / s.a_beta[g], s.crv.e[g], m, s.q_beta(g).inverse());
        }
        return r;
    }

    // R21 via the flip of R = C1 . prod exp[... e_beta exp(-h P beta-check) (x) f_beta] . C2
    MixedElement r = MixedElement::cartan_diag(ctx, rd.mu_Y_K);
    for (int p = 0; p < static_cast<int>(s.roots.count()); ++p) {
        int g = s.ordering.order[p];
        AlgebraElement leg2 = s.crv.e[g] * AlgebraElement::cartan(ctx, -s.p_beta_vee(g));
        QMat m = s.eval_cox(leg2, rep, rd.wY);
        r = r * mixed_qexp(ctx, qdiff / s.a_beta[g], s.crv.f[g], m, s.q_beta(g).inverse());
    }
    return r * MixedElement::cartan_diag(ctx, rd.mu_PH);
}

/// Independent route to R21: the flip of the other factorization of R
/// (single combined Cartan prefactor, root factors exp(h P beta-check) f_beta (x) e_beta).
inline MixedElement r21_matrix_leg2_alt(const Session& s, const Representation& rep) {
    auto rd = detail::rep_data(s, rep);
    const auto& ctx = s.cox_ctx;
    QScalar qdiff = QScalar::u_pow(s.D) - QScalar::u_pow(-s.D);
    std::vector<RatVec> ys;
    for (int k = 0; k < rep.dim; ++k) ys.push_back(rd.mu_Y_K[k] + rd.mu_PH[k]);
    MixedElement r = MixedElement::cartan_diag(ctx, ys);
    for (int p = 0; p < static_cast<int>(s.roots.count()); ++p) {
        int g = s.ordering.order[p];
        AlgebraElement leg1 = AlgebraElement::cartan(ctx, s.p_beta_vee(g)) * s.crv.f[g];
        QMat m = s.eval_cox(s.crv.e[g], rep, rd.wY);
        r = r * mixed_qexp(ctx, qdiff / s.a_beta[g], leg1, m, s.q_beta(g).inverse());
    }
    return r;
}

/// pi(exp(2h rho-check)) = diag(q^{2 sum_j mu_k(Y_j)}).
inline QMat two_rho_matrix(const Session& s, const Representation& rep, const RatMat& wY) {
    QMat m = qmat(rep.dim);
    for (int k = 0; k < rep.dim; ++k) {
        Rat e(0);
        for (int j = 0; j < s.rank(); ++j) e += 2 * wY[k][j];
        m[k][k] = QScalar::q_pow(e, s.D);
    }
    return m;
}

/// C_V = (id (x) tr_V)(R21 R (1 (x) exp(2h rho-check))), central in the
/// Coxeter realization (verified by tests, not assumed here).
inline AlgebraElement central_element(const Session& s, const Representation& rep) {
    auto rd = detail::rep_data(s, rep);
    MixedElement r21 = r_matrix_leg2(s, rep, RVariant::R21);
    MixedElement r = r_matrix_leg2(s, rep, RVariant::R);
    MixedElement prod = (r21 * r) * MixedElement::from_leg2(s.cox_ctx, two_rho_matrix(s, rep, rd.wY));
    return prod.trace_leg2();
}

// --- fully evaluated identities ----------------------------------------------

/// Evaluate leg 1 of a mixed element in the same representation:
/// result[(a,k),(b,m)] = pi(entry_{km})[a][b], leg-1 index major.
inline QMat evaluate_leg1(const Session& s, const MixedElement& x, const Representation& rep) {
    auto wY = rep.weights_Y(s.cox.Y_in_H);
    int n = rep.dim;
    QMat big = qmat(static_cast<size_t>(n) * x.dim);
    for (int k = 0; k < x.dim; ++k)
        for (int m = 0; m < x.dim; ++m) {
            if (x.at(k, m).empty()) continue;
            QMat e = s.eval_cox(x.at(k, m), rep, wY);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!e[a][b].is_zero()) big[a * x.dim + k][b * x.dim + m] = e[a][b];
        }
    return big;
}

namespace detail {

/// Embed an n^2 x n^2 two-leg matrix into legs (p,q) of a three-leg space.
inline QMat embed_two_legs(const QMat& r, int n, int p, int q) {
    int N = n * n * n;
    QMat out = qmat(N);
    auto idx = [&](int i1, int i2, int i3) { return (i1 * n + i2) * n + i3; };
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = 0; j2 < n; ++j2)
                        for (int j3 = 0; j3 < n; ++j3) {
                            int is[3] = {i1, i2, i3}, js[3] = {j1, j2, j3};
                            bool fixed_ok = true;
                            for (int leg = 0; leg < 3; ++leg)
                                if (leg != p && leg != q && is[leg] != js[leg]) fixed_ok = false;
                            if (!fixed_ok) continue;
                            const QScalar& v = r[is[p] * n + is[q]][js[p] * n + js[q]];
                            if (!v.is_zero()) out[idx(i1, i2, i3)][idx(j1, j2, j3)] = v;
                        }
    return out;
}

} // namespace detail

/// Quantum Yang-Baxter equation R12 R13 R23 = R23 R13 R12 with all legs
/// evaluated in the representation.
inline bool yang_baxter_holds(const Session& s, const Representation& rep) {
    QMat r = evaluate_leg1(s, r_matrix_leg2(s, rep, RVariant::R), rep);
    int n = rep.dim;
    QMat r12 = detail::embed_two_legs(r, n, 0, 1);
    QMat r13 = detail::embed_two_legs(r, n, 0, 2);
    QMat r23 = detail::embed_two_legs(r, n, 1, 2);
    QMat lhs = qmat_mul(qmat_mul(r12, r13), r23);
    QMat rhs = qmat_mul(qmat_mul(r23, r13), r12);
    return qmat_equal(lhs, rhs);
}

/// (S (x) S) R = R, with leg 2 evaluated and leg 1 symbolic. The antipode is
/// applied factor by factor: it is an anti-homomorphism on the tensor
/// square, fixes the Cartan prefactor, and maps each q-exponential factor
/// exp[c x (x) y] to exp[c S(x) (x) S(y)].
inline bool antipode_r_identity_holds(const Session& s, const Representation& rep) {
    auto rd = detail::rep_data(s, rep);
    const auto& ctx = s.cox_ctx;
    QScalar qdiff = QScalar::u_pow(s.D) - QScalar::u_pow(-s.D);

    MixedElement ssr = MixedElement::identity(ctx, rep.dim);
    for (int p = static_cast<int>(s.roots.count()) - 1; p >= 0; --p) {
        int g = s.ordering.order[p];
        AlgebraElement leg1 = antipode(s.crv.e[g]);
        AlgebraElement leg2 = antipode(AlgebraElement::cartan(ctx, s.p_beta_vee(g)) * s.crv.f[g]);
        QMat m = s.eval_cox(leg2, rep, rd.wY);
        ssr = ssr * mixed_qexp(ctx, qdiff / s.a_beta[g], leg1, m, s.q_beta(g).inverse());
    }
    std::vector<RatVec> ys;
    for (int k = 0; k < rep.dim; ++k) ys.push_back(rd.mu_int[k] + rd.mu_Y_P[k]);
    ssr = ssr * MixedElement::cartan_diag(ctx, ys);

    MixedElement r = r_matrix_leg2(s, rep, RVariant::R);
    return (ssr - r).is_zero();
}

} // namespace qtoda
