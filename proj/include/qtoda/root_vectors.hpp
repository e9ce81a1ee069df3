#pragma once

#include "qtoda/algebra.hpp"
#include "qtoda/ordering.hpp"

namespace qtoda {

/// Root vectors built by the inductive minimal-segment algorithm:
///   X_gamma^+ = X_alpha^+ X_beta^+ - q^((alpha,beta)) X_beta^+ X_alpha^+
///   X_gamma^- = X_beta^- X_alpha^- - q^(-(alpha,beta)) X_alpha^- X_beta^-
/// for gamma = alpha + beta with alpha before beta and [alpha, beta] the
/// minimal segment around gamma in the normal ordering (smallest width,
/// then smallest left endpoint).
struct RootVectors {
    std::vector<AlgebraElement> plus;  // indexed by root index
    std::vector<AlgebraElement> minus;
};

namespace detail {

inline std::pair<int, int> minimal_segment(const RootSystem& rs, const NormalOrdering& ord, int groot) {
    int pg = ord.position[groot];
    int n = static_cast<int>(rs.count());
    for (int width = 2; width < n; ++width)
        for (int pa = std::max(0, pg - width + 1); pa + width < n; ++pa) {
            int pb = pa + width;
            if (pa >= pg || pb <= pg) continue;
            int a = ord.order[pa], b = ord.order[pb];
            std::vector<long> sum = rs.positive_roots[a];
            for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots[b][i];
            if (sum == rs.positive_roots[groot]) return {a, b};
        }
    throw Error("no additive decomposition inside the ordering for root " + std::to_string(groot) +
                " (normal ordering invariant violated)");
}

} // namespace detail

inline RootVectors build_root_vectors(const RootSystem& rs, const NormalOrdering& ord, const ContextPtr& std_ctx) {
    int n = static_cast<int>(rs.count());
    RootVectors rv;
    rv.plus.assign(n, AlgebraElement(std_ctx));
    rv.minus.assign(n, AlgebraElement(std_ctx));
    std::vector<bool> built(n, false);

    std::function<void(int)> build = [&](int g) {
        if (built[g]) return;
        built[g] = true;
        if (rs.is_simple(g)) {
            for (int i = 0; i < rs.rank(); ++i)
                if (rs.positive_roots[g][i] == 1) {
                    rv.plus[g] = AlgebraElement::letter_e(std_ctx, i);
                    rv.minus[g] = AlgebraElement::letter_f(std_ctx, i);
                }
            return;
        }
        auto [a, b] = detail::minimal_segment(rs, ord, g);
        build(a);
        build(b);
        Rat ab = rs.pairing(rs.positive_roots[a], rs.positive_roots[b]);
        QScalar qab = QScalar::q_pow(ab, std_ctx->D);
        rv.plus[g] = rv.plus[a] * rv.plus[b] - qab * (rv.plus[b] * rv.plus[a]);
        rv.minus[g] = rv.minus[b] * rv.minus[a] - qab.inverse() * (rv.minus[a] * rv.minus[b]);
    };
    for (int g = 0; g < n; ++g) build(g);

    // homogeneity check: X_beta has multidegree beta
    for (int g = 0; g < n; ++g) {
        for (const auto& [k, c] : rv.plus[g].terms()) {
            if (!k.fw.empty() || !is_zero_vec(k.y)) throw Error("root vector has non-letter content");
            std::vector<long> deg(rs.rank(), 0);
            for (int i : k.ew) ++deg[i];
            if (deg != rs.positive_roots[g]) throw Error("root vector multidegree mismatch");
        }
    }
    return rv;
}

/// Y-basis coordinates of beta-check = sum_i m_i d_i H_i; these are the
/// integers sum_i m_i a_ji.
inline RatVec coroot_in_Y(const RootSystem& rs, const std::vector<long>& m) {
    int l = rs.rank();
    RatVec y(l, Rat(0));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) y[j] += Rat(m[i] * rs.cartan.a[j][i]);
    return y;
}

/// Extract a(beta) from [X_beta^+, X_beta^-] = a(beta) (K_beta - K_beta^-1)/(q - q^-1),
/// where K_beta = exp(h beta-check). Any residual beyond the displayed shape aborts.
inline QScalar compute_a(const RootSystem& rs, const RootVectors& rv, int groot, const ContextPtr& std_ctx) {
    AlgebraElement comm = commutator(rv.plus[groot], rv.minus[groot]).normalize();
    RatVec v = coroot_in_Y(rs, rs.positive_roots[groot]);
    QScalar qdiff = QScalar::u_pow(std_ctx->D) - QScalar::u_pow(-std_ctx->D);
    TermKey kp{{}, v, {}}, km{{}, -v, {}};
    QScalar cp, cm;
    for (const auto& [k, c] : comm.terms()) {
        if (k == kp)
            cp = c;
        else if (k == km)
            cm = c;
        else
            throw Error("compute_a: residual term outside the Cartan combination for root " +
                        std::to_string(groot));
    }
    QScalar a = cp * qdiff;
    if (!(cm * qdiff + a).is_zero())
        throw Error("compute_a: asymmetric Cartan coefficients for root " + std::to_string(groot));
    return a;
}

} // namespace qtoda
