#pragma once

#include "qtoda/hopf.hpp"
#include "qtoda/representation.hpp"

namespace qtoda {

/// Everything a computation needs for one (type, rank, pi, n, ordering,
/// characters) configuration. Immutable after construction.
struct Session {
    CartanDatum cartan;
    RootSystem roots;
    CoxeterDatum cox;
    NormalOrdering ordering;
    ContextPtr std_ctx;
    ContextPtr cox_ctx;
    RootVectors rv;          // standard-realization root vectors, by root index
    CoxeterRootVectors crv;  // Coxeter-realization root vectors
    std::vector<QScalar> a_beta;
    Character chi, chibar;
    long D = 1;
    int degree_budget = 8;
    long step_budget = 200000;

    int rank() const { return cartan.rank; }

    /// Y-coordinates of (1+s)/(1-s) beta-check for a root index.
    RatVec p_beta_vee(int g) const {
        int l = rank();
        RatVec v(l, Rat(0));
        const auto& m = roots.positive_roots[g];
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) v[j] += Rat(m[i] * cartan.d[i]) * cox.P[i][j];
        return v;
    }

    /// q^((beta,beta)) for a root index.
    QScalar q_beta(int g) const {
        Rat bb = roots.pairing(roots.positive_roots[g], roots.positive_roots[g]);
        return QScalar::q_pow(bb, D);
    }

    /// rho(x) for x in Y-coordinates: rho(Y_j) = d_j rho_j.
    Rat rho_pairing(const RatVec& y) const {
        Rat s(0);
        for (int j = 0; j < rank(); ++j) s += y[j] * Rat(cartan.d[j]) * roots.rho[j];
        return s;
    }

    /// Evaluate a Coxeter-realization element in a representation (through psi).
    QMat eval_cox(const AlgebraElement& x, const Representation& rep, const RatMat& wY) const {
        return evaluate_std(psi_forward(x, std_ctx, cox), rep, wY, D);
    }

    Representation rep(const std::string& which) const { return builtin_rep(cartan, which, D); }
};

struct SessionOptions {
    std::vector<int> pi;          // 0-based; empty = identity
    std::vector<QScalar> chi;     // empty = all ones
    std::vector<QScalar> chibar;
    std::vector<int> ordering;    // explicit root-index order; empty = lex-least search
    int degree_budget = 8;
    long step_budget = 200000;
    int ordering_rank_bound = 4;
};

inline Session make_session(Series series, int rank, const SessionOptions& opt = {}) {
    Session s;
    s.cartan = build_cartan(series, rank);
    s.roots = build_root_system(s.cartan);
    std::vector<int> pi = opt.pi;
    if (pi.empty()) {
        pi.resize(rank);
        for (int i = 0; i < rank; ++i) pi[i] = i;
    }
    s.cox = make_coxeter_datum(s.cartan, pi);
    s.D = s.cox.D;
    s.degree_budget = opt.degree_budget;
    s.step_budget = opt.step_budget;

    if (!opt.ordering.empty()) {
        if (!is_normal_ordering(s.roots, opt.ordering))
            throw Error("supplied ordering is not a normal ordering");
        if (!is_pi_compatible(s.roots, opt.ordering, pi))
            throw Error("supplied ordering is not pi-compatible");
        s.ordering.order = opt.ordering;
        s.ordering.position.assign(s.roots.count(), -1);
        for (size_t p = 0; p < opt.ordering.size(); ++p) s.ordering.position[opt.ordering[p]] = static_cast<int>(p);
    } else {
        s.ordering = find_normal_ordering(s.roots, pi, opt.ordering_rank_bound);
    }

    s.std_ctx = make_standard_context(s.cartan, s.cox, opt.degree_budget, opt.step_budget);
    s.cox_ctx = make_coxeter_context(s.cartan, s.cox, opt.degree_budget, opt.step_budget);
    s.rv = build_root_vectors(s.roots, s.ordering, s.std_ctx);
    s.crv = build_coxeter_root_vectors(s.roots, s.rv, s.cox_ctx, s.cox);
    s.a_beta.resize(s.roots.count());
    for (size_t g = 0; g < s.roots.count(); ++g)
        s.a_beta[g] = compute_a(s.roots, s.rv, static_cast<int>(g), s.std_ctx);

    s.chi = opt.chi.empty() ? unit_character(rank, true) : Character{true, opt.chi};
    s.chibar = opt.chibar.empty() ? unit_character(rank, false) : Character{false, opt.chibar};
    s.chi.validate(s.D);
    s.chibar.validate(s.D);
    return s;
}

} // namespace qtoda
