#pragma once

#include "qtoda/root_vectors.hpp"

namespace qtoda {

/// Rewrite an element through a letter substitution into a target context.
/// Cartan exponentials map through unchanged (up to coordinate reuse); each
/// letter maps to the given atom sequence.
template <class ImageFn>
AlgebraElement map_letters(const AlgebraElement& x, const ContextPtr& target, ImageFn image) {
    AlgebraElement r(target);
    for (const auto& [k, c] : x.terms()) {
        std::vector<Atom> atoms;
        for (int i : k.fw) {
            auto img = image(false, i);
            atoms.insert(atoms.end(), img.begin(), img.end());
        }
        if (!is_zero_vec(k.y)) atoms.push_back(Atom::cart(k.y));
        for (int i : k.ew) {
            auto img = image(true, i);
            atoms.insert(atoms.end(), img.begin(), img.end());
        }
        r.accumulate_atoms(std::move(atoms), c);
    }
    return r;
}

/// The isomorphism psi_{n}: Coxeter realization -> standard realization,
///   e_i -> X_i^+ prod_p L_p^{n_ip},  f_i -> prod_p L_p^{-n_ip} X_i^-,
/// Cartan fixed.
inline AlgebraElement psi_forward(const AlgebraElement& x, const ContextPtr& std_ctx, const CoxeterDatum& cx) {
    return map_letters(x, std_ctx, [&](bool is_e, int i) {
        std::vector<Atom> img;
        if (is_e) {
            img.push_back(Atom::e(i));
            img.push_back(Atom::cart(RatVec(cx.n[i])));
        } else {
            img.push_back(Atom::cart(-cx.n[i]));
            img.push_back(Atom::f(i));
        }
        return img;
    });
}

/// psi^{-1}: standard -> Coxeter; X_i^+ -> e_i L^{-n_i}, X_i^- -> L^{n_i} f_i.
inline AlgebraElement psi_inverse(const AlgebraElement& x, const ContextPtr& cox_ctx, const CoxeterDatum& cx) {
    return map_letters(x, cox_ctx, [&](bool is_e, int i) {
        std::vector<Atom> img;
        if (is_e) {
            img.push_back(Atom::e(i));
            img.push_back(Atom::cart(-cx.n[i]));
        } else {
            img.push_back(Atom::cart(RatVec(cx.n[i])));
            img.push_back(Atom::f(i));
        }
        return img;
    });
}

/// Coxeter-realization root vectors
///   e_beta = psi^{-1}(X_beta^+ e^{h K beta-check}),
///   f_beta = psi^{-1}(e^{-h K beta-check} X_beta^-).
/// Both must land in the pure e-word (resp. f-word) subalgebra; residual
/// Cartan content signals an inconsistent n or K and aborts.
struct CoxeterRootVectors {
    std::vector<AlgebraElement> e; // by root index
    std::vector<AlgebraElement> f;
};

inline CoxeterRootVectors build_coxeter_root_vectors(const RootSystem& rs, const RootVectors& rv,
                                                     const ContextPtr& cox_ctx, const CoxeterDatum& cx) {
    int n = static_cast<int>(rs.count());
    int l = rs.rank();
    CoxeterRootVectors out;
    out.e.reserve(n);
    out.f.reserve(n);
    for (int g = 0; g < n; ++g) {
        const auto& m = rs.positive_roots[g];
        RatVec kb(l, Rat(0)); // K beta-check = sum_{i,j} m_i n_ij Y_j
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < l; ++i) kb[j] += Rat(m[i]) * cx.n[i][j];

        AlgebraElement ep = rv.plus[g] * AlgebraElement::cartan(rv.plus[g].ctx(), kb);
        AlgebraElement fp = AlgebraElement::cartan(rv.minus[g].ctx(), -kb) * rv.minus[g];
        AlgebraElement e = psi_inverse(ep, cox_ctx, cx);
        AlgebraElement f = psi_inverse(fp, cox_ctx, cx);
        for (const auto& [k, c] : e.terms())
            if (!k.fw.empty() || !is_zero_vec(k.y))
                throw Error("coxeter root vector e_beta has residual Cartan/f content at root " + std::to_string(g));
        for (const auto& [k, c] : f.terms())
            if (!k.ew.empty() || !is_zero_vec(k.y))
                throw Error("coxeter root vector f_beta has residual Cartan/e content at root " + std::to_string(g));
        out.e.push_back(std::move(e));
        out.f.push_back(std::move(f));
    }
    return out;
}

} // namespace qtoda
