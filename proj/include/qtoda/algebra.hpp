#pragma once

#include "qtoda/coxeter.hpp"
#include "qtoda/hseries.hpp"
#include "qtoda/rewrite.hpp"

#include <limits>
#include <memory>

namespace qtoda {

/// Relation data of one realization (standard or Coxeter) of the quantum
/// group, or of a tensor power of one. Letters index the simple generators;
/// in a tensor power the legs are concatenated, with one Cartan coordinate
/// per letter (the Y basis of the owning leg). The defining relations used
/// by the straightener are
///   e_i f_j = q^{cmix_ij} f_j e_i (+ delta term for i = j in the same leg),
///   exp(h y.Y) e_j = q^{y_j d_j} e_j exp(h y.Y)   (and inverse twist for f),
/// plus the (twisted) Serre relations fed to the word rewriting system.
/// The standard realization is the cmix = 0, P = 0 instance.
struct AlgebraContext {
    std::string name;
    int nletters = 0;
    long D = 1;
    int legs = 1;
    int leg_size = 0;
    std::vector<long> d;
    std::vector<int> letter_rank;
    RatMat cmix;
    RatMat kvec; // row i: Y-coords of d_i H_i   (K_i = exp(h kvec_i . Y))
    RatMat pvec; // row i: Y-coords of d_i P H_i
    RatMat gvec; // kvec + pvec: coproduct group-like for e_i
    std::vector<QScalar> mixed_rhs_inv; // 1/(q_i - q_i^{-1})
    std::vector<std::vector<long>> serre_a; // a_ij for same-leg pairs; INT_MIN marks cross-leg
    RewriteSystem word_rw; // shared by e-words and f-words (identical relations)
    int degree_budget = 8;
    long step_budget = 200000;

    int leg_of(int letter) const { return letter / leg_size; }
    int local(int letter) const { return letter % leg_size; }

    QScalar q_pow(const Rat& e) const { return QScalar::q_pow(e, D); }
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

namespace detail {

constexpr long kCrossLeg = std::numeric_limits<long>::min();

inline void seed_relations(AlgebraContext& ctx) {
    ctx.word_rw = RewriteSystem(ctx.letter_rank, ctx.degree_budget, ctx.step_budget);
    for (int i = 0; i < ctx.nletters; ++i)
        for (int j = 0; j < ctx.nletters; ++j) {
            if (i == j) continue;
            if (ctx.serre_a[i][j] == kCrossLeg) {
                if (i < j) {
                    WordCombo rel;
                    rel[{i, j}] = QScalar(Int(1));
                    rel[{j, i}] = QScalar(Int(-1));
                    ctx.word_rw.add_relation(rel);
                }
                continue;
            }
            long m = 1 - ctx.serre_a[i][j];
            WordCombo rel;
            for (long r = 0; r <= m; ++r) {
                Word w;
                for (long k = 0; k < m - r; ++k) w.push_back(i);
                w.push_back(j);
                for (long k = 0; k < r; ++k) w.push_back(i);
                QScalar coeff = qbinom(m, r, ctx.d[i] * ctx.D) * ctx.q_pow(r * ctx.cmix[i][j]);
                if (r % 2) coeff = -coeff;
                rel[w] = coeff;
            }
            ctx.word_rw.add_relation(rel);
        }
    ctx.word_rw.complete();
}

} // namespace detail

/// Standard realization context. letter_order gives the rank of each letter
/// in the straightening order (defaults to the identity).
inline ContextPtr make_standard_context(const CartanDatum& cd, const CoxeterDatum& cx,
                                        int degree_budget = 8, long step_budget = 200000) {
    auto ctx = std::make_shared<AlgebraContext>();
    int l = cd.rank;
    ctx->name = "standard " + cd.name();
    ctx->nletters = l;
    ctx->leg_size = l;
    ctx->D = cx.D;
    ctx->d.assign(cd.d.begin(), cd.d.end());
    ctx->degree_budget = degree_budget;
    ctx->step_budget = step_budget;
    ctx->letter_rank.assign(l, 0);
    for (int i = 0; i < l; ++i) ctx->letter_rank[i] = cx.pi_inv[i];
    ctx->cmix = rat_mat(l, l);
    ctx->kvec = rat_mat(l, l);
    ctx->pvec = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ctx->kvec[i][j] = Rat(cd.d[i]) * cx.H_in_Y[i][j];
    ctx->gvec = ctx->kvec;
    ctx->serre_a.assign(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ctx->serre_a[i][j] = cd.a[i][j];
    for (int i = 0; i < l; ++i) {
        QScalar qi = QScalar::u_pow(cd.d[i] * ctx->D);
        ctx->mixed_rhs_inv.push_back((qi - qi.inverse()).inverse());
    }
    detail::seed_relations(*ctx);
    return ctx;
}

/// Coxeter realization context for s_pi with the chosen solution n.
inline ContextPtr make_coxeter_context(const CartanDatum& cd, const CoxeterDatum& cx,
                                       int degree_budget = 8, long step_budget = 200000) {
    auto ctx = std::make_shared<AlgebraContext>();
    int l = cd.rank;
    ctx->name = "coxeter " + cd.name();
    ctx->nletters = l;
    ctx->leg_size = l;
    ctx->D = cx.D;
    ctx->d.assign(cd.d.begin(), cd.d.end());
    ctx->degree_budget = degree_budget;
    ctx->step_budget = step_budget;
    ctx->letter_rank.assign(l, 0);
    for (int i = 0; i < l; ++i) ctx->letter_rank[i] = cx.pi_inv[i];
    ctx->cmix = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ctx->cmix[i][j] = Rat(cx.c[i][j]);
    ctx->kvec = rat_mat(l, l);
    ctx->pvec = rat_mat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            ctx->kvec[i][j] = Rat(cd.d[i]) * cx.H_in_Y[i][j];
            ctx->pvec[i][j] = Rat(cd.d[i]) * cx.P[i][j];
        }
    ctx->gvec = mat_add(ctx->kvec, ctx->pvec);
    ctx->serre_a.assign(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ctx->serre_a[i][j] = cd.a[i][j];
    for (int i = 0; i < l; ++i) {
        QScalar qi = QScalar::u_pow(cd.d[i] * ctx->D);
        ctx->mixed_rhs_inv.push_back((qi - qi.inverse()).inverse());
    }
    detail::seed_relations(*ctx);
    return ctx;
}

/// Tensor power of a base context: legs copies with commuting cross-leg
/// letters and block Cartan coordinates. Leg k letters rank above leg k-1.
inline ContextPtr make_tensor_context(const ContextPtr& base, int legs) {
    auto ctx = std::make_shared<AlgebraContext>();
    int l = base->nletters;
    int L = l * legs;
    ctx->name = base->name + " ^" + std::to_string(legs);
    ctx->nletters = L;
    ctx->leg_size = l;
    ctx->legs = legs;
    ctx->D = base->D;
    ctx->degree_budget = base->degree_budget;
    ctx->step_budget = base->step_budget;
    ctx->cmix = rat_mat(L, L);
    ctx->kvec = rat_mat(L, L);
    ctx->pvec = rat_mat(L, L);
    ctx->serre_a.assign(L, std::vector<long>(L, detail::kCrossLeg));
    for (int leg = 0; leg < legs; ++leg)
        for (int i = 0; i < l; ++i) {
            int I = leg * l + i;
            ctx->d.push_back(base->d[i]);
            ctx->letter_rank.push_back(leg * l + base->letter_rank[i]);
            ctx->mixed_rhs_inv.push_back(base->mixed_rhs_inv[i]);
            for (int j = 0; j < l; ++j) {
                int J = leg * l + j;
                ctx->cmix[I][J] = base->cmix[i][j];
                ctx->kvec[I][J] = base->kvec[i][j];
                ctx->pvec[I][J] = base->pvec[i][j];
                ctx->serre_a[I][J] = base->serre_a[i][j];
            }
        }
    ctx->gvec = mat_add(ctx->kvec, ctx->pvec);
    detail::seed_relations(*ctx);
    return ctx;
}

// --- elements ---------------------------------------------------------------

/// One straightening atom: an f letter, an e letter, or a group-like
/// Cartan exponential exp(h y.Y).
struct Atom {
    enum Kind { F, E, C } kind;
    int idx = 0;
    RatVec y;

    static Atom f(int i) { return {F, i, {}}; }
    static Atom e(int i) { return {E, i, {}}; }
    static Atom cart(RatVec v) { return {C, 0, std::move(v)}; }
};

struct TermKey {
    Word fw;
    RatVec y;
    Word ew;

    bool operator<(const TermKey& o) const {
        if (fw != o.fw) return fw < o.fw;
        if (y != o.y) return y < o.y;
        return ew < o.ew;
    }
    bool operator==(const TermKey& o) const { return fw == o.fw && y == o.y && ew == o.ew; }
};

using TermMap = std::map<TermKey, QScalar>;

/// Element of the realization in triangular form: a finite sum of
/// coefficient * f-word * exp(h y.Y) * e-word. Products are straightened
/// immediately; word canonization (Serre closure) happens in normalize().
class AlgebraElement {
    ContextPtr ctx_;
    TermMap terms_;

    void insert(TermKey key, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end())
            terms_.emplace(std::move(key), c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

public:
    AlgebraElement() = default;
    explicit AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const ContextPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    static AlgebraElement zero(ContextPtr ctx) { return AlgebraElement(std::move(ctx)); }
    static AlgebraElement unit(ContextPtr ctx) { return scalar(std::move(ctx), QScalar(Int(1))); }
    static AlgebraElement scalar(ContextPtr ctx, const QScalar& c) {
        AlgebraElement x(std::move(ctx));
        x.insert(TermKey{{}, RatVec(x.ctx_->nletters, Rat(0)), {}}, c);
        return x;
    }
    static AlgebraElement letter_e(ContextPtr ctx, int i) {
        AlgebraElement x(std::move(ctx));
        x.insert(TermKey{{}, RatVec(x.ctx_->nletters, Rat(0)), {i}}, QScalar(Int(1)));
        return x;
    }
    static AlgebraElement letter_f(ContextPtr ctx, int i) {
        AlgebraElement x(std::move(ctx));
        x.insert(TermKey{{i}, RatVec(x.ctx_->nletters, Rat(0)), {}}, QScalar(Int(1)));
        return x;
    }
    static AlgebraElement cartan(ContextPtr ctx, RatVec y) {
        AlgebraElement x(std::move(ctx));
        if (y.size() != static_cast<size_t>(x.ctx_->nletters)) throw Error("cartan vector size mismatch");
        x.insert(TermKey{{}, std::move(y), {}}, QScalar(Int(1)));
        return x;
    }

    void add_term(const TermKey& key, const QScalar& c) { insert(key, c); }

    AlgebraElement operator+(const AlgebraElement& o) const {
        check_ctx(o);
        AlgebraElement r = *this;
        for (const auto& [k, c] : o.terms_) r.insert(k, c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }
    AlgebraElement operator*(const QScalar& s) const {
        if (s.is_zero()) return AlgebraElement(ctx_);
        AlgebraElement r = *this;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

    void check_ctx(const AlgebraElement& o) const {
        if (ctx_ != o.ctx_) throw Error("realization mismatch between operands");
    }

    /// Straighten an atom sequence into triangular terms and accumulate.
    void accumulate_atoms(std::vector<Atom> atoms, QScalar coeff) {
        const AlgebraContext& ctx = *ctx_;
        std::vector<std::pair<std::vector<Atom>, QScalar>> stack;
        stack.emplace_back(std::move(atoms), std::move(coeff));
        while (!stack.empty()) {
            auto [as, c] = std::move(stack.back());
            stack.pop_back();
            bool rewrote = false;
            for (size_t p = 0; p + 1 < as.size() && !rewrote; ++p) {
                Atom& x = as[p];
                Atom& y = as[p + 1];
                if (x.kind == Atom::C && y.kind == Atom::C) {
                    x.y += y.y;
                    as.erase(as.begin() + p + 1);
                    stack.emplace_back(std::move(as), std::move(c));
                    rewrote = true;
                } else if (x.kind == Atom::C && y.kind == Atom::F) {
                    QScalar f = ctx.q_pow(-x.y[y.idx] * ctx.d[y.idx]);
                    std::swap(x, y);
                    stack.emplace_back(std::move(as), c * f);
                    rewrote = true;
                } else if (x.kind == Atom::E && y.kind == Atom::C) {
                    QScalar f = ctx.q_pow(-y.y[x.idx] * ctx.d[x.idx]);
                    std::swap(x, y);
                    stack.emplace_back(std::move(as), c * f);
                    rewrote = true;
                } else if (x.kind == Atom::E && y.kind == Atom::F) {
                    int i = x.idx, j = y.idx;
                    if (i == j) {
                        std::vector<Atom> swapped = as;
                        std::swap(swapped[p], swapped[p + 1]);
                        QScalar cf = c * ctx.q_pow(ctx.cmix[i][j]);
                        std::vector<Atom> plus(as.begin(), as.begin() + p);
                        plus.push_back(Atom::cart(RatVec(ctx.kvec[i])));
                        plus.insert(plus.end(), as.begin() + p + 2, as.end());
                        std::vector<Atom> minus(as.begin(), as.begin() + p);
                        minus.push_back(Atom::cart(-ctx.kvec[i]));
                        minus.insert(minus.end(), as.begin() + p + 2, as.end());
                        stack.emplace_back(std::move(swapped), std::move(cf));
                        stack.emplace_back(std::move(plus), c * ctx.mixed_rhs_inv[i]);
                        stack.emplace_back(std::move(minus), -(c * ctx.mixed_rhs_inv[i]));
                    } else {
                        QScalar f = ctx.q_pow(ctx.cmix[i][j]);
                        std::swap(x, y);
                        stack.emplace_back(std::move(as), c * f);
                    }
                    rewrote = true;
                }
            }
            if (rewrote) continue;
            TermKey key;
            key.y.assign(ctx.nletters, Rat(0));
            for (const auto& a : as) {
                if (a.kind == Atom::F)
                    key.fw.push_back(a.idx);
                else if (a.kind == Atom::E)
                    key.ew.push_back(a.idx);
                else
                    key.y += a.y;
            }
            insert(std::move(key), c);
        }
    }

    static std::vector<Atom> term_atoms(const TermKey& k) {
        std::vector<Atom> as;
        for (int i : k.fw) as.push_back(Atom::f(i));
        if (!is_zero_vec(k.y)) as.push_back(Atom::cart(k.y));
        for (int i : k.ew) as.push_back(Atom::e(i));
        return as;
    }

    AlgebraElement operator*(const AlgebraElement& o) const {
        check_ctx(o);
        AlgebraElement r(ctx_);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                std::vector<Atom> atoms = term_atoms(ka);
                std::vector<Atom> tail = term_atoms(kb);
                atoms.insert(atoms.end(), tail.begin(), tail.end());
                r.accumulate_atoms(std::move(atoms), ca * cb);
            }
        return r;
    }

    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    /// Canonical form: straightened terms with e-words and f-words reduced
    /// by the completed Serre rewriting system.
    AlgebraElement normalize() const {
        AlgebraElement r(ctx_);
        const auto& rw = ctx_->word_rw;
        for (const auto& [k, c] : terms_) {
            WordCombo fr = rw.reduce(k.fw);
            WordCombo er = rw.reduce(k.ew);
            for (const auto& [fwm, fc] : fr)
                for (const auto& [ewm, ec] : er) r.insert(TermKey{fwm, k.y, ewm}, c * fc * ec);
        }
        return r;
    }

    bool is_zero() const { return normalize().empty(); }

    bool equals(const AlgebraElement& o) const { return (*this - o).is_zero(); }

    /// Net degree in letter i over a term: (e count) - (f count).
    static long net_degree(const TermKey& k, int i) {
        long deg = 0;
        for (int x : k.ew)
            if (x == i) ++deg;
        for (int x : k.fw)
            if (x == i) --deg;
        return deg;
    }

    AlgebraElement commutator(const AlgebraElement& o) const { return *this * o - o * *this; }

    std::string to_string() const;
    std::string to_latex() const;
};

inline AlgebraElement operator*(const QScalar& s, const AlgebraElement& x) { return x * s; }

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a.commutator(b);
}

// --- rendering ---------------------------------------------------------------

namespace detail {

inline std::string cartan_label(const RatVec& y, bool latex) {
    std::ostringstream os;
    os << (latex ? "e^{h(" : "exp[h(");
    bool first = true;
    for (size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        std::string mag = rat_to_string(y[j] < 0 ? Rat(-y[j]) : y[j]);
        if (first) {
            if (y[j] < 0) os << "-";
            first = false;
        } else {
            os << (y[j] < 0 ? " - " : " + ");
        }
        if (mag != "1") os << mag << (latex ? " " : "*");
        os << (latex ? "Y_{" : "Y") << (j + 1) << (latex ? "}" : "");
    }
    os << (latex ? ")}" : ")]");
    return os.str();
}

} // namespace detail

inline std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string(ctx_->D);
        os << (cs.find_first_of("+- ") == std::string::npos ? cs : "(" + cs + ")");
        for (int i : k.fw) os << " f" << (ctx_->legs > 1 ? std::to_string(ctx_->leg_of(i) + 1) + ":" : "") << ctx_->local(i) + 1;
        if (!is_zero_vec(k.y)) os << " " << detail::cartan_label(k.y, false);
        for (int i : k.ew) os << " e" << (ctx_->legs > 1 ? std::to_string(ctx_->leg_of(i) + 1) + ":" : "") << ctx_->local(i) + 1;
    }
    return os.str();
}

inline std::string AlgebraElement::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << c.to_latex(ctx_->D) << "\\right)";
        for (int i : k.fw) os << " f_{" << ctx_->local(i) + 1 << "}";
        if (!is_zero_vec(k.y)) os << " " << detail::cartan_label(k.y, true);
        for (int i : k.ew) os << " e_{" << ctx_->local(i) + 1 << "}";
    }
    return os.str();
}

} // namespace qtoda
