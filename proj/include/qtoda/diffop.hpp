#pragma once

#include "qtoda/session.hpp"

namespace qtoda {

/// Torus bookkeeping for difference operators: characters live in
/// simple-root coordinates (lambda = sum lambda_i alpha_i, acting as
/// multiplication by e^{-h(lambda, y)}), shifts in Y-basis coordinates
/// (mu = sum mu_j Y_j, acting as f(y) -> f(y + mu)). The pairing
/// lambda(mu) = sum_j lambda_j d_j mu_j twists their composition.
struct TorusData {
    std::vector<long> d;
    RatVec rho; // alpha coordinates
    long D = 1;

    Rat pair(const RatVec& chr, const RatVec& shift) const {
        Rat s(0);
        for (size_t j = 0; j < d.size(); ++j) s += chr[j] * Rat(d[j]) * shift[j];
        return s;
    }
    Rat rho_pair(const RatVec& shift) const { return pair(rho, shift); }
};

using TorusPtr = std::shared_ptr<const TorusData>;

inline TorusPtr make_torus(const Session& s) {
    auto t = std::make_shared<TorusData>();
    t->d.assign(s.cartan.d.begin(), s.cartan.d.end());
    t->rho = s.roots.rho;
    t->D = s.D;
    return t;
}

struct DiffKey {
    RatVec chr;
    RatVec shift;
    bool operator<(const DiffKey& o) const {
        if (chr != o.chr) return chr < o.chr;
        return shift < o.shift;
    }
    bool operator==(const DiffKey& o) const { return chr == o.chr && shift == o.shift; }
};

/// Finite sum of coefficient * char_lambda * T_mu in the twisted group
/// algebra: T_mu char_lambda = q^{-lambda(mu)} char_lambda T_mu.
class DifferenceOperator {
    TorusPtr torus_;
    std::map<DiffKey, QScalar> terms_;

public:
    DifferenceOperator() = default;
    explicit DifferenceOperator(TorusPtr t) : torus_(std::move(t)) {}

    const TorusPtr& torus() const { return torus_; }
    const std::map<DiffKey, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add(const DiffKey& k, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static DifferenceOperator identity(TorusPtr t) {
        DifferenceOperator r(std::move(t));
        size_t l = r.torus_->d.size();
        r.add(DiffKey{RatVec(l, Rat(0)), RatVec(l, Rat(0))}, QScalar(Int(1)));
        return r;
    }

    DifferenceOperator operator+(const DifferenceOperator& o) const {
        DifferenceOperator r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    DifferenceOperator operator-() const {
        DifferenceOperator r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    DifferenceOperator operator-(const DifferenceOperator& o) const { return *this + (-o); }

    DifferenceOperator operator*(const DifferenceOperator& o) const {
        DifferenceOperator r(torus_);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                // (char_a T_a)(char_b T_b) = q^{-b.chr(a.shift)} char_{a+b} T_{a+b}
                QScalar tw = QScalar::q_pow(-torus_->pair(kb.chr, ka.shift), torus_->D);
                r.add(DiffKey{ka.chr + kb.chr, ka.shift + kb.shift}, ca * cb * tw);
            }
        return r;
    }

    DifferenceOperator operator*(const QScalar& s) const {
        DifferenceOperator r = *this;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    bool operator==(const DifferenceOperator& o) const { return terms_ == o.terms_; }

    std::string to_string() const;
    std::string to_latex() const;
};

inline DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b) {
    return a * b - b * a;
}

/// The action L on the Borel part: f_i goes to chibar(f_i) char_{alpha_i},
/// exp(h y.Y) goes to T_y, extended multiplicatively term by term.
/// Inputs must be polynomial in the f_i and Cartan exponentials (empty
/// e-words after straightening).
inline DifferenceOperator L_realize(const Session& s, const AlgebraElement& x, const Character& chibar) {
    if (chibar.positive) throw Error("L_realize needs the negative character");
    DifferenceOperator r(make_torus(s));
    int l = s.rank();
    for (const auto& [k, c] : x.terms()) {
        if (!k.ew.empty()) throw Error("L_realize: input has a positive letter (not in the Borel part)");
        RatVec chr(l, Rat(0));
        QScalar coeff = c;
        for (int i : k.fw) {
            chr[i] += 1;
            coeff *= chibar.values[i];
        }
        r.add(DiffKey{chr, k.y}, coeff);
    }
    return r;
}

/// Conjugation by multiplication with e^{h rho(y)}: char_{-rho} T  char_{rho},
/// which scales each (char, T_mu) term by q^{-rho(mu)}.
inline DifferenceOperator conjugate_by_phi(const DifferenceOperator& op) {
    DifferenceOperator r(op.torus());
    for (const auto& [k, c] : op.terms())
        r.add(k, c * QScalar::q_pow(-op.torus()->rho_pair(k.shift), op.torus()->D));
    return r;
}

// --- rendering ----------------------------------------------------------------

inline std::string DifferenceOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string(torus_->D);
        os << (cs.find_first_of("+- ") == std::string::npos ? cs : "(" + cs + ")");
        if (!is_zero_vec(k.chr)) {
            os << " exp[-h(";
            bool f2 = true;
            for (size_t i = 0; i < k.chr.size(); ++i) {
                if (k.chr[i] == 0) continue;
                if (!f2) os << " + ";
                f2 = false;
                if (k.chr[i] != 1) os << rat_to_string(k.chr[i]) << "*";
                os << "a" << i + 1;
            }
            os << ", y)]";
        }
        if (!is_zero_vec(k.shift)) {
            os << " T[";
            for (size_t i = 0; i < k.shift.size(); ++i) {
                if (i) os << ",";
                os << rat_to_string(k.shift[i]);
            }
            os << "]";
        }
    }
    return os.str();
}

inline std::string DifferenceOperator::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << c.to_latex(torus_->D) << "\\right)";
        if (!is_zero_vec(k.chr)) {
            os << " e^{-h(";
            bool f2 = true;
            for (size_t i = 0; i < k.chr.size(); ++i) {
                if (k.chr[i] == 0) continue;
                if (!f2) os << "+";
                f2 = false;
                if (k.chr[i] != 1) os << rat_to_string(k.chr[i]);
                os << "\\alpha_{" << i + 1 << "}";
            }
            os << ",y)}";
        }
        if (!is_zero_vec(k.shift)) {
            os << " T_{(";
            for (size_t i = 0; i < k.shift.size(); ++i) {
                if (i) os << ",";
                os << rat_to_string(k.shift[i]);
            }
            os << ")}";
        }
    }
    return os.str();
}

// --- classical limit ------------------------------------------------------------

/// Formal expansion of a difference operator in powers of h: shifts T_mu
/// expand as the translation flow e^{h mu . del}, torus characters stay as
/// finite multiplicative symbols E_lambda = e^{-(lambda, y)}, coefficients
/// expand through q = e^h. Derivative monomials are multi-indices in the
/// Y-coordinate directions.
struct ClassicalExpansion {
    int order = 0;
    // h-power -> (char vector, derivative multi-index) -> rational coefficient
    std::vector<std::map<std::pair<RatVec, std::vector<int>>, Rat>> coeff;

    bool order_is_zero(int k) const { return coeff[k].empty(); }
};

inline ClassicalExpansion classical_expand(const DifferenceOperator& op, int order) {
    ClassicalExpansion ex;
    ex.order = order;
    ex.coeff.resize(order + 1);
    long D = op.torus()->D;
    size_t l = op.torus()->d.size();
    for (const auto& [k, c] : op.terms()) {
        HSeries cs = h_expand(c, order, D);
        // (mu.del)^m expanded into derivative monomials
        std::vector<std::map<std::vector<int>, Rat>> dpow(order + 1);
        dpow[0][std::vector<int>(l, 0)] = Rat(1);
        for (int m = 1; m <= order; ++m)
            for (const auto& [mono, v] : dpow[m - 1])
                for (size_t j = 0; j < l; ++j) {
                    if (k.shift[j] == 0) continue;
                    auto nm = mono;
                    ++nm[j];
                    dpow[m][nm] += v * k.shift[j];
                }
        for (int a = 0; a <= order; ++a) {
            if (cs.c[a] == 0) continue;
            Rat fact(1);
            for (int m = 0; a + m <= order; ++m) {
                if (m > 0) fact /= m;
                for (const auto& [mono, v] : dpow[m]) {
                    Rat contrib = cs.c[a] * v * fact;
                    if (contrib == 0) continue;
                    auto key = std::make_pair(k.chr, mono);
                    auto& slot = ex.coeff[a + m][key];
                    slot += contrib;
                    if (slot == 0) ex.coeff[a + m].erase(key);
                }
            }
        }
    }
    return ex;
}

} // namespace qtoda
