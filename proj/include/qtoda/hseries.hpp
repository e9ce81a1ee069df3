#pragma once

#include "qtoda/qscalar.hpp"

namespace qtoda {

/// Truncated Taylor series in h with exact rational coefficients,
/// used for classical-limit checks via q = e^h.
struct HSeries {
    int order = 0;
    RatVec c; // c[k] = coefficient of h^k, size order+1

    HSeries() : c(1, Rat(0)) {}
    explicit HSeries(int ord) : order(ord), c(ord + 1, Rat(0)) {}
    HSeries(int ord, const Rat& constant) : order(ord), c(ord + 1, Rat(0)) { c[0] = constant; }

    bool operator==(const HSeries& o) const { return order == o.order && c == o.c; }

    HSeries operator+(const HSeries& o) const {
        HSeries r(std::min(order, o.order));
        for (int k = 0; k <= r.order; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    HSeries operator-(const HSeries& o) const {
        HSeries r(std::min(order, o.order));
        for (int k = 0; k <= r.order; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    HSeries operator*(const HSeries& o) const {
        HSeries r(std::min(order, o.order));
        for (int i = 0; i <= r.order; ++i)
            for (int j = 0; i + j <= r.order; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    HSeries operator*(const Rat& x) const {
        HSeries r = *this;
        for (auto& v : r.c) v *= x;
        return r;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    /// Series division; requires o.c[0] != 0.
    HSeries operator/(const HSeries& o) const {
        if (o.c[0] == 0) throw Error("series division by series with zero constant term");
        HSeries r(std::min(order, o.order));
        for (int k = 0; k <= r.order; ++k) {
            Rat acc = c[k];
            for (int j = 1; j <= k; ++j) acc -= o.c[j] * r.c[k - j];
            r.c[k] = acc / o.c[0];
        }
        return r;
    }

    /// exp(a*h) truncated.
    static HSeries exp_linear(const Rat& a, int order) {
        HSeries r(order);
        Rat term(1);
        for (int k = 0; k <= order; ++k) {
            r.c[k] = term;
            term = term * a / (k + 1);
        }
        return r;
    }
};

namespace detail {

/// Expand an integer polynomial in u at u = e^(h/D) to the given order.
inline HSeries zpoly_h_series(const ZPoly& p, int order, long D) {
    HSeries r(order);
    for (size_t k = 0; k < p.coeff.size(); ++k) {
        if (p.coeff[k] == 0) continue;
        // e^(kh/D): coefficient of h^m is (k/D)^m / m!
        Rat base(static_cast<long>(k), D);
        Rat term(p.coeff[k]);
        for (int m = 0; m <= order; ++m) {
            r.c[m] += term;
            term = term * base / (m + 1);
        }
    }
    return r;
}

} // namespace detail

/// Substitute q = e^h (u = e^(h/D)) and expand through h^order.
/// A pole at q = 1 must cancel between numerator and denominator;
/// an uncancelled pole is an error.
inline HSeries h_expand(const QScalar& x, int order, long D) {
    if (x.is_zero()) return HSeries(order);
    // The vanishing order of den at u=1 is at most deg(den); widen the
    // working order so the cancelled pole can be shifted away exactly.
    int guard = static_cast<int>(x.den().degree());
    int work = order + guard;
    HSeries n = detail::zpoly_h_series(x.num(), work, D);
    HSeries d = detail::zpoly_h_series(x.den(), work, D);
    int vn = 0, vd = 0;
    while (vd <= work && d.c[vd] == 0) ++vd;
    if (vd > work) throw Error("h_expand: denominator vanishes to working order");
    while (vn < vd && vn <= work && n.c[vn] == 0) ++vn;
    if (vn < vd) throw Error("h_expand: uncancelled pole at q = 1");
    HSeries ns(order), ds(order);
    for (int k = 0; k <= order; ++k) {
        ns.c[k] = (vd + k <= work) ? n.c[vd + k] : Rat(0);
        ds.c[k] = (vd + k <= work) ? d.c[vd + k] : Rat(0);
    }
    return ns / ds;
}

/// Value at q = 1 (order-0 expansion).
inline Rat eval_q1(const QScalar& x, long D) { return h_expand(x, 0, D).c[0]; }

} // namespace qtoda
