#pragma once

#include "qtoda/rational.hpp"

#include <algorithm>

namespace qtoda {

/// Dense polynomial over the integers. coeff[i] is the coefficient of u^i;
/// the vector carries no trailing zeros, the zero polynomial is empty.
struct ZPoly {
    std::vector<Int> coeff;

    ZPoly() = default;
    explicit ZPoly(Int c) {
        if (c != 0) coeff.push_back(std::move(c));
    }

    static ZPoly monomial(Int c, long deg) {
        ZPoly p;
        if (c == 0) return p;
        p.coeff.assign(deg + 1, Int(0));
        p.coeff[deg] = std::move(c);
        return p;
    }

    bool is_zero() const { return coeff.empty(); }
    long degree() const { return static_cast<long>(coeff.size()) - 1; }

    const Int& lead() const { return coeff.back(); }

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }

    bool operator==(const ZPoly& o) const { return coeff == o.coeff; }

    bool is_monomial() const {
        for (size_t i = 0; i + 1 < coeff.size(); ++i)
            if (coeff[i] != 0) return false;
        return !coeff.empty();
    }

    /// Lowest nonzero exponent (valuation at u = 0). Zero poly: -1.
    long valuation() const {
        for (size_t i = 0; i < coeff.size(); ++i)
            if (coeff[i] != 0) return static_cast<long>(i);
        return -1;
    }
};

inline ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Int(0));
    for (size_t i = 0; i < a.coeff.size(); ++i) r.coeff[i] = a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
    r.trim();
    return r;
}

inline ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& c : r.coeff) c = -c;
    return r;
}

inline ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

inline ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (size_t j = 0; j < b.coeff.size(); ++j) {
            if (b.coeff[j] == 0) continue;
            r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        }
    }
    r.trim();
    return r;
}

inline ZPoly operator*(const ZPoly& a, const Int& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r.coeff) x *= c;
    return r;
}

/// Shift by u^k (k >= 0).
inline ZPoly shift_up(const ZPoly& a, long k) {
    if (a.is_zero() || k == 0) return a;
    ZPoly r;
    r.coeff.assign(a.coeff.size() + k, Int(0));
    for (size_t i = 0; i < a.coeff.size(); ++i) r.coeff[i + k] = a.coeff[i];
    return r;
}

/// Divide by u^k; requires valuation >= k.
inline ZPoly shift_down(const ZPoly& a, long k) {
    if (k == 0) return a;
    ZPoly r;
    r.coeff.assign(a.coeff.begin() + k, a.coeff.end());
    return r;
}

inline Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a.coeff) g = int_gcd(g, c);
    return g;
}

inline ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    ZPoly r = a;
    for (auto& c : r.coeff) c /= g;
    return r;
}

/// Exact division; throws if the division is not exact.
inline ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return {};
    ZPoly rem = a;
    ZPoly quot;
    quot.coeff.assign(a.coeff.size() - b.coeff.size() + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long d = rem.degree() - b.degree();
        Int q = rem.lead() / b.lead();
        if (q * b.lead() != rem.lead()) throw Error("inexact polynomial division");
        quot.coeff[d] = q;
        rem = rem - shift_up(b * q, d);
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    quot.trim();
    return quot;
}

/// Pseudo-remainder of a by b (lead(b)^(da-db+1) * a mod b).
inline ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        long d = a.degree() - db;
        Int la = a.lead();
        ZPoly scaled = a * b.lead();
        a = scaled - shift_up(b * la, d);
    }
    return a;
}

/// Primitive PRS gcd; result is primitive with positive leading coefficient,
/// scaled by the gcd of contents.
inline ZPoly poly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() || b.lead() > 0 ? b : -b;
    if (b.is_zero()) return a.lead() > 0 ? a : -a;
    Int cont = int_gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? ZPoly{} : primitive_part(r);
    }
    if (a.lead() < 0) a = -a;
    return a * cont;
}

inline Rat eval_at_one(const ZPoly& a) {
    Int s = 0;
    for (const auto& c : a.coeff) s += c;
    return Rat(s);
}

} // namespace qtoda
