#pragma once

#include "qtoda/zpoly.hpp"

#include <optional>
#include <sstream>

namespace qtoda {

/// Exact rational function in u = q^(1/D), the coefficient field of a
/// session. Values are D-agnostic (pure rational functions in u); D only
/// enters when translating q-powers or printing. Canonical form:
/// gcd(num, den) = 1 including integer content, den has positive leading
/// coefficient, zero is 0/1.
class QScalar {
    ZPoly num_, den_;

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = ZPoly(Int(1));
            return;
        }
        if (den_.is_zero()) throw Error("division by zero scalar");
        ZPoly g = poly_gcd(num_, den_);
        if (!(g.degree() == 0 && g.coeff[0] == 1)) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

public:
    QScalar() : den_(Int(1)) {}
    QScalar(const Int& c) : num_(c), den_(Int(1)) {}
    QScalar(long c) : num_(Int(c)), den_(Int(1)) {}
    QScalar(const Rat& r) : num_(rat_num(r)), den_(rat_den(r)) {}
    QScalar(ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    static QScalar u_pow(long k) {
        if (k >= 0) return QScalar(ZPoly::monomial(Int(1), k), ZPoly(Int(1)));
        return QScalar(ZPoly(Int(1)), ZPoly::monomial(Int(1), -k));
    }

    /// q^e for rational e; requires e*D integral.
    static QScalar q_pow(const Rat& e, long D) {
        Rat k = e * D;
        if (!is_integer(k)) throw Error("q-exponent " + rat_to_string(e) + " not representable with D=" + std::to_string(D));
        return u_pow(to_long(rat_num(k)));
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && num_.coeff[0] == 1 && den_.degree() == 0 && den_.coeff[0] == 1; }

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    /// Total order for deterministic term maps.
    bool operator<(const QScalar& o) const {
        if (num_.coeff != o.num_.coeff) return num_.coeff < o.num_.coeff;
        return den_.coeff < o.den_.coeff;
    }

    QScalar operator+(const QScalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return QScalar(num_ + o.num_, den_);
        return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    QScalar operator-() const {
        QScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QScalar operator-(const QScalar& o) const { return *this + (-o); }
    QScalar operator*(const QScalar& o) const {
        if (is_zero() || o.is_zero()) return QScalar();
        return QScalar(num_ * o.num_, den_ * o.den_);
    }
    QScalar inverse() const {
        if (is_zero()) throw Error("inverse of zero scalar");
        return QScalar(den_, num_);
    }
    QScalar operator/(const QScalar& o) const { return *this * o.inverse(); }

    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar pow(long k) const {
        if (k == 0) return QScalar(Int(1));
        QScalar base = k > 0 ? *this : inverse();
        long n = k > 0 ? k : -k;
        QScalar r(Int(1));
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    /// If the value is c*u^k with c = +-1, return (c, k).
    std::optional<std::pair<int, long>> as_unit_monomial() const {
        if (num_.is_monomial() && den_.is_monomial() && den_.lead() == 1 && (num_.lead() == 1 || num_.lead() == -1))
            return std::make_pair(static_cast<int>(num_.lead()), num_.degree() - den_.degree());
        return std::nullopt;
    }

    std::string to_string(long D) const;
    std::string to_latex(long D) const;
    static QScalar parse(const std::string& s, long D);
};

inline QScalar operator*(long c, const QScalar& s) { return QScalar(c) * s; }

// --- q-combinatorics -------------------------------------------------------
//
// ustep is the u-exponent of the base: [n] at base q^(d) has ustep = d*D.

/// [n]_q = (q^n - q^-n)/(q - q^-1) at base u^ustep.
inline QScalar qint(long n, long ustep) {
    if (n < 0) throw Error("qint: negative argument");
    // (u^(2sn) - 1)/(u^(2s) - 1) * u^(-s(n-1))
    ZPoly a = ZPoly::monomial(Int(1), 2 * ustep * n) - ZPoly(Int(1));
    ZPoly b = ZPoly::monomial(Int(1), 2 * ustep) - ZPoly(Int(1));
    if (n == 0) return QScalar();
    QScalar r(div_exact(a, b), ZPoly(Int(1)));
    return r * QScalar::u_pow(-ustep * (n - 1));
}

inline QScalar qfact(long n, long ustep) {
    if (n < 0) throw Error("qfact: negative argument");
    QScalar r(Int(1));
    for (long k = 2; k <= n; ++k) r *= qint(k, ustep);
    return r;
}

/// Gaussian binomial [m n]_q at base u^ustep; requires 0 <= n <= m.
inline QScalar qbinom(long m, long n, long ustep) {
    if (n < 0 || n > m) throw Error("qbinom: need 0 <= n <= m");
    return qfact(m, ustep) / (qfact(n, ustep) * qfact(m - n, ustep));
}

/// (n)_q = (q^n - 1)/(q - 1) for an arbitrary invertible base.
inline QScalar qexp_int(long n, const QScalar& base) {
    QScalar r;
    for (long k = 0; k < n; ++k) r += base.pow(k);
    return r;
}

/// (n)_q! for an arbitrary base; these are the exp_q denominators.
inline QScalar qexp_fact(long n, const QScalar& base) {
    if (n < 0) throw Error("qexp_fact: negative argument");
    QScalar r(Int(1));
    for (long k = 2; k <= n; ++k) r *= qexp_int(k, base);
    return r;
}

/// (n)_q = (q^n - 1)/(q - 1) at base q itself.
inline QScalar qexp_symbol(long n, long D) { return qexp_int(n, QScalar::u_pow(D)); }
inline QScalar qexp_symbol_fact(long n, long D) { return qexp_fact(n, QScalar::u_pow(D)); }

// --- printing --------------------------------------------------------------

namespace detail {

inline void print_exponent(std::ostringstream& os, long k, long D, bool latex) {
    Rat e(k, D);
    if (e == 1) return;
    if (latex) {
        os << "^{" << rat_to_string(e) << "}";
    } else if (is_integer(e) && e > 0) {
        os << "^" << rat_to_string(e);
    } else {
        os << "^(" << rat_to_string(e) << ")";
    }
}

inline std::string poly_to_string(const ZPoly& p, long D, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const Int& c = p.coeff[k];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << (latex ? " " : "*");
            os << "q";
            print_exponent(os, k, D, latex);
        }
    }
    return os.str();
}

inline bool poly_is_simple(const ZPoly& p) {
    // single term
    int nz = 0;
    for (const auto& c : p.coeff)
        if (c != 0) ++nz;
    return nz <= 1;
}

/// A denominator can go unparenthesized only when it is a single atom:
/// a bare integer or a bare q-power with unit coefficient.
inline bool poly_is_atom(const ZPoly& p) {
    if (!poly_is_simple(p)) return false;
    if (p.degree() <= 0) return true;
    return p.lead() == 1;
}

} // namespace detail

inline std::string QScalar::to_string(long D) const {
    if (is_zero()) return "0";
    std::string n = detail::poly_to_string(num_, D, false);
    if (den_.degree() == 0 && den_.coeff[0] == 1) return n;
    std::string d = detail::poly_to_string(den_, D, false);
    std::string ns = detail::poly_is_simple(num_) ? n : "(" + n + ")";
    std::string ds = detail::poly_is_atom(den_) ? d : "(" + d + ")";
    return ns + "/" + ds;
}

inline std::string QScalar::to_latex(long D) const {
    if (is_zero()) return "0";
    std::string n = detail::poly_to_string(num_, D, true);
    if (den_.degree() == 0 && den_.coeff[0] == 1) return n;
    std::string d = detail::poly_to_string(den_, D, true);
    return "\\frac{" + n + "}{" + d + "}";
}

// --- parsing ---------------------------------------------------------------

namespace detail {

struct ScalarParser {
    const std::string& s;
    size_t i = 0;
    long D;

    explicit ScalarParser(const std::string& str, long d) : s(str), D(d) {}

    void skip() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    Int integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw Error("scalar parse: expected integer in '" + s + "' at " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }

    Rat exponent() {
        // integer, or (p/q) with optional sign
        if (eat('(')) {
            Int p = integer();
            Rat r(p);
            if (eat('/')) r = Rat(p, integer());
            if (!eat(')')) throw Error("scalar parse: missing ')' in exponent of '" + s + "'");
            return r;
        }
        return Rat(integer());
    }

    QScalar atom() {
        skip();
        if (eat('(')) {
            QScalar v = expr();
            if (!eat(')')) throw Error("scalar parse: missing ')' in '" + s + "'");
            return v;
        }
        if (peek() == 'q') {
            ++i;
            if (eat('^')) return QScalar::q_pow(exponent(), D);
            return QScalar::u_pow(D);
        }
        if (isdigit(static_cast<unsigned char>(peek()))) return QScalar(integer());
        throw Error("scalar parse: unexpected character in '" + s + "' at " + std::to_string(i));
    }

    QScalar factor() {
        bool neg = false;
        while (true) {
            skip();
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        QScalar v = atom();
        if (eat('^')) {
            Rat e = exponent();
            if (!is_integer(e)) throw Error("scalar parse: fractional power of non-q base in '" + s + "'");
            v = v.pow(to_long(rat_num(e)));
        }
        return neg ? -v : v;
    }

    QScalar term() {
        QScalar v = factor();
        while (true) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                break;
        }
        return v;
    }

    QScalar expr() {
        QScalar v = term();
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (s[i] == '+') {
                ++i;
                v += term();
            } else if (s[i] == '-') {
                ++i;
                v -= term();
            } else {
                break;
            }
        }
        return v;
    }
};

} // namespace detail

inline QScalar QScalar::parse(const std::string& s, long D) {
    detail::ScalarParser p(s, D);
    QScalar v = p.expr();
    p.skip();
    if (p.i != s.size()) throw Error("scalar parse: trailing input in '" + s + "'");
    return v;
}

} // namespace qtoda
