#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoda {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error type for all user-visible failures (invalid input, exhausted
/// search bounds, violated invariants detected at runtime).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return a / int_gcd(a, b) * b;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline long to_long(const Int& v) {
    return static_cast<long>(v);
}

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto bar = s.find('/');
    try {
        if (bar == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, bar));
        Int q(s.substr(bar + 1));
        if (q == 0) throw Error("zero denominator in rational: " + s);
        return Rat(p, q);
    } catch (const std::exception& e) {
        throw Error("cannot parse rational '" + s + "': " + e.what());
    }
}

using RatVec = std::vector<Rat>;

inline RatVec rat_vec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVec& operator+=(RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline RatVec operator+(RatVec a, const RatVec& b) { return a += b; }

inline RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec operator*(const Rat& c, RatVec a) {
    for (auto& x : a) x *= c;
    return a;
}

inline bool is_zero_vec(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

} // namespace qtoda
