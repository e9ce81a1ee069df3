#pragma once

#include "qtoda/linalg.hpp"

#include <map>
#include <set>
#include <string>

namespace qtoda {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Series series_from_char(char c) {
    switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
        return static_cast<Series>(c);
    default:
        throw Error(std::string("unknown series '") + c + "'");
    }
}

/// Integer Cartan data of a simple Lie algebra. Conventions:
/// a[i][j] is the Cartan matrix with [H_i, X_j] = a_ij X_j, the symmetrizers
/// d are coprime with b_ij = d_i a_ij symmetric, and d_i = (alpha_i, alpha_i)/2.
/// Labelings: A/D/E chains per Bourbaki; B_l has the short root last
/// (d = 2,...,2,1); C_l has the long root last (d = 1,...,1,2); F4 is
/// long-long-short-short (d = 2,2,1,1); G2 has the long root first (d = 3,1).
struct CartanDatum {
    Series series;
    int rank;
    std::vector<std::vector<long>> a;
    std::vector<long> d;
    std::vector<std::vector<long>> b; // b_ij = d_i a_ij

    std::string name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

    void validate() const {
        int l = rank;
        if (l <= 0 || a.size() != static_cast<size_t>(l) || d.size() != static_cast<size_t>(l))
            throw Error("CartanDatum: bad shapes");
        long g = 0;
        for (int i = 0; i < l; ++i) {
            if (d[i] <= 0) throw Error("CartanDatum: symmetrizers must be positive");
            g = to_long(int_lcm(1, int_gcd(Int(g), Int(d[i]))));
            if (a[i][i] != 2) throw Error("CartanDatum: a_ii must be 2");
            for (int j = 0; j < l; ++j) {
                if (i != j && a[i][j] > 0) throw Error("CartanDatum: off-diagonal a_ij must be <= 0");
                if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error("CartanDatum: zero pattern not symmetric");
                if (d[i] * a[i][j] != d[j] * a[j][i]) throw Error("CartanDatum: b = d*a not symmetric");
            }
        }
        Int gg = d[0];
        for (int i = 1; i < l; ++i) gg = int_gcd(gg, Int(d[i]));
        if (gg != 1) throw Error("CartanDatum: symmetrizers not coprime");
    }
};

namespace detail {

inline std::vector<std::vector<long>> chain_matrix(int l) {
    std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i) {
        a[i][i] = 2;
        if (i + 1 < l) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

} // namespace detail

inline CartanDatum build_cartan(Series s, int l) {
    CartanDatum c;
    c.series = s;
    c.rank = l;
    c.d.assign(l, 1);
    switch (s) {
    case Series::A:
        if (l < 1) throw Error("type A needs rank >= 1");
        c.a = detail::chain_matrix(l);
        break;
    case Series::B:
        if (l < 2) throw Error("type B needs rank >= 2");
        c.a = detail::chain_matrix(l);
        c.a[l - 2][l - 1] = -1;
        c.a[l - 1][l - 2] = -2;
        c.d.assign(l, 2);
        c.d[l - 1] = 1;
        break;
    case Series::C:
        if (l < 2) throw Error("type C needs rank >= 2");
        c.a = detail::chain_matrix(l);
        c.a[l - 2][l - 1] = -2;
        c.a[l - 1][l - 2] = -1;
        c.d.assign(l, 1);
        c.d[l - 1] = 2;
        break;
    case Series::D:
        if (l < 4) throw Error("type D needs rank >= 4");
        c.a = detail::chain_matrix(l);
        c.a[l - 2][l - 1] = c.a[l - 1][l - 2] = 0;
        c.a[l - 3][l - 1] = c.a[l - 1][l - 3] = -1;
        break;
    case Series::E: {
        if (l < 6 || l > 8) throw Error("type E needs rank 6, 7 or 8");
        // Bourbaki: chain 1-3-4-5-...-l, node 2 attached to node 4.
        c.a.assign(l, std::vector<long>(l, 0));
        for (int i = 0; i < l; ++i) c.a[i][i] = 2;
        auto link = [&](int i, int j) { c.a[i][j] = c.a[j][i] = -1; };
        link(0, 2);
        link(2, 3);
        link(1, 3);
        for (int i = 3; i + 1 < l; ++i) link(i, i + 1);
        break;
    }
    case Series::F:
        if (l != 4) throw Error("type F needs rank 4");
        c.a = detail::chain_matrix(4);
        c.a[1][2] = -1;
        c.a[2][1] = -2;
        c.d = {2, 2, 1, 1};
        break;
    case Series::G:
        if (l != 2) throw Error("type G needs rank 2");
        c.a = {{2, -1}, {-3, 2}};
        c.d = {3, 1};
        break;
    }
    c.b.assign(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c.b[i][j] = c.d[i] * c.a[i][j];
    c.validate();
    return c;
}

inline long positive_root_count(Series s, int l) {
    switch (s) {
    case Series::A: return static_cast<long>(l) * (l + 1) / 2;
    case Series::B:
    case Series::C: return static_cast<long>(l) * l;
    case Series::D: return static_cast<long>(l) * (l - 1);
    case Series::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
    }
    throw Error("unreachable");
}

/// Positive roots in simple-root coordinates, with the exact bilinear form,
/// rho and rho-check. Root list order is canonical: by height, then
/// lexicographically on coordinates.
struct RootSystem {
    CartanDatum cartan;
    std::vector<std::vector<long>> positive_roots;
    RatVec rho;      // alpha-basis coordinates of half the sum of positive roots
    RatVec rho_vee_Y; // Y-basis coordinates of rho-check (all ones)

    int rank() const { return cartan.rank; }
    size_t count() const { return positive_roots.size(); }

    /// (x, y) extended bilinearly from (alpha_i, alpha_j) = b_ij.
    template <class V1, class V2> Rat pairing(const V1& x, const V2& y) const {
        Rat s(0);
        for (int i = 0; i < cartan.rank; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < cartan.rank; ++j) s += Rat(x[i]) * Rat(cartan.b[i][j]) * Rat(y[j]);
        }
        return s;
    }

    long height(size_t idx) const {
        long h = 0;
        for (long m : positive_roots[idx]) h += m;
        return h;
    }

    bool is_simple(size_t idx) const { return height(idx) == 1; }

    /// Index of simple root alpha_i in the root list.
    size_t simple_index(int i) const {
        for (size_t k = 0; k < positive_roots.size(); ++k)
            if (is_simple(k) && positive_roots[k][i] == 1) return k;
        throw Error("simple root not found");
    }

    /// s_i applied to a root in alpha coordinates.
    std::vector<long> reflect(int i, const std::vector<long>& m) const {
        std::vector<long> r = m;
        long s = 0;
        for (int j = 0; j < cartan.rank; ++j) s += cartan.a[i][j] * m[j];
        r[i] -= s;
        return r;
    }

    int root_index(const std::vector<long>& m) const {
        for (size_t k = 0; k < positive_roots.size(); ++k)
            if (positive_roots[k] == m) return static_cast<int>(k);
        return -1;
    }
};

inline RootSystem build_root_system(const CartanDatum& cartan) {
    cartan.validate();
    RootSystem rs;
    rs.cartan = cartan;
    int l = cartan.rank;
    std::set<std::vector<long>> pos;
    std::vector<std::vector<long>> frontier;
    for (int i = 0; i < l; ++i) {
        std::vector<long> e(l, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& m : frontier) {
            for (int i = 0; i < l; ++i) {
                auto r = rs.reflect(i, m);
                bool positive = true, nonzero = false;
                for (long x : r) {
                    if (x < 0) positive = false;
                    if (x != 0) nonzero = true;
                }
                if (positive && nonzero && pos.insert(r).second) next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    // canonical order: height, then lexicographic
    std::vector<std::pair<long, std::vector<long>>> keyed;
    for (const auto& m : pos) {
        long h = 0;
        for (long x : m) h += x;
        keyed.emplace_back(h, m);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [h, m] : keyed) rs.positive_roots.push_back(std::move(m));

    if (static_cast<long>(rs.positive_roots.size()) != positive_root_count(cartan.series, l))
        throw Error("root closure produced wrong count for " + cartan.name());

    rs.rho.assign(l, Rat(0));
    for (const auto& m : rs.positive_roots)
        for (int i = 0; i < l; ++i) rs.rho[i] += Rat(m[i], 2);
    rs.rho_vee_Y.assign(l, Rat(1));
    return rs;
}

} // namespace qtoda
