#pragma once

#include "qtoda/rational.hpp"

namespace qtoda {

/// Dense exact rational matrix, row major. Small sizes only (rank <= 8).
using RatMat = std::vector<RatVec>;

inline RatMat rat_mat(size_t rows, size_t cols) {
    return RatMat(rows, RatVec(cols, Rat(0)));
}

inline RatMat rat_identity(size_t n) {
    RatMat m = rat_mat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw Error("matrix shape mismatch");
    RatMat r = rat_mat(n, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

inline RatMat mat_add(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

inline RatMat mat_sub(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

inline RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline RatMat mat_transpose(const RatMat& a) {
    if (a.empty()) return a;
    RatMat r = rat_mat(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

/// Exact inverse by Gauss-Jordan elimination. Throws on singular input.
inline RatMat mat_inverse(const RatMat& a) {
    size_t n = a.size();
    RatMat m = a;
    RatMat inv = rat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace qtoda
