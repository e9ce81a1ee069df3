#pragma once

#include "qtoda/algebra.hpp"

namespace qtoda {

using QMat = std::vector<std::vector<QScalar>>;

inline QMat qmat(size_t n) { return QMat(n, std::vector<QScalar>(n)); }

inline QMat qmat_identity(size_t n) {
    QMat m = qmat(n);
    for (size_t i = 0; i < n; ++i) m[i][i] = QScalar(Int(1));
    return m;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size();
    QMat r = qmat(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

inline QMat qmat_add(const QMat& a, const QMat& b) {
    QMat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
    return r;
}

inline QMat qmat_scale(const QMat& a, const QScalar& c) {
    QMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

inline bool qmat_equal(const QMat& a, const QMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

inline bool qmat_is_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

inline QMat qmat_kron(const QMat& a, const QMat& b) {
    size_t n = a.size(), m = b.size();
    QMat r = qmat(n * m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t k = 0; k < m; ++k)
                for (size_t l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
        }
    return r;
}

/// Finite-dimensional representation in a weight basis: the Cartan action is
/// diagonal, E_i and F_i shift weights by +-alpha_i, and all defining and
/// Serre relations hold as exact matrix identities (validated, not assumed).
struct Representation {
    int dim = 0;
    std::vector<std::vector<long>> weights; // weights[k][i] = mu_k(H_i)
    std::vector<QMat> E, F;                 // per simple index
    std::string label;

    /// mu_k(Y_j) as exact rationals (Y_in_H from the Coxeter datum).
    RatMat weights_Y(const RatMat& Y_in_H) const {
        int l = static_cast<int>(Y_in_H.size());
        RatMat w(dim, RatVec(l, Rat(0)));
        for (int k = 0; k < dim; ++k)
            for (int j = 0; j < l; ++j)
                for (int i = 0; i < l; ++i) w[k][j] += Y_in_H[j][i] * Rat(weights[k][i]);
        return w;
    }
};

inline void validate_rep(const CartanDatum& cd, const Representation& rep, long D) {
    int l = cd.rank;
    int n = rep.dim;
    if (rep.weights.size() != static_cast<size_t>(n) || rep.E.size() != static_cast<size_t>(l) ||
        rep.F.size() != static_cast<size_t>(l))
        throw Error("representation '" + rep.label + "': bad shapes");

    // weight-shift structure: E_i nonzero only where mu_row = mu_col + alpha_i
    auto shift_violations = [&](const QMat& m, int i, int dir) {
        int bad = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (m[r][c].is_zero()) continue;
                for (int k = 0; k < l; ++k)
                    if (rep.weights[r][k] != rep.weights[c][k] + dir * cd.a[k][i]) {
                        ++bad;
                        break;
                    }
            }
        return bad;
    };
    for (int i = 0; i < l; ++i) {
        int e_bad = shift_violations(rep.E[i], i, +1);
        int f_bad = shift_violations(rep.F[i], i, -1);
        if (e_bad || f_bad) {
            // a consistent swap of raising and lowering is an orientation bug,
            // best reported as the [E,F] relation
            if (shift_violations(rep.E[i], i, -1) == 0 && shift_violations(rep.F[i], i, +1) == 0)
                throw Error("representation '" + rep.label + "': [E_" + std::to_string(i + 1) + ",F_" +
                            std::to_string(i + 1) + "] relation fails (E and F appear swapped)");
            throw Error("representation '" + rep.label + "': K-conjugation (weight shift) relation fails for " +
                        std::string(e_bad ? "E_" : "F_") + std::to_string(i + 1));
        }
    }

    // [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            QMat lhs = qmat_add(qmat_mul(rep.E[i], rep.F[j]), qmat_scale(qmat_mul(rep.F[j], rep.E[i]), QScalar(Int(-1))));
            QMat rhs = qmat(n);
            if (i == j) {
                QScalar qi = QScalar::u_pow(cd.d[i] * D);
                QScalar denom = qi - qi.inverse();
                for (int k = 0; k < n; ++k) {
                    QScalar ki = QScalar::u_pow(cd.d[i] * D * rep.weights[k][i]);
                    rhs[k][k] = (ki - ki.inverse()) / denom;
                }
            }
            if (!qmat_equal(lhs, rhs))
                throw Error("representation '" + rep.label + "': [E_" + std::to_string(i + 1) + ",F_" +
                            std::to_string(j + 1) + "] relation fails");
        }

    // quantum Serre relations as matrices
    auto serre_check = [&](const std::vector<QMat>& X, const char* kind) {
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j) continue;
                long m = 1 - cd.a[i][j];
                QMat acc = qmat(n);
                for (long r = 0; r <= m; ++r) {
                    QScalar coeff = qbinom(m, r, cd.d[i] * D);
                    if (r % 2) coeff = -coeff;
                    QMat term = qmat_identity(n);
                    for (long k = 0; k < m - r; ++k) term = qmat_mul(term, X[i]);
                    term = qmat_mul(term, X[j]);
                    for (long k = 0; k < r; ++k) term = qmat_mul(term, X[i]);
                    acc = qmat_add(acc, qmat_scale(term, coeff));
                }
                if (!qmat_is_zero(acc))
                    throw Error("representation '" + rep.label + "': quantum Serre relation fails for " + kind + "_" +
                                std::to_string(i + 1) + "," + kind + "_" + std::to_string(j + 1));
            }
    };
    serre_check(rep.E, "E");
    serre_check(rep.F, "F");
}

/// Built-in representations: the vector representation of sl(n) for n <= 5
/// ("vector" or "fundamental:1") and the dual fundamental of sl(3)
/// ("fundamental:2"). Matrix entries are fixed in the 0/1 gauge.
inline Representation builtin_rep(const CartanDatum& cd, const std::string& which, long D) {
    auto unsupported = [&] {
        throw Error("unsupported representation '" + which + "' for " + cd.name() +
                    " (built-ins: vector/fundamental:1 for A1..A4, fundamental:2 for A2)");
    };
    if (cd.series != Series::A) unsupported();
    int n = cd.rank + 1;
    Representation rep;
    if (which == "vector" || which == "fundamental:1") {
        if (n > 5) unsupported();
        rep.dim = n;
        rep.label = "sl(" + std::to_string(n) + ") vector";
        rep.E.assign(cd.rank, qmat(n));
        rep.F.assign(cd.rank, qmat(n));
        for (int i = 0; i < cd.rank; ++i) {
            rep.E[i][i][i + 1] = QScalar(Int(1));
            rep.F[i][i + 1][i] = QScalar(Int(1));
        }
        rep.weights.assign(n, std::vector<long>(cd.rank, 0));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < cd.rank; ++i) rep.weights[k][i] = (k == i ? 1 : 0) - (k == i + 1 ? 1 : 0);
    } else if (which == "fundamental:2" && cd.rank == 2) {
        rep.dim = 3;
        rep.label = "sl(3) dual fundamental";
        rep.E.assign(2, qmat(3));
        rep.F.assign(2, qmat(3));
        // weight chain omega_2, omega_2 - alpha_2, omega_2 - alpha_2 - alpha_1
        rep.E[1][0][1] = QScalar(Int(1));
        rep.F[1][1][0] = QScalar(Int(1));
        rep.E[0][1][2] = QScalar(Int(1));
        rep.F[0][2][1] = QScalar(Int(1));
        rep.weights = {{0, 1}, {1, -1}, {-1, 0}};
    } else {
        unsupported();
    }
    validate_rep(cd, rep, D);
    return rep;
}

/// Direct sum, used by the trace-linearity check.
inline Representation rep_direct_sum(const CartanDatum& cd, const Representation& a, const Representation& b, long D) {
    Representation r;
    r.dim = a.dim + b.dim;
    r.label = a.label + " + " + b.label;
    r.weights = a.weights;
    r.weights.insert(r.weights.end(), b.weights.begin(), b.weights.end());
    r.E.assign(cd.rank, qmat(r.dim));
    r.F.assign(cd.rank, qmat(r.dim));
    for (int i = 0; i < cd.rank; ++i) {
        for (int x = 0; x < a.dim; ++x)
            for (int y = 0; y < a.dim; ++y) {
                r.E[i][x][y] = a.E[i][x][y];
                r.F[i][x][y] = a.F[i][x][y];
            }
        for (int x = 0; x < b.dim; ++x)
            for (int y = 0; y < b.dim; ++y) {
                r.E[i][a.dim + x][a.dim + y] = b.E[i][x][y];
                r.F[i][a.dim + x][a.dim + y] = b.F[i][x][y];
            }
    }
    validate_rep(cd, r, D);
    return r;
}

/// Evaluate a standard-realization element in a representation.
/// Cartan exponentials act diagonally: pi(exp(h y.Y)) = diag(q^{mu_k(y.Y)}).
inline QMat evaluate_std(const AlgebraElement& x, const Representation& rep, const RatMat& weights_Y, long D) {
    int n = rep.dim;
    QMat r = qmat(n);
    for (const auto& [k, c] : x.terms()) {
        QMat term = qmat_identity(n);
        for (int i : k.fw) term = qmat_mul(term, rep.F[i]);
        if (!is_zero_vec(k.y)) {
            QMat diag = qmat(n);
            for (int w = 0; w < n; ++w) {
                Rat e(0);
                for (size_t j = 0; j < k.y.size(); ++j) e += k.y[j] * weights_Y[w][j];
                diag[w][w] = QScalar::q_pow(e, D);
            }
            term = qmat_mul(term, diag);
        }
        for (int i : k.ew) term = qmat_mul(term, rep.E[i]);
        r = qmat_add(r, qmat_scale(term, c));
    }
    return r;
}

} // namespace qtoda
