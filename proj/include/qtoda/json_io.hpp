#pragma once

#include "qtoda/toda.hpp"

#include <json.hpp>

namespace qtoda {

using nlohmann::json;

inline json to_json(const CartanDatum& cd) {
    return json{{"series", std::string(1, static_cast<char>(cd.series))},
                {"rank", cd.rank},
                {"a", cd.a},
                {"d", cd.d},
                {"b", cd.b}};
}

inline json rat_mat_json(const RatMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rat_to_string(x));
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const CoxeterDatum& cx) {
    std::vector<int> pi1;
    for (int x : cx.pi) pi1.push_back(x + 1);
    return json{{"pi", pi1},
                {"eps", cx.eps},
                {"c", cx.c},
                {"n", rat_mat_json(cx.n)},
                {"K", rat_mat_json(cx.K)},
                {"s_matrix", rat_mat_json(cx.s_h)},
                {"D", cx.D}};
}

inline json rat_vec_json(const RatVec& v) {
    json r = json::array();
    for (const auto& x : v) r.push_back(rat_to_string(x));
    return r;
}

inline json to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms()) {
        json t;
        t["f"] = k.fw;
        t["cart"] = rat_vec_json(k.y);
        t["e"] = k.ew;
        t["coeff"] = c.to_string(x.ctx()->D);
        terms.push_back(t);
    }
    return json{{"realization", x.ctx()->name}, {"terms", terms}};
}

/// Operator emission in the canonical order: lexicographic on
/// (shift vector, character vector).
inline json to_json(const DifferenceOperator& op) {
    std::vector<std::pair<DiffKey, QScalar>> sorted(op.terms().begin(), op.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.shift != b.first.shift) return a.first.shift < b.first.shift;
        return a.first.chr < b.first.chr;
    });
    json terms = json::array();
    for (const auto& [k, c] : sorted) {
        json t;
        t["char"] = rat_vec_json(k.chr);
        t["shift"] = rat_vec_json(k.shift);
        t["coeff"] = c.to_string(op.torus()->D);
        terms.push_back(t);
    }
    return json{{"D", op.torus()->D}, {"terms", terms}};
}

inline json to_json(const CartanDatum& cd, const Representation& rep, long D) {
    json E = json::array(), F = json::array();
    for (int i = 0; i < cd.rank; ++i) {
        json ei = json::array(), fi = json::array();
        for (int r = 0; r < rep.dim; ++r) {
            json er = json::array(), fr = json::array();
            for (int c = 0; c < rep.dim; ++c) {
                er.push_back(rep.E[i][r][c].to_string(D));
                fr.push_back(rep.F[i][r][c].to_string(D));
            }
            ei.push_back(er);
            fi.push_back(fr);
        }
        E.push_back(ei);
        F.push_back(fi);
    }
    return json{{"dim", rep.dim}, {"weights", rep.weights}, {"E", E}, {"F", F}, {"label", rep.label}};
}

inline Representation rep_from_json(const CartanDatum& cd, const json& j, long D) {
    Representation rep;
    try {
        rep.dim = j.at("dim").get<int>();
        rep.label = j.value("label", std::string("unnamed"));
        rep.weights = j.at("weights").get<std::vector<std::vector<long>>>();
        auto parse_mats = [&](const json& arr) {
            std::vector<QMat> out;
            for (const auto& mat : arr) {
                QMat m = qmat(rep.dim);
                for (int r = 0; r < rep.dim; ++r)
                    for (int c = 0; c < rep.dim; ++c) m[r][c] = QScalar::parse(mat.at(r).at(c).get<std::string>(), D);
                out.push_back(std::move(m));
            }
            return out;
        };
        rep.E = parse_mats(j.at("E"));
        rep.F = parse_mats(j.at("F"));
    } catch (const json::exception& e) {
        throw Error(std::string("representation file does not match the schema: ") + e.what());
    }
    validate_rep(cd, rep, D);
    return rep;
}

} // namespace qtoda
