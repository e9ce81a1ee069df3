#include "qtoda/json_io.hpp"
#include "qtoda/representation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qtoda;

namespace {
struct Fixture {
    CartanDatum cd;
    CoxeterDatum cx;
    explicit Fixture(Series s, int l) {
        cd = build_cartan(s, l);
        std::vector<int> pi;
        for (int i = 0; i < l; ++i) pi.push_back(i);
        cx = make_coxeter_datum(cd, pi);
    }
};
} // namespace

TEST_CASE("built-in vector representations validate", "[rep]") {
    for (int rank = 1; rank <= 4; ++rank) {
        Fixture fx(Series::A, rank);
        Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
        CHECK(rep.dim == rank + 1);
    }
    Fixture fx(Series::A, 1);
    Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
    CHECK(rep.E[0][0][1].is_one());
    CHECK(rep.F[0][1][0].is_one());
    CHECK(rep.weights == std::vector<std::vector<long>>{{1}, {-1}});
    CHECK_THROWS_AS(builtin_rep(fx.cd, "fundamental:7", fx.cx.D), Error);
    CHECK_THROWS_AS(builtin_rep(build_cartan(Series::B, 2), "vector", 4), Error);
}

TEST_CASE("sl(3) dual fundamental", "[rep]") {
    Fixture fx(Series::A, 2);
    Representation rep = builtin_rep(fx.cd, "fundamental:2", fx.cx.D);
    CHECK(rep.dim == 3);
    CHECK(rep.weights[0] == std::vector<long>{0, 1});
    // highest weight is omega_2; lowering chain alpha_2 then alpha_1
    CHECK_FALSE(rep.E[1][0][1].is_zero());
    CHECK_FALSE(rep.E[0][1][2].is_zero());
}

TEST_CASE("validator rejects broken data naming the relation", "[rep]") {
    Fixture fx(Series::A, 1);
    Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
    // swap E and F: [E,F] comes out with the wrong sign
    Representation bad = rep;
    std::swap(bad.E, bad.F);
    CHECK_THROWS_WITH(validate_rep(fx.cd, bad, fx.cx.D), Catch::Matchers::ContainsSubstring("[E_1,F_1]"));

    // wrong weight list: the K-conjugation (weight shift) structure fails
    Fixture f3(Series::A, 2);
    Representation badw = builtin_rep(f3.cd, "vector", f3.cx.D);
    badw.weights[0] = {0, 0};
    CHECK_THROWS_WITH(validate_rep(f3.cd, badw, f3.cx.D), Catch::Matchers::ContainsSubstring("K-conjugation"));
}

TEST_CASE("weight-shifting monomials are traceless", "[rep]") {
    Fixture fx(Series::A, 2);
    Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
    // any single E_i (or product shifting total weight) has zero trace
    for (int i = 0; i < 2; ++i) {
        QScalar tr;
        for (int k = 0; k < rep.dim; ++k) tr += rep.E[i][k][k];
        CHECK(tr.is_zero());
    }
    QMat prod = qmat_mul(rep.E[0], rep.E[1]);
    QScalar tr;
    for (int k = 0; k < rep.dim; ++k) tr += prod[k][k];
    CHECK(tr.is_zero());
}

TEST_CASE("representation JSON round trip and schema errors", "[rep]") {
    Fixture fx(Series::A, 2);
    Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
    json j = to_json(fx.cd, rep, fx.cx.D);
    Representation back = rep_from_json(fx.cd, j, fx.cx.D);
    CHECK(back.dim == rep.dim);
    CHECK(back.weights == rep.weights);
    for (int i = 0; i < 2; ++i) CHECK(qmat_equal(back.E[i], rep.E[i]));

    json broken = j;
    broken.erase("weights");
    CHECK_THROWS_WITH(rep_from_json(fx.cd, broken, fx.cx.D), Catch::Matchers::ContainsSubstring("schema"));

    json swapped = j;
    std::swap(swapped["E"], swapped["F"]);
    CHECK_THROWS_WITH(rep_from_json(fx.cd, swapped, fx.cx.D), Catch::Matchers::ContainsSubstring("[E_1,F_1]"));
}

TEST_CASE("evaluation of algebra elements in a representation", "[rep]") {
    Fixture fx(Series::A, 1);
    auto std_ctx = make_standard_context(fx.cd, fx.cx);
    Representation rep = builtin_rep(fx.cd, "vector", fx.cx.D);
    RatMat wY = rep.weights_Y(fx.cx.Y_in_H);
    // mu(Y_1) = +-1/2 for the sl(2) vector representation
    CHECK(wY == RatMat{{Rat(1, 2)}, {Rat(-1, 2)}});

    QScalar q = QScalar::u_pow(std_ctx->D);
    auto e = AlgebraElement::letter_e(std_ctx, 0);
    auto f = AlgebraElement::letter_f(std_ctx, 0);
    // the defining relation holds under evaluation
    auto rel = e * f - f * e;
    QMat lhs = evaluate_std(rel, rep, wY, fx.cx.D);
    QMat rhs = qmat(2);
    rhs[0][0] = (q - q.inverse()) / (q - q.inverse());
    rhs[1][1] = -rhs[0][0];
    CHECK(qmat_equal(lhs, rhs));
}
