#include "qtoda/realization.hpp"
#include "qtoda/hopf.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace qtoda;

namespace {

struct Fixture {
    CartanDatum cd;
    CoxeterDatum cx;
    RootSystem rs;
    NormalOrdering ord;
    ContextPtr std_ctx, cox_ctx;
    RootVectors rv;
    CoxeterRootVectors crv;

    explicit Fixture(Series s, int l, std::vector<int> pi = {}) {
        cd = build_cartan(s, l);
        if (pi.empty())
            for (int i = 0; i < l; ++i) pi.push_back(i);
        cx = make_coxeter_datum(cd, pi);
        rs = build_root_system(cd);
        ord = find_normal_ordering(rs, pi);
        std_ctx = make_standard_context(cd, cx);
        cox_ctx = make_coxeter_context(cd, cx);
        rv = build_root_vectors(rs, ord, std_ctx);
        crv = build_coxeter_root_vectors(rs, rv, cox_ctx, cx);
    }

    AlgebraElement mixed_relation(int i, int j) const {
        auto e = AlgebraElement::letter_e(cox_ctx, i);
        auto f = AlgebraElement::letter_f(cox_ctx, j);
        AlgebraElement rel = e * f - cox_ctx->q_pow(cox_ctx->cmix[i][j]) * (f * e);
        if (i == j) {
            QScalar qi = QScalar::u_pow(cd.d[i] * cox_ctx->D);
            QScalar w = (qi - qi.inverse()).inverse();
            rel -= (AlgebraElement::cartan(cox_ctx, RatVec(cox_ctx->kvec[i])) -
                    AlgebraElement::cartan(cox_ctx, -cox_ctx->kvec[i])) * w;
        }
        return rel;
    }

    AlgebraElement serre_relation(int i, int j, bool on_f) const {
        long m = 1 - cd.a[i][j];
        AlgebraElement acc(cox_ctx);
        for (long r = 0; r <= m; ++r) {
            QScalar coeff = qbinom(m, r, cd.d[i] * cox_ctx->D) * cox_ctx->q_pow(r * cox_ctx->cmix[i][j]);
            if (r % 2) coeff = -coeff;
            AlgebraElement word = AlgebraElement::unit(cox_ctx);
            auto letter = [&](int idx) {
                return on_f ? AlgebraElement::letter_f(cox_ctx, idx) : AlgebraElement::letter_e(cox_ctx, idx);
            };
            for (long k = 0; k < m - r; ++k) word *= letter(i);
            word *= letter(j);
            for (long k = 0; k < r; ++k) word *= letter(i);
            acc += word * coeff;
        }
        return acc;
    }
};

} // namespace

TEST_CASE("psi on generators", "[psi]") {
    Fixture a1(Series::A, 1);
    // n = 0: psi is the identity on letters
    auto e = AlgebraElement::letter_e(a1.cox_ctx, 0);
    CHECK(psi_forward(e, a1.std_ctx, a1.cx).equals(AlgebraElement::letter_e(a1.std_ctx, 0)));

    Fixture a2(Series::A, 2);
    REQUIRE(a2.cx.n == RatMat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
    // psi(e_1) = X_1^+ L_2, psi(f_1) = L_2^-1 X_1^-
    auto img_e = psi_forward(AlgebraElement::letter_e(a2.cox_ctx, 0), a2.std_ctx, a2.cx);
    AlgebraElement expect_e =
        AlgebraElement::letter_e(a2.std_ctx, 0) * AlgebraElement::cartan(a2.std_ctx, rat_vec({0, 1}));
    CHECK(img_e.equals(expect_e));
    auto img_f = psi_forward(AlgebraElement::letter_f(a2.cox_ctx, 0), a2.std_ctx, a2.cx);
    AlgebraElement expect_f =
        AlgebraElement::cartan(a2.std_ctx, rat_vec({0, -1})) * AlgebraElement::letter_f(a2.std_ctx, 0);
    CHECK(img_f.equals(expect_f));
    // psi(e_2) = X_2^+ (n row 2 is zero)
    CHECK(psi_forward(AlgebraElement::letter_e(a2.cox_ctx, 1), a2.std_ctx, a2.cx)
              .equals(AlgebraElement::letter_e(a2.std_ctx, 1)));
}

TEST_CASE("psi transports every defining relation to zero", "[psi]") {
    for (auto [s, l] : std::vector<std::pair<Series, int>>{{Series::A, 1}, {Series::A, 2}, {Series::B, 2}}) {
        Fixture fx(s, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                CHECK(psi_forward(fx.mixed_relation(i, j), fx.std_ctx, fx.cx).is_zero());
                if (i != j) {
                    CHECK(psi_forward(fx.serre_relation(i, j, false), fx.std_ctx, fx.cx).is_zero());
                    CHECK(psi_forward(fx.serre_relation(i, j, true), fx.std_ctx, fx.cx).is_zero());
                }
            }
    }
}

TEST_CASE("psi inverse composes to the identity on random elements", "[psi]") {
    Fixture fx(Series::A, 2);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        AlgebraElement x(fx.cox_ctx);
        TermKey k;
        k.y.assign(2, Rat(0));
        for (int t = 0; t < 2; ++t) k.fw.push_back(static_cast<int>(rng() % 2));
        for (int t = 0; t < 2; ++t) k.ew.push_back(static_cast<int>(rng() % 2));
        k.y[rng() % 2] = Rat(static_cast<long>(rng() % 5) - 2);
        x.add_term(k, QScalar::u_pow(static_cast<long>(rng() % 7) - 3));
        AlgebraElement back = psi_inverse(psi_forward(x, fx.std_ctx, fx.cx), fx.cox_ctx, fx.cx);
        CHECK(back.equals(x));
        AlgebraElement y = psi_forward(psi_inverse(
            map_letters(x, fx.std_ctx, [](bool is_e, int i) {
                return std::vector<Atom>{is_e ? Atom::e(i) : Atom::f(i)};
            }), fx.cox_ctx, fx.cx), fx.std_ctx, fx.cx);
        // psi . psi^-1 = id on the standard side too
        CHECK(y.equals(map_letters(x, fx.std_ctx, [](bool is_e, int i) {
            return std::vector<Atom>{is_e ? Atom::e(i) : Atom::f(i)};
        })));
    }
}

TEST_CASE("Coxeter root vectors are Cartan-free and reduce to letters on simples", "[psi]") {
    for (auto [s, l] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2}, {Series::A, 3}}) {
        Fixture fx(s, l);
        for (int i = 0; i < l; ++i) {
            int g = static_cast<int>(fx.rs.simple_index(i));
            CHECK(fx.crv.e[g].equals(AlgebraElement::letter_e(fx.cox_ctx, i)));
            CHECK(fx.crv.f[g].equals(AlgebraElement::letter_f(fx.cox_ctx, i)));
        }
    }
}

TEST_CASE("A2 composite Coxeter root vector is the plain commutator over q", "[psi]") {
    Fixture fx(Series::A, 2);
    int g = fx.rs.root_index({1, 1});
    auto e1 = AlgebraElement::letter_e(fx.cox_ctx, 0);
    auto e2 = AlgebraElement::letter_e(fx.cox_ctx, 1);
    // q^{-d_2 n_12} [e_1, e_2] with n_12 = 1, d_2 = 1
    QScalar qm1 = QScalar::u_pow(-fx.cox_ctx->D);
    CHECK(fx.crv.e[g].equals(qm1 * commutator(e1, e2)));
}

TEST_CASE("characters vanish on non-simple root vectors (all pi)", "[psi][rootsh]") {
    for (auto [s, l] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2}}) {
        std::vector<int> pi;
        for (int i = 0; i < l; ++i) pi.push_back(i);
        std::sort(pi.begin(), pi.end());
        do {
            Fixture fx(s, l, pi);
            Character chi = unit_character(l, true);
            Character chibar = unit_character(l, false);
            for (size_t g = 0; g < fx.rs.count(); ++g) {
                QScalar ce = character_value(chi, fx.crv.e[g]);
                QScalar cf = character_value(chibar, fx.crv.f[g]);
                if (fx.rs.is_simple(g)) {
                    CHECK_FALSE(ce.is_zero());
                    CHECK_FALSE(cf.is_zero());
                } else {
                    CHECK(ce.is_zero());
                    CHECK(cf.is_zero());
                }
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
}
