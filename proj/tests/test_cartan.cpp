#include "qtoda/cartan.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qtoda;

TEST_CASE("Cartan tables", "[cartan]") {
    CartanDatum a2 = build_cartan(Series::A, 2);
    CHECK(a2.a == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
    CHECK(a2.d == std::vector<long>{1, 1});

    CartanDatum a1 = build_cartan(Series::A, 1);
    CHECK(a1.a == std::vector<std::vector<long>>{{2}});
    CHECK(a1.d == std::vector<long>{1});

    // B2: labeling fixed to (long, short); validated against the b-symmetry
    // oracle over both candidate labelings
    CartanDatum b2 = build_cartan(Series::B, 2);
    CHECK(b2.d == std::vector<long>{2, 1});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(b2.b[i][j] == b2.b[j][i]);
    {
        // the other labeling is consistent too, with transposed a and reversed d
        CartanDatum alt;
        alt.series = Series::B;
        alt.rank = 2;
        alt.a = {{2, -2}, {-1, 2}};
        alt.d = {1, 2};
        alt.b = {{2, -2}, {-2, 4}};
        CHECK_NOTHROW(alt.validate());
    }

    CHECK_THROWS_AS(build_cartan(Series::G, 3), Error);
    CHECK_THROWS_AS(build_cartan(Series::D, 2), Error);
    CHECK_THROWS_AS(build_cartan(Series::E, 9), Error);

    for (auto [s, l] : std::vector<std::pair<Series, int>>{
             {Series::A, 3}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4},
             {Series::E, 6}, {Series::F, 4}, {Series::G, 2}})
        CHECK_NOTHROW(build_cartan(s, l));
}

TEST_CASE("root system closure", "[cartan]") {
    // A1: one root
    RootSystem a1 = build_root_system(build_cartan(Series::A, 1));
    CHECK(a1.count() == 1);

    // A2: alpha_1, alpha_2, alpha_1 + alpha_2
    RootSystem a2 = build_root_system(build_cartan(Series::A, 2));
    CHECK(a2.count() == 3);
    CHECK(a2.root_index({1, 1}) >= 0);

    // B2: count via the reflection-closure oracle
    RootSystem b2 = build_root_system(build_cartan(Series::B, 2));
    CHECK(b2.count() == 4);
    CHECK(b2.root_index({1, 1}) >= 0);
    CHECK(b2.root_index({1, 2}) >= 0);

    CHECK(build_root_system(build_cartan(Series::G, 2)).count() == 6);
    CHECK(build_root_system(build_cartan(Series::A, 4)).count() == 10);
    CHECK(build_root_system(build_cartan(Series::F, 4)).count() == 24);
}

TEST_CASE("simple reflections permute the other positive roots", "[cartan]") {
    for (auto [s, l] : std::vector<std::pair<Series, int>>{
             {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::B, 3}, {Series::G, 2}}) {
        RootSystem rs = build_root_system(build_cartan(s, l));
        for (int i = 0; i < rs.rank(); ++i) {
            size_t alpha_i = rs.simple_index(i);
            for (size_t k = 0; k < rs.count(); ++k) {
                if (k == alpha_i) continue;
                auto img = rs.reflect(i, rs.positive_roots[k]);
                CHECK(rs.root_index(img) >= 0);
            }
        }
    }
}

TEST_CASE("rho is half the sum of positive roots", "[cartan]") {
    RootSystem a2 = build_root_system(build_cartan(Series::A, 2));
    CHECK(a2.rho == RatVec{Rat(1), Rat(1)});
    RootSystem a1 = build_root_system(build_cartan(Series::A, 1));
    CHECK(a1.rho == RatVec{Rat(1, 2)});
    RootSystem b2 = build_root_system(build_cartan(Series::B, 2));
    CHECK(b2.rho == RatVec{Rat(3, 2), Rat(2)});
    // rho(H_i) = 1 for every i, i.e. (rho, alpha_i) = d_i
    for (int i = 0; i < 2; ++i) {
        RatVec alpha(2, Rat(0));
        alpha[i] = 1;
        CHECK(b2.pairing(b2.rho, alpha) == Rat(b2.cartan.d[i]));
    }
}
