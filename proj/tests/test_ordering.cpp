#include "qtoda/ordering.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <algorithm>

using namespace qtoda;

namespace {

// independent normality predicate, written directly from the definition
bool oracle_normal(const RootSystem& rs, const std::vector<int>& order) {
    std::vector<int> pos(rs.count());
    for (size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
    for (size_t a = 0; a < rs.count(); ++a)
        for (size_t b = 0; b < rs.count(); ++b) {
            if (a == b) continue;
            std::vector<long> sum = rs.positive_roots[a];
            for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots[b][i];
            int g = rs.root_index(sum);
            if (g < 0) continue;
            int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
            if (!(lo < pos[g] && pos[g] < hi)) return false;
        }
    return true;
}

std::vector<int> identity_pi(int l) {
    std::vector<int> pi(l);
    for (int i = 0; i < l; ++i) pi[i] = i;
    return pi;
}

} // namespace

TEST_CASE("A2 ordering is alpha_1 < alpha_1+alpha_2 < alpha_2", "[ordering]") {
    RootSystem rs = build_root_system(build_cartan(Series::A, 2));
    NormalOrdering ord = find_normal_ordering(rs, identity_pi(2));
    std::vector<std::vector<long>> seq;
    for (int idx : ord.order) seq.push_back(rs.positive_roots[idx]);
    CHECK(seq == std::vector<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}});

    // exhaustive oracle over all 3! orderings: ours is the lexicographically
    // least of the valid pi-compatible ones
    std::vector<int> perm = {0, 1, 2};
    std::vector<std::vector<int>> valid;
    std::sort(perm.begin(), perm.end());
    do {
        if (oracle_normal(rs, perm) && is_pi_compatible(rs, perm, identity_pi(2))) valid.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(!valid.empty());
    CHECK(ord.order == *std::min_element(valid.begin(), valid.end()));
}

TEST_CASE("A1 ordering is trivial", "[ordering]") {
    RootSystem rs = build_root_system(build_cartan(Series::A, 1));
    NormalOrdering ord = find_normal_ordering(rs, identity_pi(1));
    CHECK(ord.order == std::vector<int>{0});
}

TEST_CASE("B2 ordering places both mixed roots between the simples", "[ordering]") {
    RootSystem rs = build_root_system(build_cartan(Series::B, 2));
    NormalOrdering ord = find_normal_ordering(rs, identity_pi(2));
    REQUIRE(ord.order.size() == 4);
    int p1 = ord.position[rs.simple_index(0)];
    int p2 = ord.position[rs.simple_index(1)];
    CHECK(p1 < p2);
    for (size_t k = 0; k < rs.count(); ++k)
        if (!rs.is_simple(k)) {
            CHECK(ord.position[k] > p1);
            CHECK(ord.position[k] < p2);
        }

    // exhaustive oracle over 4! orderings
    std::vector<int> perm = {0, 1, 2, 3};
    std::vector<std::vector<int>> valid;
    do {
        if (oracle_normal(rs, perm) && is_pi_compatible(rs, perm, identity_pi(2))) valid.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(!valid.empty());
    CHECK(ord.order == *std::min_element(valid.begin(), valid.end()));
}

TEST_CASE("normality holds for every type/rank <= 3 and every pi", "[ordering]") {
    for (auto [s, l] : std::vector<std::pair<Series, int>>{
             {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::B, 3},
             {Series::C, 3}, {Series::G, 2}}) {
        RootSystem rs = build_root_system(build_cartan(s, l));
        std::vector<int> pi = identity_pi(l);
        std::sort(pi.begin(), pi.end());
        do {
            NormalOrdering ord = find_normal_ordering(rs, pi);
            CHECK(oracle_normal(rs, ord.order));
            CHECK(is_pi_compatible(rs, ord.order, pi));
            CHECK(is_normal_ordering(rs, ord.order));
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
}

TEST_CASE("rank bound is enforced, not silently ignored", "[ordering]") {
    RootSystem rs = build_root_system(build_cartan(Series::A, 3));
    CHECK_THROWS_AS(find_normal_ordering(rs, identity_pi(3), 2), Error);
}
