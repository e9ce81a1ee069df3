#pragma once

#include "qtoda/cartan.hpp"

#include <functional>

namespace qtoda {

/// A normal ordering of the positive roots: order[p] is the index (into
/// RootSystem::positive_roots) of the root at position p. Every sum
/// gamma = alpha + beta must sit strictly between its summands.
struct NormalOrdering {
    std::vector<int> order;
    std::vector<int> position; // inverse: position[root index] = p

    size_t size() const { return order.size(); }
};

namespace detail {

struct AdditiveTriple {
    int a, b, g; // root indices with root[g] = root[a] + root[b], a < b
};

inline std::vector<AdditiveTriple> additive_triples(const RootSystem& rs) {
    std::vector<AdditiveTriple> ts;
    int n = static_cast<int>(rs.count());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<long> sum = rs.positive_roots[a];
            for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots[b][i];
            int g = rs.root_index(sum);
            if (g >= 0) ts.push_back({a, b, g});
        }
    return ts;
}

} // namespace detail

/// Check the normality predicate over all additive triples.
inline bool is_normal_ordering(const RootSystem& rs, const std::vector<int>& order) {
    std::vector<int> pos(rs.count());
    for (size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
    for (const auto& t : detail::additive_triples(rs)) {
        int pa = pos[t.a], pb = pos[t.b], pg = pos[t.g];
        if (!((pa < pg && pg < pb) || (pb < pg && pg < pa))) return false;
    }
    return true;
}

/// Check that simple roots occur in the relative order pi(1), ..., pi(l).
inline bool is_pi_compatible(const RootSystem& rs, const std::vector<int>& order, const std::vector<int>& pi) {
    std::vector<size_t> want;
    for (int k : pi) want.push_back(rs.simple_index(k));
    size_t next = 0;
    for (int idx : order) {
        if (!rs.is_simple(idx)) continue;
        if (static_cast<size_t>(idx) != want[next]) return false;
        ++next;
    }
    return next == want.size();
}

/// Backtracking search for the lexicographically least pi-compatible normal
/// ordering (least as a sequence of canonical root indices). pi is a 0-based
/// permutation of the simple-root labels. Throws when the rank exceeds the
/// search bound or the node budget runs out.
inline NormalOrdering find_normal_ordering(const RootSystem& rs, const std::vector<int>& pi,
                                           int rank_bound = 4, long node_budget = 50'000'000) {
    if (rs.rank() > rank_bound)
        throw Error("normal ordering search: rank " + std::to_string(rs.rank()) +
                    " exceeds configured bound " + std::to_string(rank_bound));
    if (pi.size() != static_cast<size_t>(rs.rank())) throw Error("pi has wrong size");

    int n = static_cast<int>(rs.count());
    auto triples = detail::additive_triples(rs);
    // triples touching each root, for incremental checks
    std::vector<std::vector<int>> touching(n);
    for (size_t t = 0; t < triples.size(); ++t) {
        touching[triples[t].a].push_back(static_cast<int>(t));
        touching[triples[t].b].push_back(static_cast<int>(t));
        touching[triples[t].g].push_back(static_cast<int>(t));
    }
    std::vector<int> simple_seq;
    for (int k : pi) simple_seq.push_back(static_cast<int>(rs.simple_index(k)));

    std::vector<int> pos(n, -1);
    std::vector<int> order;
    long nodes = 0;

    // Feasibility of the prefix after placing root r: for each triple
    // involving r, the betweenness constraint must still be satisfiable
    // given that unplaced roots come strictly later.
    auto ok = [&](int r) {
        for (int t : touching[r]) {
            const auto& tr = triples[t];
            int pa = pos[tr.a], pb = pos[tr.b], pg = pos[tr.g];
            if (pg >= 0) {
                int placed_before = 0;
                if (pa >= 0 && pa < pg) ++placed_before;
                if (pb >= 0 && pb < pg) ++placed_before;
                // exactly one summand before gamma, the other after
                if (placed_before != 1) return false;
            } else {
                // gamma unplaced: it will come after; both summands placed
                // would force gamma after both, violating betweenness
                if (pa >= 0 && pb >= 0) return false;
            }
        }
        return true;
    };

    std::function<bool()> dfs = [&]() -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        if (++nodes > node_budget)
            throw Error("normal ordering search: node budget exhausted for " + rs.cartan.name());
        int simples_placed = 0;
        for (int idx : order)
            if (rs.is_simple(idx)) ++simples_placed;
        for (int r = 0; r < n; ++r) {
            if (pos[r] >= 0) continue;
            if (rs.is_simple(r)) {
                if (simples_placed >= rs.rank() || r != simple_seq[simples_placed]) continue;
            }
            pos[r] = static_cast<int>(order.size());
            order.push_back(r);
            if (ok(r) && dfs()) return true;
            order.pop_back();
            pos[r] = -1;
        }
        return false;
    };

    if (!dfs())
        throw Error("normal ordering search: no pi-compatible normal ordering found for " + rs.cartan.name());

    NormalOrdering res;
    res.order = order;
    res.position.assign(n, -1);
    for (size_t p = 0; p < order.size(); ++p) res.position[order[p]] = static_cast<int>(p);
    return res;
}

} // namespace qtoda
