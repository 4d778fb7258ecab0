#include "zol/density.hpp"

#include <algorithm>
#include <numeric>

namespace zol {

const char* to_string(BalanceClass c) {
    switch (c) {
        case BalanceClass::StrictlyBalanced: return "strictly-balanced";
        case BalanceClass::Balanced: return "balanced";
        case BalanceClass::Unbalanced: return "unbalanced";
    }
    return "?";
}

Rational density(const PatternGraph& g) {
    return Rational(g.edge_count(), g.vertex_count());
}

namespace {

struct Searcher {
    const PatternGraph& g;
    int n;
    std::vector<int> order;            // vertices, high degree first
    std::vector<int> suffix_internal;  // edges among order[i..]
    uint64_t forbidden;                // subsets must avoid these vertices

    long long best_e = 0, best_v = 1;  // best ratio so far (0/1)
    uint64_t best_mask = 0;
    bool found = false;

    explicit Searcher(const PatternGraph& graph, uint64_t forbid)
        : g(graph), n(graph.vertex_count()), forbidden(forbid) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.degree(a) > g.degree(b); });
        order.erase(std::remove_if(order.begin(), order.end(),
                                   [&](int v) { return (forbidden >> v) & 1; }),
                    order.end());
        suffix_internal.assign(order.size() + 1, 0);
        for (int i = (int)order.size() - 1; i >= 0; --i) {
            uint64_t later = 0;
            for (size_t j = i + 1; j < order.size(); ++j) later |= 1ull << order[j];
            suffix_internal[i] = suffix_internal[i + 1] +
                __builtin_popcountll(g.adjacency_mask(order[i]) & later);
        }
    }

    void consider(uint64_t mask, int v, int e) {
        if (v == 0) return;
        if (!found || (long long)e * best_v > best_e * v) {
            found = true;
            best_e = e;
            best_v = v;
            best_mask = mask;
        }
    }

    // e(S') <= e + cross + internal and v(S') >= v for any extension of the
    // current subset by suffix vertices, so (e+cross+internal)/v bounds the
    // achievable ratio once v >= 1.
    void recurse(size_t idx, uint64_t mask, int v, int e) {
        consider(mask, v, e);
        if (idx == order.size()) return;
        if (v >= 1) {
            long long cross = 0;
            for (size_t j = idx; j < order.size(); ++j)
                cross += __builtin_popcountll(g.adjacency_mask(order[j]) & mask);
            long long ub = e + cross + suffix_internal[idx];
            if (found && ub * best_v <= best_e * (long long)v) return;
        }
        int u = order[idx];
        int added = __builtin_popcountll(g.adjacency_mask(u) & mask);
        recurse(idx + 1, mask | (1ull << u), v + 1, e + added);
        recurse(idx + 1, mask, v, e);
    }
};

} // namespace

MaxDensityResult max_density(const PatternGraph& g) {
    Searcher s(g, 0);
    s.recurse(0, 0, 0, 0);
    return {Rational(s.best_e, s.best_v), s.best_mask};
}

BalanceClass classify_balance(const PatternGraph& g) {
    Rational rho = density(g);
    int n = g.vertex_count();
    // Every proper nonempty subset omits some vertex, so the max over proper
    // subsets is the max over the n single-vertex deletions.
    bool any = false;
    Rational best(0);
    for (int v = 0; v < n; ++v) {
        Searcher s(g, 1ull << v);
        s.recurse(0, 0, 0, 0);
        if (s.found) {
            Rational r(s.best_e, s.best_v);
            if (!any || r > best) best = r;
            any = true;
        }
    }
    if (!any) return BalanceClass::StrictlyBalanced;  // single vertex
    if (best < rho) return BalanceClass::StrictlyBalanced;
    if (best == rho) return BalanceClass::Balanced;
    return BalanceClass::Unbalanced;
}

} // namespace zol
