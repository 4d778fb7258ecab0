#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "zol/pattern_graph.hpp"
#include "zol/rooted_pair.hpp"

namespace zol {

// Large sampled graph: sorted adjacency lists plus a hashed edge set.
struct HostGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::unordered_set<uint64_t> edge_set;

    explicit HostGraph(int vertices) : n(vertices), adj(vertices) {}

    static uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (uint64_t)u << 32 | (uint32_t)v;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("HostGraph: self-loop");
        if (!edge_set.insert(key(u, v)).second) return;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    void sort_adjacency() {
        for (auto& row : adj) std::sort(row.begin(), row.end());
    }

    bool adjacent(int u, int v) const { return edge_set.count(key(u, v)) != 0; }
    int vertex_count() const { return n; }
    size_t edge_count() const { return edge_set.size(); }

    static HostGraph from_pattern(const PatternGraph& g);
};

HostView host_view(const HostGraph& g);

// SplitMix64 finalizer. The experiment RNG is counter-based: output i of a
// stream seeded with s is mix64(s + (i+1) * 0x9E3779B97F4A7C15), so any
// output can be computed independently of the others.
uint64_t mix64(uint64_t x);

struct CounterRng {
    uint64_t seed;
    uint64_t ctr = 0;

    explicit CounterRng(uint64_t s) : seed(s) {}

    uint64_t next() { return mix64(seed + (++ctr) * 0x9E3779B97F4A7C15ull); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return (next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, m) without modulo bias worth caring about at desk scale.
    uint64_t next_below(uint64_t m) { return next() % m; }
};

// Stable per-trial seed derivation; trial subsets are order-independent.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return mix64(master ^ mix64(index + 0x51ed2701a2b9d4e5ull));
}

// G(n,p): each pair present independently with probability p. Deterministic
// under `seed`. Small p uses geometric skipping over the C(n,2) pair space,
// expected O(edges) draws.
HostGraph sample_gnp(int n, double p, uint64_t seed);

} // namespace zol
