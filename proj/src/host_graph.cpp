#include "zol/host_graph.hpp"

#include <cmath>

namespace zol {

HostGraph HostGraph::from_pattern(const PatternGraph& g) {
    HostGraph h(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) h.add_edge(u, v);
    h.sort_adjacency();
    return h;
}

HostView host_view(const HostGraph& g) {
    return HostView{
        g.n,
        [](const void* o, int u, int v) {
            return static_cast<const HostGraph*>(o)->adjacent(u, v);
        },
        [](const void* o, int v) -> const std::vector<int>* {
            return &static_cast<const HostGraph*>(o)->adj[v];
        },
        &g};
}

uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

HostGraph sample_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_gnp: n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p in [0,1]");
    HostGraph g(n);
    uint64_t total = (uint64_t)n * (n - 1) / 2;
    CounterRng rng(seed);
    auto pair_of = [&](uint64_t idx) {
        // Lexicographic over u < v: offset(u) = u*n - u*(u+2+? ) — walk rows.
        // Rows shrink, so locate u by subtraction (n is desk-scale; the loop
        // is fine because we only call this O(edges) times).
        uint64_t u = 0, row = n - 1;
        while (idx >= row) { idx -= row; ++u; --row; }
        return std::pair<int, int>((int)u, (int)(u + 1 + idx));
    };
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    } else if (p > 0.0) {
        // Geometric skipping: jump log(1-u)/log(1-p) pairs at a time.
        double log1mp = std::log1p(-p);
        uint64_t idx = 0;
        while (true) {
            double u = rng.next_unit();
            double skip = std::floor(std::log1p(-u) / log1mp);
            if (skip >= (double)total) break;
            idx += (uint64_t)skip;
            if (idx >= total) break;
            auto [a, b] = pair_of(idx);
            g.add_edge(a, b);
            ++idx;
            if (idx >= total) break;
        }
    }
    g.sort_adjacency();
    return g;
}

} // namespace zol
