#include "zol/iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zol {

namespace {

// Shared backtracking core. Pattern vertices are assigned in a static order
// (pinned vertices first, then descending degree).
struct EmbedSearch {
    const PatternGraph& host;
    const PatternGraph& pattern;
    std::vector<int> order;
    std::vector<int> map;          // pattern vertex -> host vertex or -1
    uint64_t used = 0;
    uint64_t count = 0;
    bool stop_at_first = false;
    std::vector<int> first_map;    // captured when stop_at_first

    EmbedSearch(const PatternGraph& h, const PatternGraph& p) : host(h), pattern(p) {
        map.assign(p.vertex_count(), -1);
        order.resize(p.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return p.degree(a) > p.degree(b);
        });
    }

    void pin(int pv, int hv) {
        if (pv < 0 || pv >= pattern.vertex_count() || hv < 0 || hv >= host.vertex_count())
            throw std::invalid_argument("find_induced_embedding: pin out of range");
        if (map[pv] >= 0 || ((used >> hv) & 1))
            throw std::invalid_argument("find_induced_embedding: pins not injective");
        map[pv] = hv;
        used |= 1ull << hv;
    }

    void front_load_pins() {
        std::stable_partition(order.begin(), order.end(),
                              [&](int v) { return map[v] >= 0; });
    }

    // Edge/non-edge agreement against all already-assigned pattern vertices.
    bool compatible(int pv, int hv) const {
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int q = 0; q < pattern.vertex_count(); ++q) {
            int hq = map[q];
            if (hq < 0 || q == pv) continue;
            if (pattern.adjacent(pv, q) != host.adjacent(hv, hq)) return false;
        }
        return true;
    }

    bool pins_consistent() {
        for (int pv = 0; pv < pattern.vertex_count(); ++pv) {
            int hv = map[pv];
            if (hv < 0) continue;
            if (!compatible(pv, hv)) return false;
        }
        return true;
    }

    bool done() const { return stop_at_first && count > 0; }

    void run(size_t idx) {
        if (done()) return;
        if (idx == order.size()) {
            ++count;
            if (stop_at_first) first_map = map;
            return;
        }
        int pv = order[idx];
        if (map[pv] >= 0) { run(idx + 1); return; }
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if ((used >> hv) & 1) continue;
            if (!compatible(pv, hv)) continue;
            map[pv] = hv;
            used |= 1ull << hv;
            run(idx + 1);
            used &= ~(1ull << hv);
            map[pv] = -1;
            if (done()) return;
        }
    }
};

} // namespace

uint64_t count_induced_embeddings(const PatternGraph& host, const PatternGraph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    EmbedSearch s(host, pattern);
    s.run(0);
    return s.count;
}

uint64_t automorphism_count(const PatternGraph& g) {
    return count_induced_embeddings(g, g);
}

uint64_t count_induced_copies(const PatternGraph& host, const PatternGraph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    uint64_t emb = count_induced_embeddings(host, pattern);
    uint64_t aut = automorphism_count(pattern);
    return emb / aut;
}

std::optional<std::vector<int>> find_induced_embedding(
    const PatternGraph& host, const PatternGraph& pattern,
    const std::vector<std::pair<int, int>>& pins) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbedSearch s(host, pattern);
    s.stop_at_first = true;
    for (auto [pv, hv] : pins) s.pin(pv, hv);
    if (!s.pins_consistent()) return std::nullopt;
    s.front_load_pins();
    s.run(0);
    if (s.count == 0) return std::nullopt;
    return s.first_map;
}

} // namespace zol
