#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zol/pattern_graph.hpp"
#include "zol/rational.hpp"

namespace zol {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair (G, H): vertices 0..root_count-1 of `g` form H (the roots), the
// rest are the extension. v(G,H) = n - root_count, e(G,H) = e(G) - e(H).
struct RootedPair {
    PatternGraph g;
    int root_count;

    RootedPair(PatternGraph graph, int roots) : g(std::move(graph)), root_count(roots) {
        if (roots < 1 || roots > g.vertex_count())
            throw std::invalid_argument("RootedPair: root count out of range");
    }

    int extension_size() const { return g.vertex_count() - root_count; }
    uint64_t roots_mask() const { return (root_count == 64) ? ~0ull : (1ull << root_count) - 1; }
    int root_edge_count() const;
    int extension_edge_count() const { return g.edge_count() - root_edge_count(); }
};

// JSON form {"graph": <graph6 string or embedded json>, "roots": [indices]}.
// Roots may be arbitrary distinct indices; vertices are relabelled so the
// roots come first (in the given order).
RootedPair rooted_pair_from_json(const std::string& text);
std::string rooted_pair_to_json(const RootedPair& p);

// f_alpha(S, H) = v(S,H) - alpha * e(S,H) for S given as a vertex mask that
// must contain all roots.
Rational deficiency(const RootedPair& p, uint64_t subset_mask, const Rational& alpha);

struct SafetyResult {
    bool safe;
    uint64_t violator = 0;        // subset mask with minimum deficiency, when unsafe
    Rational violator_deficiency;
};

inline constexpr int kDefaultSafetyCap = 26;  // non-root vertices

// (G,H) is alpha-safe iff f_alpha(S,H) > 0 for every H < S <= G. Exhaustive
// Gray-code walk over non-root subsets with incremental edge counts.
SafetyResult is_alpha_safe(const RootedPair& p, const Rational& alpha,
                           int non_root_cap = kDefaultSafetyCap);

struct SafetyThreshold {
    bool unbounded;      // no intermediate extension adds an edge
    Rational value;      // min v(S,H)/e(S,H) over edged extensions
    uint64_t witness;    // a minimizing subset mask
};

// sup of safe alpha. Contract: is_alpha_safe(p, a) iff a < threshold.
SafetyThreshold safety_threshold(const RootedPair& p, int non_root_cap = kDefaultSafetyCap);

// ---------------------------------------------------------------------------
// Strict extensions in a host. Adjacency is read through a host adapter so
// PatternGraph and HostGraph both work.

struct HostView {
    int n;
    // adjacency test
    bool (*adj)(const void*, int, int);
    // neighbor list access (may be null; then candidates are scanned)
    const std::vector<int>* (*nbrs)(const void*, int);
    const void* obj;

    bool adjacent(int u, int v) const { return adj(obj, u, v); }
    const std::vector<int>* neighbors(int v) const { return nbrs ? nbrs(obj, v) : nullptr; }
};

HostView host_view(const PatternGraph& g);
struct HostGraph;
HostView host_view(const HostGraph& g);

// Image of the non-root vertices such that exactly the E(G)\E(H) edges and
// non-edges hold on new<->new and new<->root pairs; edges among the roots
// are unconstrained. Returns host vertices for pattern vertices
// root_count..n-1, or nullopt.
std::optional<std::vector<int>> find_strict_extension(const HostView& host,
                                                      const RootedPair& p,
                                                      const std::vector<int>& root_image);

// Number of (l-k)-subsets W admitting an enumeration that forms a strict
// extension (subsets, not ordered tuples).
uint64_t count_strict_extensions(const HostView& host, const RootedPair& p,
                                 const std::vector<int>& root_image);

// ---------------------------------------------------------------------------
// Full level-r extension property (Alice's restaurant property).

struct ExtensionFailure {
    std::vector<int> want_adjacent;      // x_1..x_a
    std::vector<int> want_nonadjacent;   // y_1..y_b
};

// nullopt when the property holds; otherwise one failing (a,b)-demand.
std::optional<ExtensionFailure> full_extension_property_failure(const HostView& host, int r);

bool has_full_extension_property(const HostView& host, int r);

} // namespace zol
