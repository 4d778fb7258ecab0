#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zol {

// Thrown by graph6 / DSL / JSON readers; offset is a byte position into the input.
struct ParseError : std::runtime_error {
    int offset;
    ParseError(const std::string& msg, int off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Small exact graph, at most 64 vertices, one adjacency bitmask per vertex.
// Simple and undirected by construction; immutable once built (callers treat
// a finished graph as read-only, so sharing across threads is fine).
class PatternGraph {
public:
    static constexpr int kMaxVertices = 64;

    explicit PatternGraph(int n) : n_(n), adj_(n, 0) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("PatternGraph: vertex count must be in 1..64");
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int e = 0;
        for (int v = 0; v < n_; ++v) e += __builtin_popcountll(adj_[v]);
        return e / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("PatternGraph: self-loop");
        adj_[u] |= 1ull << v;
        adj_[v] |= 1ull << u;
    }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    uint64_t adjacency_mask(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    uint64_t full_mask() const {
        return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }

    // Induced subgraph on the vertices of `mask`, relabelled in increasing order.
    PatternGraph induced(uint64_t mask) const;

    // Optional vertex labels; unique when present.
    bool has_labels() const { return !labels_.empty(); }
    void set_label(int v, const std::string& s);
    const std::string& label(int v) const { return labels_.at(v); }
    int vertex_by_label(const std::string& s) const;   // -1 if absent

    // Identity comparison (same adjacency under the same numbering).
    bool operator==(const PatternGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<uint64_t> adj_;
    std::vector<std::string> labels_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("PatternGraph: vertex out of range");
    }
};

// graph6, standard bit layout. Encode/decode round-trip on canonical bytes.
std::string graph6_encode(const PatternGraph& g);
PatternGraph graph6_decode(const std::string& text);

// Labeled JSON form {"n":int,"edges":[[u,v],...],"labels":[...]}.
std::string graph_to_json(const PatternGraph& g);
PatternGraph graph_from_json(const std::string& text);

// Auto-detects JSON ('{') vs graph6 by first byte.
PatternGraph parse_graph_auto(const std::string& text);

// Construction helpers.
PatternGraph make_complete(int n);
PatternGraph make_cycle(int n);
PatternGraph make_path(int n);
PatternGraph make_empty(int n);
PatternGraph disjoint_union(const PatternGraph& a, const PatternGraph& b);
PatternGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

} // namespace zol
