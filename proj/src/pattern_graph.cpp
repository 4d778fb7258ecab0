#include "zol/pattern_graph.hpp"

#include <algorithm>

#include "json.hpp"

namespace zol {

PatternGraph PatternGraph::induced(uint64_t mask) const {
    mask &= full_mask();
    int m = __builtin_popcountll(mask);
    if (m == 0) throw std::invalid_argument("induced: empty vertex set");
    std::vector<int> verts;
    verts.reserve(m);
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1) verts.push_back(v);
    PatternGraph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adjacent(verts[i], verts[j])) out.add_edge(i, j);
    if (has_labels())
        for (int i = 0; i < m; ++i) out.set_label(i, labels_[verts[i]]);
    return out;
}

void PatternGraph::set_label(int v, const std::string& s) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(n_, "");
    for (int u = 0; u < n_; ++u)
        if (u != v && !labels_[u].empty() && labels_[u] == s)
            throw std::invalid_argument("PatternGraph: duplicate label '" + s + "'");
    labels_[v] = s;
}

int PatternGraph::vertex_by_label(const std::string& s) const {
    for (int v = 0; v < (int)labels_.size(); ++v)
        if (labels_[v] == s) return v;
    return -1;
}

std::string graph6_encode(const PatternGraph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    // Upper triangle column-major: columns j = 1..n-1, rows i = 0..j-1.
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(char((acc << (6 - bits)) + 63));
    return out;
}

PatternGraph graph6_decode(const std::string& text) {
    auto sextet = [&](size_t pos) -> int {
        if (pos >= text.size()) throw ParseError("graph6: truncated input", (int)pos);
        unsigned char c = text[pos];
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character", (int)pos);
        return c - 63;
    };
    size_t pos = 0;
    long long n;
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6: 8-byte vertex counts not supported", 1);
        n = ((long long)sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n < 1 || n > PatternGraph::kMaxVertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " out of range 1..64", 0);
    PatternGraph g((int)n);
    long long nbits = n * (n - 1) / 2;
    size_t expect = pos + (size_t)((nbits + 5) / 6);
    if (text.size() != expect)
        throw ParseError("graph6: wrong length, expected " + std::to_string(expect) +
                             " bytes, got " + std::to_string(text.size()),
                         (int)std::min(text.size(), expect));
    int acc = 0, bits = 0;
    size_t at = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = sextet(at++);
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) g.add_edge(i, j);
            --bits;
        }
    }
    return g;
}

std::string graph_to_json(const PatternGraph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.has_labels()) {
        auto labels = nlohmann::json::array();
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        j["labels"] = labels;
    }
    return j.dump();
}

PatternGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph json: ") + e.what(), (int)e.byte);
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph json: missing integer field 'n'", 0);
    PatternGraph g(j["n"].get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("graph json: edge must be a pair", 0);
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels")) {
        const auto& labels = j["labels"];
        if ((int)labels.size() != g.vertex_count())
            throw ParseError("graph json: labels length mismatch", 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            g.set_label(v, labels[v].get<std::string>());
    }
    return g;
}

PatternGraph parse_graph_auto(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw ParseError("empty graph input", 0);
    std::string body = text.substr(i);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    if (body[0] == '{') return graph_from_json(body);
    return graph6_decode(body);
}

PatternGraph make_complete(int n) {
    PatternGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

PatternGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n >= 3");
    PatternGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

PatternGraph make_path(int n) {
    PatternGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

PatternGraph make_empty(int n) { return PatternGraph(n); }

PatternGraph disjoint_union(const PatternGraph& a, const PatternGraph& b) {
    PatternGraph g(a.vertex_count() + b.vertex_count());
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = u + 1; v < a.vertex_count(); ++v)
            if (a.adjacent(u, v)) g.add_edge(u, v);
    int off = a.vertex_count();
    for (int u = 0; u < b.vertex_count(); ++u)
        for (int v = u + 1; v < b.vertex_count(); ++v)
            if (b.adjacent(u, v)) g.add_edge(off + u, off + v);
    return g;
}

PatternGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    PatternGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace zol
