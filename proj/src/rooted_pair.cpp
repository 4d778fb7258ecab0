#include "zol/rooted_pair.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"
#include "zol/host_graph.hpp"

namespace zol {

int RootedPair::root_edge_count() const {
    int e = 0;
    for (int u = 0; u < root_count; ++u)
        e += __builtin_popcountll(g.adjacency_mask(u) & roots_mask() & ~((2ull << u) - 1));
    return e;
}

RootedPair rooted_pair_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("rooted pair json: ") + e.what(), (int)e.byte);
    }
    if (!j.contains("graph") || !j.contains("roots"))
        throw ParseError("rooted pair json: need 'graph' and 'roots'", 0);
    PatternGraph g = j["graph"].is_string()
                         ? graph6_decode(j["graph"].get<std::string>())
                         : graph_from_json(j["graph"].dump());
    std::vector<int> roots = j["roots"].get<std::vector<int>>();
    // Relabel so roots come first, in the given order.
    int n = g.vertex_count();
    std::vector<int> perm;  // new index -> old index
    std::vector<bool> is_root(n, false);
    for (int r : roots) {
        if (r < 0 || r >= n || is_root[r])
            throw ParseError("rooted pair json: bad root index", 0);
        is_root[r] = true;
        perm.push_back(r);
    }
    for (int v = 0; v < n; ++v)
        if (!is_root[v]) perm.push_back(v);
    PatternGraph h(n);
    for (int i = 0; i < n; ++i)
        for (int j2 = i + 1; j2 < n; ++j2)
            if (g.adjacent(perm[i], perm[j2])) h.add_edge(i, j2);
    return RootedPair(std::move(h), (int)roots.size());
}

std::string rooted_pair_to_json(const RootedPair& p) {
    nlohmann::json j;
    j["graph"] = graph6_encode(p.g);
    std::vector<int> roots(p.root_count);
    std::iota(roots.begin(), roots.end(), 0);
    j["roots"] = roots;
    return j.dump();
}

Rational deficiency(const RootedPair& p, uint64_t subset_mask, const Rational& alpha) {
    uint64_t rm = p.roots_mask();
    if ((subset_mask & rm) != rm)
        throw std::invalid_argument("deficiency: subset must contain all roots");
    subset_mask &= p.g.full_mask();
    int v = __builtin_popcountll(subset_mask) - p.root_count;
    int e = 0;
    for (int u = 0; u < p.g.vertex_count(); ++u)
        if ((subset_mask >> u) & 1)
            e += __builtin_popcountll(p.g.adjacency_mask(u) & subset_mask & ~((2ull << u) - 1));
    e -= p.root_edge_count();
    return Rational(v) - alpha * Rational(e);
}

namespace {

// Walks all nonempty subsets of the non-root vertices in Gray-code order,
// maintaining v = |S\H| and e = e(S,H) incrementally. Visit returns false to
// stop early.
template <typename Visit>
void gray_walk(const RootedPair& p, int cap, Visit visit) {
    int m = p.extension_size();
    if (m < 1) throw std::invalid_argument("pair with v(G,H) = 0");
    if (m > cap)
        throw CapExceeded("instance too large: " + std::to_string(m) +
                          " non-root vertices exceeds cap " + std::to_string(cap));
    uint64_t rm = p.roots_mask();
    uint64_t cur = 0;  // bits of chosen non-roots, in graph vertex space
    long long v = 0, e = 0;
    for (uint64_t i = 1; i < (1ull << m); ++i) {
        int b = __builtin_ctzll(i);
        int vert = p.root_count + b;
        uint64_t bit = 1ull << vert;
        if (cur & bit) {
            cur ^= bit;
            e -= __builtin_popcountll(p.g.adjacency_mask(vert) & (rm | cur));
            --v;
        } else {
            e += __builtin_popcountll(p.g.adjacency_mask(vert) & (rm | cur));
            cur ^= bit;
            ++v;
        }
        if (!visit(cur, v, e)) return;
    }
}

} // namespace

SafetyResult is_alpha_safe(const RootedPair& p, const Rational& alpha, int non_root_cap) {
    if (!(alpha > Rational(0))) throw std::invalid_argument("is_alpha_safe: alpha must be > 0");
    SafetyResult res{true, 0, Rational(0)};
    long long num = alpha.num(), den = alpha.den();
    bool have = false;
    long long best_f_num = 0;  // f * den = v*den - num*e
    gray_walk(p, non_root_cap, [&](uint64_t cur, long long v, long long e) {
        long long f_num = v * den - num * e;
        if (f_num <= 0) {
            if (!have || f_num < best_f_num) {
                have = true;
                best_f_num = f_num;
                res.violator = cur | p.roots_mask();
            }
        }
        return true;
    });
    if (have) {
        res.safe = false;
        res.violator_deficiency = Rational(best_f_num, den);
    }
    return res;
}

SafetyThreshold safety_threshold(const RootedPair& p, int non_root_cap) {
    SafetyThreshold t{true, Rational(0), 0};
    long long bv = 0, be = 0;
    gray_walk(p, non_root_cap, [&](uint64_t cur, long long v, long long e) {
        if (e >= 1) {
            if (t.unbounded || v * be < bv * e) {
                t.unbounded = false;
                bv = v;
                be = e;
                t.witness = cur | p.roots_mask();
            }
        }
        return true;
    });
    if (!t.unbounded) t.value = Rational(bv, be);
    return t;
}

// ---------------------------------------------------------------------------

HostView host_view(const PatternGraph& g) {
    return HostView{
        g.vertex_count(),
        [](const void* o, int u, int v) {
            return static_cast<const PatternGraph*>(o)->adjacent(u, v);
        },
        nullptr, &g};
}

namespace {

struct StrictSearch {
    const HostView& host;
    const RootedPair& p;
    const std::vector<int>& root_image;
    std::vector<int> order;     // non-root pattern vertices, assignment order
    std::vector<int> image;     // pattern vertex -> host vertex or -1
    std::set<int> used;
    bool count_sets = false;
    std::set<std::vector<int>> sets;
    bool found = false;
    std::vector<int> first;

    StrictSearch(const HostView& h, const RootedPair& pair, const std::vector<int>& ri)
        : host(h), p(pair), root_image(ri) {
        if ((int)ri.size() != p.root_count)
            throw std::invalid_argument("strict extension: root image size mismatch");
        std::set<int> distinct(ri.begin(), ri.end());
        if ((int)distinct.size() != p.root_count)
            throw std::invalid_argument("strict extension: root image not distinct");
        image.assign(p.g.vertex_count(), -1);
        for (int i = 0; i < p.root_count; ++i) image[i] = ri[i];
        for (int v = p.root_count; v < p.g.vertex_count(); ++v) order.push_back(v);
        // Assign vertices with more already-known neighbors first.
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.g.degree(a) > p.g.degree(b);
        });
    }

    bool compatible(int pv, int hv) const {
        if (used.count(hv)) return false;
        for (int r = 0; r < p.root_count; ++r)
            if (hv == root_image[r]) return false;
        for (int q = 0; q < p.g.vertex_count(); ++q) {
            int hq = image[q];
            if (hq < 0 || q == pv) continue;
            // Root-root pairs are never checked (pv is a non-root here).
            if (p.g.adjacent(pv, q) != host.adjacent(hv, hq)) return false;
        }
        return true;
    }

    // Candidate host vertices for pv: neighbors of an assigned positive
    // constraint when neighbor lists exist, else every vertex.
    void candidates(int pv, std::vector<int>& out) const {
        out.clear();
        int anchor = -1;
        for (int q = 0; q < p.g.vertex_count(); ++q)
            if (image[q] >= 0 && p.g.adjacent(pv, q)) { anchor = image[q]; break; }
        if (anchor >= 0) {
            if (const std::vector<int>* nb = host.neighbors(anchor)) {
                out = *nb;
                return;
            }
        }
        out.resize(host.n);
        std::iota(out.begin(), out.end(), 0);
    }

    void run(size_t idx, std::vector<int>& cand_buf) {
        if (found && !count_sets) return;
        if (idx == order.size()) {
            if (!found) {
                first.clear();
                for (int v = p.root_count; v < p.g.vertex_count(); ++v)
                    first.push_back(image[v]);
                found = true;
            }
            if (count_sets) {
                std::vector<int> w(used.begin(), used.end());
                sets.insert(std::move(w));
            }
            return;
        }
        int pv = order[idx];
        std::vector<int> cands;
        candidates(pv, cands);
        for (int hv : cands) {
            if (!compatible(pv, hv)) continue;
            image[pv] = hv;
            used.insert(hv);
            run(idx + 1, cand_buf);
            used.erase(hv);
            image[pv] = -1;
            if (found && !count_sets) return;
        }
    }
};

} // namespace

std::optional<std::vector<int>> find_strict_extension(const HostView& host,
                                                      const RootedPair& p,
                                                      const std::vector<int>& root_image) {
    StrictSearch s(host, p, root_image);
    std::vector<int> buf;
    s.run(0, buf);
    if (!s.found) return std::nullopt;
    return s.first;
}

uint64_t count_strict_extensions(const HostView& host, const RootedPair& p,
                                 const std::vector<int>& root_image) {
    StrictSearch s(host, p, root_image);
    s.count_sets = true;
    std::vector<int> buf;
    s.run(0, buf);
    return s.sets.size();
}

// ---------------------------------------------------------------------------

namespace {

struct BitRows {
    int n, words;
    std::vector<uint64_t> bits;  // row-major

    explicit BitRows(const HostView& host) : n(host.n), words((host.n + 63) / 64) {
        if (n > 20000) throw CapExceeded("extension property: host too large for bitset rows");
        bits.assign((size_t)n * words, 0);
        bool filled = false;
        if (host.neighbors(0) != nullptr) {
            filled = true;
            for (int v = 0; v < n; ++v) {
                const std::vector<int>* nb = host.neighbors(v);
                for (int u : *nb) set(v, u);
            }
        }
        if (!filled) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (host.adjacent(u, v)) { set(u, v); set(v, u); }
        }
    }

    void set(int r, int c) { bits[(size_t)r * words + (c >> 6)] |= 1ull << (c & 63); }
    const uint64_t* row(int r) const { return &bits[(size_t)r * words]; }
};

struct ExtPropSearch {
    const BitRows& rows;
    int n, words, r;
    std::optional<ExtensionFailure> failure;
    std::vector<int> xs, ys;
    std::vector<uint64_t> level_masks;  // (r+1) rows of running intersections

    ExtPropSearch(const BitRows& rw, int rr) : rows(rw), n(rw.n), words(rw.words), r(rr) {
        level_masks.assign((size_t)(r + 1) * words, 0);
    }

    uint64_t* mask_at(int lvl) { return &level_masks[(size_t)lvl * words]; }

    bool mask_has_witness(const uint64_t* mask) {
        // Exclude the chosen vertices themselves.
        for (int w = 0; w < words; ++w) {
            uint64_t m = mask[w];
            if (!m) continue;
            for (int v : xs)
                if ((v >> 6) == w) m &= ~(1ull << (v & 63));
            for (int v : ys)
                if ((v >> 6) == w) m &= ~(1ull << (v & 63));
            if (m) return true;
        }
        return false;
    }

    // Choose xs first (increasing), then ys (increasing, disjoint). The mask
    // at level l holds AND of N(x) over xs and AND-NOT of N(y) over ys.
    void search(int a, int b, int next_min_x, int next_min_y) {
        if (failure) return;
        int level = (int)(xs.size() + ys.size());
        if ((int)xs.size() == a && (int)ys.size() == b) {
            if (!mask_has_witness(mask_at(level)))
                failure = ExtensionFailure{xs, ys};
            return;
        }
        const uint64_t* cur = mask_at(level);
        uint64_t* next = mask_at(level + 1);
        if ((int)xs.size() < a) {
            for (int v = next_min_x; v < n; ++v) {
                const uint64_t* rv = rows.row(v);
                for (int w = 0; w < words; ++w) next[w] = cur[w] & rv[w];
                xs.push_back(v);
                search(a, b, v + 1, 0);
                xs.pop_back();
                if (failure) return;
            }
        } else {
            for (int v = next_min_y; v < n; ++v) {
                if (std::find(xs.begin(), xs.end(), v) != xs.end()) continue;
                const uint64_t* rv = rows.row(v);
                for (int w = 0; w < words; ++w) next[w] = cur[w] & ~rv[w];
                ys.push_back(v);
                search(a, b, next_min_x, v + 1);
                ys.pop_back();
                if (failure) return;
            }
        }
    }

    void run() {
        for (int a = 0; a <= r && !failure; ++a)
            for (int b = 0; a + b <= r && !failure; ++b) {
                uint64_t* base = mask_at(0);
                for (int w = 0; w < words; ++w) base[w] = ~0ull;
                int spare = n & 63;
                if (spare) base[words - 1] = (1ull << spare) - 1;
                search(a, b, 0, 0);
            }
    }
};

} // namespace

std::optional<ExtensionFailure> full_extension_property_failure(const HostView& host, int r) {
    if (r < 1) throw std::invalid_argument("extension property: r >= 1");
    if (host.n <= r) throw std::invalid_argument("extension property: need host.n > r");
    BitRows rows(host);
    ExtPropSearch s(rows, r);
    s.run();
    return s.failure;
}

bool has_full_extension_property(const HostView& host, int r) {
    return !full_extension_property_failure(host, r).has_value();
}

} // namespace zol
