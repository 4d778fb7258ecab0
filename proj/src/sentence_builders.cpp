#include "zol/sentence_builders.hpp"

#include <set>
#include <stdexcept>

namespace zol {

namespace {

void require_distinct(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name '" + n + "'");
}

} // namespace

Node psi1_fragment(const std::array<std::string, 5>& v) {
    require_distinct({v.begin(), v.end()});
    const auto& [a1, a2, b1, b2, b3] = v;
    return conj({adj(b1, a1), adj(b1, a2),
                 adj(b2, a1), neg(adj(b2, a2)),
                 neg(adj(b3, a1)), adj(b3, a2)});
}

Node psi2_fragment(const std::array<std::string, 7>& v) {
    require_distinct({v.begin(), v.end()});
    const auto& [a1, a2, a3, b1, b2, b3, b4] = v;
    return conj({adj(b1, a1), adj(b1, a2), adj(b1, a3),
                 adj(b2, a1), adj(b2, a2), neg(adj(b2, a3)),
                 adj(b3, a1), neg(adj(b3, a2)), adj(b3, a3),
                 neg(adj(b4, a1)), adj(b4, a2), adj(b4, a3)});
}

namespace {

// One anchor block: E t; [t's two psi1 literals] & for each of the four
// witness patterns a nested E w; [w's three psi2 literals].
Node anchor_block(const std::string& x, const std::string& s, const std::string& t,
                  Node lit1, Node lit2,
                  const std::array<std::string, 4>& witnesses) {
    auto wit = [&](const std::string& w, bool to_x, bool to_s, bool to_t) {
        std::vector<Node> lits;
        lits.push_back(to_x ? adj(w, x) : neg(adj(w, x)));
        lits.push_back(to_s ? adj(w, s) : neg(adj(w, s)));
        lits.push_back(to_t ? adj(w, t) : neg(adj(w, t)));
        return exists(w, conj(std::move(lits)));
    };
    std::vector<Node> body;
    body.push_back(std::move(lit1));
    body.push_back(std::move(lit2));
    body.push_back(wit(witnesses[0], true, true, true));
    body.push_back(wit(witnesses[1], true, true, false));
    body.push_back(wit(witnesses[2], true, false, true));
    body.push_back(wit(witnesses[3], false, true, true));
    return exists(t, conj(std::move(body)));
}

// The a-side (first literal x ~ s) or b-side (x !~ s) half of phi.
Node side_block(const std::string& x, const std::string& s, bool x_adj_s,
                const std::string& prefix) {
    auto nm = [&](const std::string& suffix) { return prefix + suffix; };
    std::vector<Node> body;
    body.push_back(x_adj_s ? adj(x, s) : neg(adj(x, s)));
    // psi1(x, s, t11, t10, t01) split across the anchor blocks below.
    body.push_back(anchor_block(x, s, nm("_1_1"), adj(nm("_1_1"), x), adj(nm("_1_1"), s),
                                {nm("_1_1__1_1"), nm("p_1_1"), nm("_1_1__1_0"), nm("_1_1__0_1")}));
    body.push_back(anchor_block(x, s, nm("_1_0"), adj(nm("_1_0"), x), neg(adj(nm("_1_0"), s)),
                                {nm("_1_0__1_1"), nm("p_1_0"), nm("_1_0__1_0"), nm("_1_0__0_1")}));
    body.push_back(anchor_block(x, s, nm("_0_1"), neg(adj(nm("_0_1"), x)), adj(nm("_0_1"), s),
                                {nm("_0_1__1_1"), nm("p_0_1"), nm("_0_1__1_0"), nm("_0_1__0_1")}));
    return exists(s, conj(std::move(body)));
}

} // namespace

Sentence build_phi4() {
    Node root = exists("x", conj({side_block("x", "a", true, "a"),
                                  side_block("x", "b", false, "b")}));
    return make_sentence(std::move(root));
}

Sentence build_phi_k(int k) {
    if (k < 5) throw std::invalid_argument("build_phi_k: k >= 5 (use build_phi4 for k = 4)");
    int r = k - 3;
    auto root_name = [](int i) { return "a" + std::to_string(i + 1); };
    auto ground_name = [](int i, int j) {
        return "v_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    };

    // Innermost: all ground blocks, conjoined.
    std::vector<Node> ground_blocks;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            std::string vg = ground_name(i, j);
            std::vector<Node> gbody;
            for (int l = 0; l < r; ++l) {
                if (l == i || l == j) gbody.push_back(neg(adj(vg, root_name(l))));
                else gbody.push_back(adj(vg, root_name(l)));
            }
            for (int l = 0; l < r; ++l) {
                std::string vf = vg + "_" + std::to_string(l + 1);
                std::vector<Node> fbody;
                fbody.push_back(adj(vf, vg));
                for (int t = 0; t < r; ++t) {
                    if (t == l) fbody.push_back(neg(adj(vf, root_name(t))));
                    else fbody.push_back(adj(vf, root_name(t)));
                }
                for (int m = 0; m < r; ++m) {
                    std::string vs = vf + "_" + std::to_string(m + 1);
                    std::vector<Node> sbody;
                    sbody.push_back(adj(vs, vg));
                    sbody.push_back(adj(vs, vf));
                    for (int t = 0; t < r; ++t) {
                        if (t == m) sbody.push_back(neg(adj(vs, root_name(t))));
                        else sbody.push_back(adj(vs, root_name(t)));
                    }
                    fbody.push_back(exists(vs, conj(std::move(sbody))));
                }
                std::string w = "w_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                "_" + std::to_string(l + 1);
                std::vector<Node> wbody;
                wbody.push_back(adj(w, vg));
                wbody.push_back(adj(w, vf));
                for (int t = 0; t < r; ++t) wbody.push_back(adj(w, root_name(t)));
                fbody.push_back(exists(w, conj(std::move(wbody))));
                gbody.push_back(exists(vf, conj(std::move(fbody))));
            }
            ground_blocks.push_back(exists(vg, conj(std::move(gbody))));
        }
    }

    // Roots chain: E a1; E a2; [a2 ~ a1] & ... & E a_{k-3}; [clique literals] & grounds.
    Node body = conj(std::move(ground_blocks));
    for (int i = r - 1; i >= 0; --i) {
        std::vector<Node> level;
        for (int j = 0; j < i; ++j) level.push_back(adj(root_name(i), root_name(j)));
        level.push_back(std::move(body));
        body = exists(root_name(i), conj(std::move(level)));
    }
    return make_sentence(std::move(body));
}

} // namespace zol
