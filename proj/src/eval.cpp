#include "zol/eval.hpp"

#include <vector>

namespace zol {

namespace {

struct BudgetExhausted {};

struct Evaluator {
    const PatternGraph& g;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<int> env;  // vertex per binder level

    Evaluator(const PatternGraph& graph, uint64_t b) : g(graph), budget(b) {}

    bool atom_value(const Node& n) const {
        int u = env[n.slot1], v = env[n.slot2];
        return n.kind == NodeKind::Adj ? g.adjacent(u, v) : u == v;
    }

    bool literal_value(const Node& n) const {
        return n.kind == NodeKind::Not ? !atom_value(n.children[0]) : atom_value(n);
    }

    static bool is_literal(const Node& n) {
        return n.is_atom() || n.kind == NodeKind::Not;
    }

    bool eval(const Node& n) {
        switch (n.kind) {
            case NodeKind::Exists: {
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (++nodes > budget) throw BudgetExhausted{};
                    env.push_back(v);
                    bool ok = eval(n.children[0]);
                    env.pop_back();
                    if (ok) return true;
                }
                return false;
            }
            case NodeKind::And: {
                for (const auto& c : n.children)
                    if (is_literal(c) && !literal_value(c)) return false;
                for (const auto& c : n.children)
                    if (!is_literal(c) && !eval(c)) return false;
                return true;
            }
            case NodeKind::Or: {
                for (const auto& c : n.children)
                    if (is_literal(c) && literal_value(c)) return true;
                for (const auto& c : n.children)
                    if (!is_literal(c) && eval(c)) return true;
                return false;
            }
            case NodeKind::Not:
            case NodeKind::Adj:
            case NodeKind::Eq:
                return literal_value(n);
        }
        return false;
    }
};

} // namespace

Truth evaluate(const PatternGraph& g, const Sentence& s, EvalOptions opts, EvalStats* stats) {
    Evaluator ev(g, opts.node_budget);
    try {
        bool r = ev.eval(s.root);
        if (stats) stats->nodes = ev.nodes;
        return r ? Truth::True : Truth::False;
    } catch (const BudgetExhausted&) {
        if (stats) stats->nodes = ev.nodes;
        return Truth::Exhausted;
    }
}

Truth evaluate_fragment(const PatternGraph& g, const Node& fragment,
                        const std::map<std::string, int>& binding, EvalOptions opts) {
    std::vector<std::string> free_vars;
    free_vars.reserve(binding.size());
    for (const auto& [name, _] : binding) free_vars.push_back(name);
    Sentence s = make_sentence(fragment, free_vars);
    Evaluator ev(g, opts.node_budget);
    for (const auto& name : free_vars) ev.env.push_back(binding.at(name));
    try {
        return ev.eval(s.root) ? Truth::True : Truth::False;
    } catch (const BudgetExhausted&) {
        return Truth::Exhausted;
    }
}

} // namespace zol
