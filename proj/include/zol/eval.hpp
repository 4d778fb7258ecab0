#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zol/pattern_graph.hpp"
#include "zol/sentence.hpp"

namespace zol {

// Three-valued outcome: budget exhaustion is distinct from false.
enum class Truth { False, True, Exhausted };

struct EvalOptions {
    uint64_t node_budget = 1'000'000'000;  // visited partial assignments
};

struct EvalStats {
    uint64_t nodes = 0;
};

// Constraint search: each Exists opens a vertex choice, And/Or drive
// branching, atoms prune as soon as their binders are assigned. Atom
// children of a conjunction are checked before descending into nested
// quantifier blocks (sound, incomplete pruning; leaves are checked fully).
Truth evaluate(const PatternGraph& g, const Sentence& s, EvalOptions opts = {},
               EvalStats* stats = nullptr);

// Fragment evaluation: `binding` pre-assigns the fragment's free variables.
Truth evaluate_fragment(const PatternGraph& g, const Node& fragment,
                        const std::map<std::string, int>& binding,
                        EvalOptions opts = {});

} // namespace zol
