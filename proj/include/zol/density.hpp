#pragma once

#include "zol/pattern_graph.hpp"
#include "zol/rational.hpp"

namespace zol {

enum class BalanceClass { StrictlyBalanced, Balanced, Unbalanced };

const char* to_string(BalanceClass c);

// rho(G) = e/v. A single vertex has density 0/1.
Rational density(const PatternGraph& g);

struct MaxDensityResult {
    Rational value;
    uint64_t witness;   // one maximizing vertex subset
};

// Max of rho(G[S]) over nonempty vertex subsets S. Edge-deleted subgraphs on
// the same vertex set never beat the induced one, so induced subsets suffice.
// Branch-and-bound over an include/exclude tree; the plain 2^n oracle lives
// in the tests.
MaxDensityResult max_density(const PatternGraph& g);

BalanceClass classify_balance(const PatternGraph& g);

} // namespace zol
