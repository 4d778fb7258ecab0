#pragma once

#include <array>
#include <string>

#include "zol/sentence.hpp"

namespace zol {

// Two-anchor witness pattern: b1 ~ a1, b1 ~ a2, b2 ~ a1, b2 !~ a2,
// b3 !~ a1, b3 ~ a2. Six literals, free variables.
Node psi1_fragment(const std::array<std::string, 5>& vars);

// Three-anchor witness pattern, twelve literals: each of b1..b4 realises one
// of the adjacency patterns (1,1,1), (1,1,0), (1,0,1), (0,1,1) over a1,a2,a3.
Node psi2_fragment(const std::array<std::string, 7>& vars);

// The depth-4 sentence over 33 variables. The prenex display is regrouped so
// each witness block is quantified inside the scope of exactly the variables
// its literals mention: x -> {a, b} -> three anchors each -> four witnesses
// each. The literal multiset is unchanged by the regrouping.
Sentence build_phi4();

// Depth-k sentence, k >= 5: a (k-3)-clique of roots, then for each root pair
// a ground vertex, with first-level, second-level and universal witnesses
// nested below. k = 4 is served by build_phi4 (the k >= 5 shape needs at
// least two roots).
Sentence build_phi_k(int k);

} // namespace zol
