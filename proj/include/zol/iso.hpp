#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zol/pattern_graph.hpp"

namespace zol {

// Injective maps pattern -> host preserving edges AND non-edges on the image.
// Backtracking with degree-sequence pruning.
uint64_t count_induced_embeddings(const PatternGraph& host, const PatternGraph& pattern);

// Order of the automorphism group (= induced embeddings of g into itself).
uint64_t automorphism_count(const PatternGraph& g);

// Unlabeled copies: vertex subsets of host inducing a graph isomorphic to
// pattern. Equals embeddings / aut(pattern), and the division is exact.
uint64_t count_induced_copies(const PatternGraph& host, const PatternGraph& pattern);

// One induced embedding extending `pins` (pattern vertex -> host vertex), or
// nullopt. Pins must map distinct pattern vertices to distinct host vertices.
std::optional<std::vector<int>> find_induced_embedding(
    const PatternGraph& host, const PatternGraph& pattern,
    const std::vector<std::pair<int, int>>& pins = {});

} // namespace zol
