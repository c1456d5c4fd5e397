#pragma once

#include <cstddef>
#include <vector>

#include "centra/element_set.hpp"

namespace centra::detail {

/// Exact maximum clique by branch and bound with a greedy colouring bound
/// (Tomita style). Vertices are 0..n-1 and are expanded in ascending order,
/// so the search is reproducible. `adjacency[v]` must not contain v.
std::size_t max_clique_size(const std::vector<ElementSet>& adjacency);

}  // namespace centra::detail
