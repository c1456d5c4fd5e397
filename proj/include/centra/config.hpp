#pragma once

#include <cstddef>
#include <string_view>

namespace centra {

inline constexpr std::string_view kVersion = "1.0.0";

/// Size limits and switches shared by every analysis.
///
/// Rough cost curves, n = group order:
///   order_cap         table memory 2*n^2 bytes (4096 -> 32 MiB)
///   full_assoc_check  O(n^3) triple scan up to this order, O(n^2 * gens) above
///   subgroup_enum     O(s^2 * n) joins for s subgroups; s grows quickly for
///                     elementary abelian 2-groups, hence the low default
///   clique            branch and bound on |G/Z| - 1 vertices, exponential worst case
///   iso               backtracking over generator images, O(n^k) worst case
struct Limits {
  std::size_t order_cap = 4096;
  std::size_t full_assoc_check = 512;
  std::size_t subgroup_enum = 200;
  std::size_t clique = 512;
  std::size_t iso = 100;
  // Re-verify construction-guaranteed facts (associativity of family tables,
  // the order-49 exponent shortcut) with the slow generic routines.
  bool debug_checks = false;
};

}  // namespace centra
