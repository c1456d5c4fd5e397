#pragma once

#include <cstddef>
#include <string_view>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

enum class FamilyKind {
  cyclic,
  dihedral,            // param = total order (D14 has order 14)
  dicyclic,            // param = total order, divisible by 4
  symmetric,           // param = degree n
  alternating,         // param = degree n
  heisenberg,          // param = odd prime p, order p^3
  elementary_abelian,  // param = order, a prime power p^k
};

std::string_view to_string(FamilyKind kind);

/// Builds a member of one of the standard families. Elements are numbered
/// so that the identity is always index 0. Throws InvalidParam or ExceedsCap.
FiniteGroup make_family(FamilyKind kind, std::size_t param, const Limits& limits = {});

/// C_n x| C_m on pairs (a, t) with (a1,t1)(a2,t2) = (a1 + k^t1 * a2, t1 + t2).
/// Requires gcd(k, n) = 1 and k^m = 1 (mod n), otherwise InvalidTwist.
FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k,
                              const Limits& limits = {});

/// Componentwise product; element (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

bool is_prime(std::size_t n) noexcept;

}  // namespace centra
