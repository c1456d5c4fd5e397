#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

/// Smallest subgroup containing `gens`.
Subgroup generate(const FiniteGroup& g, std::span<const Element> gens);

Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup center(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& n);

struct QuotientResult {
  FiniteGroup group;
  GroupHom projection;
};

/// G/N on canonical coset representatives: coset i of the result is
/// represented by its smallest element index. Throws NotNormal naming the
/// first g with gNg^-1 != N, or NotSubgroup if N belongs to another group.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n, const std::string& label = "N");

/// Every subgroup, sorted by (size, bits). Throws ExceedsThreshold above
/// `limits.subgroup_enum`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Commutator subgroup of H, i.e. the subgroup generated by all [a,b], a,b in H.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h);

/// G, G', G'', ... stopping at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

std::map<std::size_t, std::size_t> element_order_histogram(const FiniteGroup& g);
std::size_t exponent(const FiniteGroup& g);

/// Returns p if |G| = p^k for a prime p and k >= 1, else 0.
std::size_t prime_power_base(std::size_t n) noexcept;

}  // namespace centra
