#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

/// Distinct element centralizers, sorted by (size, bits). The whole group
/// (the centralizer of the identity) is always the last entry.
std::vector<Subgroup> cent_set(const FiniteGroup& g);

/// |Cent(G)|.
std::size_t cent_count(const FiniteGroup& g);

/// True iff C(x) is abelian for every non-central x.
bool is_ca(const FiniteGroup& g);

/// Size of a largest set of pairwise non-commuting elements (1 for abelian
/// groups). Searches the non-commuting graph on the non-central cosets of
/// Z(G). Throws ExceedsThreshold if |G/Z(G)| > limits.clique.
std::size_t max_noncommuting(const FiniteGroup& g, const Limits& limits = {});

/// True iff xy = yx exactly when (x z1)(y z2) = (y z2)(x z1) for central z1, z2.
bool commuting_is_central_coset_invariant(const FiniteGroup& g);

struct CentProfile {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t cent_count = 0;
  std::vector<Subgroup> proper_centralizers;  // sorted by index, then bits
  std::vector<std::size_t> index_multiset;    // ascending
  bool is_ca = false;
  std::size_t r = 0;
  bool covers_group = false;
  bool pairwise_intersections_central = false;
  // X1 = first proper centralizer of minimal index, X2 = last of maximal index.
  bool product_is_group = false;
};

/// Full centralizer profile of a nonabelian group; AbelianInput otherwise.
CentProfile cover_profile(const FiniteGroup& g, const Limits& limits = {});

/// {cent_count, indices, r, is_ca, covers, pairwise_central, product_full}.
std::string profile_json(const CentProfile& profile);

/// True when the setwise product AB is all of G.
bool product_is_whole(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

struct CoverViolation {
  std::array<Subgroup, 3> subgroups;
  std::size_t index;  // |G| / |A n B n C|
};

/// Scans every triple of proper subgroups whose union is G and reports
/// those whose common intersection does not have index 4.
std::vector<CoverViolation> three_cover_index(const FiniteGroup& g, const Limits& limits = {});

struct FrobeniusWitness {
  Subgroup kernel;
  Subgroup complement;
};

/// Smallest (by size, bits) proper nontrivial subgroup H with
/// H n gHg^-1 = 1 for all g outside H, with the kernel verified to be a
/// normal subgroup of order |G|/|H|.
std::optional<FrobeniusWitness> is_frobenius(const FiniteGroup& g, const Limits& limits = {});

}  // namespace centra
