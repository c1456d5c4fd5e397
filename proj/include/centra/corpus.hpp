#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

enum class CorpusFamily { cyclic, dihedral, dicyclic, symmetric, heisenberg, semidirect };

std::string_view to_string(CorpusFamily f);
std::optional<CorpusFamily> corpus_family_from_string(std::string_view s);

/// Which groups to generate. The corpus is built from families and their
/// pairwise products; it does not cover every isomorphism class of any order.
struct CorpusSpec {
  std::size_t max_order = 343;
  std::vector<CorpusFamily> families{CorpusFamily::cyclic,    CorpusFamily::dihedral,
                                     CorpusFamily::dicyclic,  CorpusFamily::symmetric,
                                     CorpusFamily::heisenberg, CorpusFamily::semidirect};
  bool include_products = true;
  // Drop groups isomorphic to an earlier entry (only for orders <= Limits::iso).
  bool dedup = false;
};

/// One corpus group, identified by its group-expression text.
struct CorpusEntry {
  std::string spec;
  std::size_t order = 0;

  FiniteGroup build(const Limits& limits = {}) const;
};

/// Nontrivial twists k for C_n x| C_m, one per cyclic subgroup <k> of the
/// units mod n whose order divides m. k is the smallest generator of <k>.
std::vector<std::size_t> canonical_twists(std::size_t n, std::size_t m);

/// Deterministic corpus, sorted by (order, spec):
///   cyclic C1..; dihedral D4.. (even); dicyclic Q4.. (multiples of 4);
///   symmetric S3..S5; heisenberg p in {3,5,7}; semidirect Cn:Cm(k) for
///   canonical nontrivial k; then products AxB of two nontrivial base
///   groups with |A| >= |B| (ties by spec), when enabled.
/// Throws ExceedsCap if max_order is above the order cap.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, const Limits& limits = {});

}  // namespace centra
