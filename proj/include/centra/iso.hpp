#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

/// Isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism, never sufficient.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::map<std::size_t, std::size_t> order_histogram;
  std::map<std::size_t, std::size_t> class_sizes;  // class size -> number of classes

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// An isomorphism A -> B as the image of each element of A, verified
/// against both tables; nullopt when none exists. Throws ExceedsThreshold
/// when either order is above limits.iso.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                     const Limits& limits = {});

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

enum class QuotientClass {
  Q14_C7xC2,
  Q21_C7xC3,
  Q42_Frob67,
  Q49_C7xC7,
  ABELIAN,
  OTHER,
};

std::string_view to_string(QuotientClass c);
std::optional<QuotientClass> quotient_class_from_string(std::string_view s);

/// True for the four nonabelian-group classes Q14, Q21, Q42, Q49.
bool is_target_class(QuotientClass c) noexcept;

/// Classifies an already-built central quotient G/Z(G).
QuotientClass classify_quotient(const FiniteGroup& q, const Limits& limits = {});

/// Builds G/Z(G) and classifies it against the reference groups
/// D14 = C7:C2, C7:C3(k=2), C7:C6(k=3) and C7 x C7.
QuotientClass classify_central_quotient(const FiniteGroup& g, const Limits& limits = {});

}  // namespace centra
