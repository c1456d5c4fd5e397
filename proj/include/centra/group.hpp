#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "centra/config.hpp"
#include "centra/element_set.hpp"

namespace centra {

/// A finite group stored as its full Cayley table.
///
/// Elements are the indices 0..order-1. Row a of the table holds the
/// products a*b, so `mul(a, b)` is the product with a on the left. Instances
/// are immutable once built and may be shared freely between threads.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const noexcept { return inverses_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + std::size_t{a} * order_, order_};
  }
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverses_; }

  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  bool is_abelian() const noexcept;
  std::size_t element_order(Element x) const noexcept;

  /// Wraps a table produced by a constructor that guarantees the group
  /// axioms. Identity and inverses are discovered; axioms are re-verified
  /// only when `limits.debug_checks` is set.
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Element> table,
                                        std::string name, const Limits& limits = {});

  FiniteGroup renamed(std::string name) && {
    name_ = std::move(name);
    return std::move(*this);
  }

 private:
  friend FiniteGroup build_from_table(const std::vector<std::vector<std::size_t>>& rows,
                                      std::string name, const Limits& limits);

  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
              std::vector<Element> inverses, std::string name)
      : order_(order),
        table_(std::move(table)),
        identity_(identity),
        inverses_(std::move(inverses)),
        name_(std::move(name)) {}

  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverses_;
  std::string name_;
};

/// Validates a user-supplied multiplication table.
///
/// Checks run in order: shape and range (MalformedTable), identity
/// (NoIdentity), two-sided inverses (NoInverse), associativity
/// (NotAssociative). Associativity is checked on every triple up to
/// `limits.full_assoc_check`, and with Light's generator test above it.
FiniteGroup build_from_table(const std::vector<std::vector<std::size_t>>& rows,
                             std::string name = "table", const Limits& limits = {});

/// Throws NotAssociative naming the first violating triple.
void verify_associative(const FiniteGroup& g, const Limits& limits = {});

/// A subset of a group certified to be a subgroup.
class Subgroup {
 public:
  /// Checks identity, closure, inverses and Lagrange; throws NotSubgroup.
  static Subgroup certify(const FiniteGroup& g, ElementSet bits);

  /// For routines whose output is closed by construction (centralizers,
  /// generated subgroups). Nothing is checked.
  static Subgroup trusted(ElementSet bits) { return Subgroup(std::move(bits)); }

  static Subgroup whole(const FiniteGroup& g) { return Subgroup(ElementSet::full(g.order())); }
  static Subgroup trivial(const FiniteGroup& g);

  const ElementSet& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element x) const noexcept { return bits_.test(x); }
  std::vector<Element> elements() const { return bits_.elements(); }

  /// Ascending by (size, bit pattern).
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.bits_ == b.bits_; }

 private:
  explicit Subgroup(ElementSet bits) : bits_(std::move(bits)), size_(bits_.count()) {}

  ElementSet bits_;
  std::size_t size_;
};

/// A homomorphism between two tables, stored as the image of each source element.
struct GroupHom {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> image;
};

/// True when `hom` respects both multiplication tables element by element.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& hom);

// Debug dump: {"name", "order", "table" (row-major), "identity"}.
std::string dump_json(const FiniteGroup& g);
FiniteGroup load_json(const std::string& text, const Limits& limits = {});

}  // namespace centra
