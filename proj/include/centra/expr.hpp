#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centra/config.hpp"
#include "centra/group.hpp"

namespace centra {

// Group expressions, e.g. "C7:C3(k=2)xC5":
//
//   expr := term ('x' term)*
//   term := atom [':' atom '(' 'k=' uint ')']
//   atom := ('C'|'D'|'Q'|'S'|'A'|'Heis') uint
//
// 'D n' is the dihedral group of TOTAL order n, 'Q n' the dicyclic group
// of order n. Semidirect terms take two cyclic atoms. Whitespace between
// tokens is ignored; there are no parentheses.

enum class AtomKind { cyclic, dihedral, dicyclic, symmetric, alternating, heisenberg };

struct Atom {
  AtomKind kind = AtomKind::cyclic;
  std::size_t param = 1;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Term {
  Atom base;
  // C n : C m (k=...) keeps n in `base`, m in `acting`.
  std::optional<Atom> acting;
  std::size_t twist = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Left-associated direct product of terms.
struct GroupExpr {
  std::vector<Term> factors;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Throws ParseError (SyntaxError, UnknownAtom, SemidirectNonCyclic).
GroupExpr parse(std::string_view text);

/// Canonical text: no whitespace, e.g. "C7:C3(k=2)xC5".
std::string render(const GroupExpr& expr);

/// Builds the group; the result is named render(expr).
FiniteGroup eval(const GroupExpr& expr, const Limits& limits = {});

inline FiniteGroup eval(std::string_view text, const Limits& limits = {}) {
  return eval(parse(text), limits);
}

}  // namespace centra
