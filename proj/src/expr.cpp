#include "centra/expr.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "centra/error.hpp"
#include "centra/families.hpp"

namespace centra {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse_expr() {
    GroupExpr e;
    e.factors.push_back(parse_term());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      e.factors.push_back(parse_term());
      skip_ws();
    }
    if (pos_ != text_.size()) {
      throw ParseError(Errc::SyntaxError, pos_,
                       "unexpected '" + std::string(1, text_[pos_]) + "', expected 'x' or end");
    }
    return e;
  }

 private:
  Term parse_term() {
    Term t;
    skip_ws();
    const std::size_t base_pos = pos_;
    t.base = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_ws();
      const std::size_t acting_pos = pos_;
      t.acting = parse_atom();
      if (t.base.kind != AtomKind::cyclic) {
        throw ParseError(Errc::SemidirectNonCyclic, base_pos, "semidirect base must be a C atom");
      }
      if (t.acting->kind != AtomKind::cyclic) {
        throw ParseError(Errc::SemidirectNonCyclic, acting_pos,
                         "semidirect acting factor must be a C atom");
      }
      expect('(');
      expect('k');
      expect('=');
      skip_ws();
      t.twist = parse_uint();
      expect(')');
    }
    return t;
  }

  Atom parse_atom() {
    if (pos_ >= text_.size()) throw ParseError(Errc::SyntaxError, pos_, "expected a group atom");
    Atom a;
    const std::size_t start = pos_;
    if (text_.substr(pos_, 4) == "Heis") {
      a.kind = AtomKind::heisenberg;
      pos_ += 4;
    } else {
      switch (text_[pos_]) {
        case 'C': a.kind = AtomKind::cyclic; break;
        case 'D': a.kind = AtomKind::dihedral; break;
        case 'Q': a.kind = AtomKind::dicyclic; break;
        case 'S': a.kind = AtomKind::symmetric; break;
        case 'A': a.kind = AtomKind::alternating; break;
        default:
          if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
            throw ParseError(Errc::UnknownAtom, start,
                             "unknown atom '" + std::string(text_.substr(pos_, end - pos_)) + "'");
          }
          throw ParseError(Errc::SyntaxError, start,
                           "expected a group atom, got '" + std::string(1, text_[pos_]) + "'");
      }
      ++pos_;
    }
    skip_ws();
    a.param = parse_uint();
    return a;
  }

  std::size_t parse_uint() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        throw ParseError(Errc::SyntaxError, start, "integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(Errc::SyntaxError, pos_, "expected an unsigned integer");
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(Errc::SyntaxError, pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_atom(const Atom& a) {
  std::string prefix;
  switch (a.kind) {
    case AtomKind::cyclic: prefix = "C"; break;
    case AtomKind::dihedral: prefix = "D"; break;
    case AtomKind::dicyclic: prefix = "Q"; break;
    case AtomKind::symmetric: prefix = "S"; break;
    case AtomKind::alternating: prefix = "A"; break;
    case AtomKind::heisenberg: prefix = "Heis"; break;
  }
  return prefix + std::to_string(a.param);
}

FamilyKind family_of(AtomKind k) {
  switch (k) {
    case AtomKind::cyclic: return FamilyKind::cyclic;
    case AtomKind::dihedral: return FamilyKind::dihedral;
    case AtomKind::dicyclic: return FamilyKind::dicyclic;
    case AtomKind::symmetric: return FamilyKind::symmetric;
    case AtomKind::alternating: return FamilyKind::alternating;
    case AtomKind::heisenberg: return FamilyKind::heisenberg;
  }
  return FamilyKind::cyclic;
}

FiniteGroup eval_term(const Term& t, const Limits& limits) {
  if (t.acting) return semidirect_cyclic(t.base.param, t.acting->param, t.twist, limits);
  return make_family(family_of(t.base.kind), t.base.param, limits);
}

}  // namespace

GroupExpr parse(std::string_view text) { return Parser(text).parse_expr(); }

std::string render(const GroupExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.factors.size(); ++i) {
    if (i > 0) out += 'x';
    const Term& t = expr.factors[i];
    out += render_atom(t.base);
    if (t.acting) out += ":" + render_atom(*t.acting) + "(k=" + std::to_string(t.twist) + ")";
  }
  return out;
}

FiniteGroup eval(const GroupExpr& expr, const Limits& limits) {
  if (expr.factors.empty()) throw Error(Errc::InvalidParam, "empty group expression");
  if (expr.factors.size() == 1) {
    return eval_term(expr.factors.front(), limits).renamed(render(expr));
  }
  FiniteGroup acc = eval_term(expr.factors.front(), limits);
  for (std::size_t i = 1; i < expr.factors.size(); ++i)
    acc = direct_product(acc, eval_term(expr.factors[i], limits), limits);
  return std::move(acc).renamed(render(expr));
}

}  // namespace centra
