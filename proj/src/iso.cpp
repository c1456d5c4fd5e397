#include "centra/iso.hpp"

#include <stdexcept>
#include <string>

#include "centra/error.hpp"
#include "centra/families.hpp"
#include "centra/structure.hpp"

namespace centra {

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  const std::size_t n = g.order();
  f.order = n;
  f.abelian = g.is_abelian();
  f.center_order = center(g).size();
  f.derived_order = commutator_subgroup(g, Subgroup::whole(g)).size();
  f.order_histogram = element_order_histogram(g);
  std::map<std::size_t, std::size_t> elements_by_class_size;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t c = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (g.commute(static_cast<Element>(x), static_cast<Element>(y))) ++c;
    ++elements_by_class_size[n / c];
  }
  for (const auto& [size, count] : elements_by_class_size) f.class_sizes[size] = count / size;
  return f;
}

namespace {

constexpr int kUnmapped = -1;

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b) : a_(a), b_(b) {
    // Generators: repeatedly the lowest element outside the current closure.
    ElementSet reached(a.order());
    std::vector<Element> span{a.identity()};
    reached.set(a.identity());
    for (std::size_t x = 0; x < a.order(); ++x) {
      const auto xe = static_cast<Element>(x);
      if (reached.test(xe)) continue;
      gens_.push_back(xe);
      for (std::size_t i = 0; i < span.size(); ++i)
        for (Element s : gens_) {
          const Element p = a.mul(span[i], s);
          if (!reached.test(p)) {
            reached.set(p);
            span.push_back(p);
          }
        }
    }
    b_orders_.resize(b.order());
    for (std::size_t y = 0; y < b.order(); ++y) b_orders_[y] = b.element_order(static_cast<Element>(y));
  }

  std::optional<std::vector<Element>> run() {
    State start{std::vector<int>(a_.order(), kUnmapped), ElementSet(b_.order()), {}};
    start.map[a_.identity()] = b_.identity();
    start.used.set(b_.identity());
    start.domain.push_back(a_.identity());
    if (!search(0, start)) return std::nullopt;
    return result_;
  }

 private:
  struct State {
    std::vector<int> map;
    ElementSet used;
    std::vector<Element> domain;  // elements of A with an image so far
  };

  bool search(std::size_t level, const State& state) {
    if (level == gens_.size()) {
      if (state.domain.size() != a_.order()) return false;
      std::vector<Element> image(a_.order());
      for (std::size_t x = 0; x < a_.order(); ++x) image[x] = static_cast<Element>(state.map[x]);
      GroupHom hom{a_.order(), b_.order(), image};
      if (!is_homomorphism(a_, b_, hom) || state.used.count() != b_.order()) return false;
      result_ = std::move(image);
      return true;
    }
    const Element gen = gens_[level];
    const std::size_t want = a_.element_order(gen);
    for (std::size_t cand = 0; cand < b_.order(); ++cand) {
      const auto ce = static_cast<Element>(cand);
      if (state.used.test(ce) || b_orders_[cand] != want) continue;
      images_.resize(level + 1);
      images_[level] = ce;
      State next = state;
      if (extend(level, next) && search(level + 1, next)) return true;
    }
    return false;
  }

  // Closes the domain under right multiplication by gens_[0..level] and
  // checks that phi(x g) = phi(x) phi(g) stays consistent and injective.
  bool extend(std::size_t level, State& s) const {
    for (std::size_t i = 0; i < s.domain.size(); ++i) {
      const Element x = s.domain[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const Element y = a_.mul(x, gens_[j]);
        const Element img = b_.mul(static_cast<Element>(s.map[x]), images_[j]);
        if (s.map[y] == kUnmapped) {
          if (s.used.test(img)) return false;
          s.map[y] = img;
          s.used.set(img);
          s.domain.push_back(y);
        } else if (s.map[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<std::size_t> b_orders_;
  std::vector<Element> result_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                     const Limits& limits) {
  if (a.order() > limits.iso || b.order() > limits.iso) {
    throw Error(Errc::ExceedsThreshold, "isomorphism testing limited to order " +
                                            std::to_string(limits.iso));
  }
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

std::string_view to_string(QuotientClass c) {
  switch (c) {
    case QuotientClass::Q14_C7xC2: return "Q14_C7xC2";
    case QuotientClass::Q21_C7xC3: return "Q21_C7xC3";
    case QuotientClass::Q42_Frob67: return "Q42_Frob67";
    case QuotientClass::Q49_C7xC7: return "Q49_C7xC7";
    case QuotientClass::ABELIAN: return "ABELIAN";
    case QuotientClass::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::optional<QuotientClass> quotient_class_from_string(std::string_view s) {
  for (auto c : {QuotientClass::Q14_C7xC2, QuotientClass::Q21_C7xC3, QuotientClass::Q42_Frob67,
                 QuotientClass::Q49_C7xC7, QuotientClass::ABELIAN, QuotientClass::OTHER})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

bool is_target_class(QuotientClass c) noexcept {
  return c == QuotientClass::Q14_C7xC2 || c == QuotientClass::Q21_C7xC3 ||
         c == QuotientClass::Q42_Frob67 || c == QuotientClass::Q49_C7xC7;
}

namespace {

struct References {
  FiniteGroup c7_c2 = make_family(FamilyKind::dihedral, 14);
  FiniteGroup c7_c3 = semidirect_cyclic(7, 3, 2);
  FiniteGroup frob_6_7 = semidirect_cyclic(7, 6, 3);
  FiniteGroup c7_c7 = direct_product(make_family(FamilyKind::cyclic, 7),
                                     make_family(FamilyKind::cyclic, 7));
};

const References& references() {
  static const References refs;
  return refs;
}

}  // namespace

QuotientClass classify_quotient(const FiniteGroup& q, const Limits& limits) {
  const std::size_t n = q.order();
  if (q.is_abelian()) {
    if (n == 49 && exponent(q) == 7) {
      if (limits.debug_checks && !is_isomorphic(q, references().c7_c7, limits)) {
        throw std::logic_error("exponent-7 abelian group of order 49 failed the C7xC7 iso test");
      }
      return QuotientClass::Q49_C7xC7;
    }
    return QuotientClass::ABELIAN;
  }
  const FiniteGroup* ref = nullptr;
  QuotientClass tag = QuotientClass::OTHER;
  switch (n) {
    case 14: ref = &references().c7_c2; tag = QuotientClass::Q14_C7xC2; break;
    case 21: ref = &references().c7_c3; tag = QuotientClass::Q21_C7xC3; break;
    case 42: ref = &references().frob_6_7; tag = QuotientClass::Q42_Frob67; break;
    default: return QuotientClass::OTHER;
  }
  return is_isomorphic(q, *ref, limits) ? tag : QuotientClass::OTHER;
}

QuotientClass classify_central_quotient(const FiniteGroup& g, const Limits& limits) {
  const Subgroup z = center(g);
  if (z.size() == g.order()) return QuotientClass::ABELIAN;
  return classify_quotient(quotient(g, z, "Z").group, limits);
}

}  // namespace centra
