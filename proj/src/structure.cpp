#include "centra/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "centra/error.hpp"

namespace centra {

namespace {

// Closure of {e} under right multiplication by the accumulated generators.
// Generators already inside the current closure are skipped, so `used`
// stays short (at most log2 |G| entries).
struct Closure {
  ElementSet bits;
  std::vector<Element> elems;
  std::vector<Element> used;

  explicit Closure(const FiniteGroup& g) : bits(g.order()) {
    bits.set(g.identity());
    elems.push_back(g.identity());
  }

  void add(const FiniteGroup& g, Element gen) {
    if (bits.test(gen)) return;
    used.push_back(gen);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Element s : used) {
        const Element p = g.mul(elems[i], s);
        if (!bits.test(p)) {
          bits.set(p);
          elems.push_back(p);
        }
      }
  }
};

struct Generated {
  Subgroup subgroup;
  std::vector<Element> gens;
};

}  // namespace

Subgroup generate(const FiniteGroup& g, std::span<const Element> gens) {
  Closure c(g);
  for (Element x : gens) {
    if (x >= g.order()) throw Error(Errc::OutOfRange, "generator " + std::to_string(x));
    c.add(g, x);
  }
  return Subgroup::trusted(std::move(c.bits));
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.order()) {
    throw Error(Errc::OutOfRange, "element " + std::to_string(x) + " not in a group of order " +
                                      std::to_string(g.order()));
  }
  ElementSet bits(g.order());
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.commute(x, static_cast<Element>(y))) bits.set(static_cast<Element>(y));
  return Subgroup::trusted(std::move(bits));
}

Subgroup center(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ElementSet bits(n);
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    for (std::size_t y = 0; y < n && central; ++y)
      central = g.commute(static_cast<Element>(z), static_cast<Element>(y));
    if (central) bits.set(static_cast<Element>(z));
  }
  return Subgroup::trusted(std::move(bits));
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  const auto elems = n.elements();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xe = static_cast<Element>(x);
    for (Element h : elems)
      if (!n.contains(g.mul(g.mul(xe, h), g.inv(xe)))) return false;
  }
  return true;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n, const std::string& label) {
  const std::size_t order = g.order();
  if (n.bits().universe() != order) {
    throw Error(Errc::NotSubgroup, "subgroup belongs to a group of order " +
                                       std::to_string(n.bits().universe()));
  }
  const auto members = n.elements();
  for (std::size_t x = 0; x < order; ++x) {
    const auto xe = static_cast<Element>(x);
    for (Element h : members) {
      if (!n.contains(g.mul(g.mul(xe, h), g.inv(xe)))) {
        throw Error(Errc::NotNormal, "element " + std::to_string(x) + " conjugates " +
                                         std::to_string(h) + " out of the subgroup");
      }
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(order, kUnset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const std::size_t id = reps.size();
    reps.push_back(static_cast<Element>(x));
    for (Element h : members) coset[g.mul(static_cast<Element>(x), h)] = id;
  }

  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = static_cast<Element>(coset[g.mul(reps[i], reps[j])]);

  GroupHom hom{order, q, {}};
  hom.image.reserve(order);
  for (std::size_t id : coset) hom.image.push_back(static_cast<Element>(id));

  return {FiniteGroup::from_trusted_table(q, std::move(table), "(" + g.name() + ")/" + label), hom};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.subgroup_enum) {
    throw Error(Errc::ExceedsThreshold, "subgroup enumeration limited to order " +
                                            std::to_string(limits.subgroup_enum) + ", got " +
                                            std::to_string(g.order()));
  }
  std::vector<Generated> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  for (std::size_t x = 0; x < g.order(); ++x) {
    const Element gen = static_cast<Element>(x);
    Subgroup s = generate(g, std::span<const Element>(&gen, 1));
    if (seen.insert(s.bits()).second) found.push_back({std::move(s), {gen}});
  }
  std::sort(found.begin(), found.end(),
            [](const Generated& a, const Generated& b) { return a.subgroup < b.subgroup; });

  // Join every new subgroup with everything found before it; joins of
  // cyclic subgroups reach every subgroup.
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementSet& a = found[i].subgroup.bits();
      const ElementSet& b = found[j].subgroup.bits();
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      Closure c(g);
      for (Element x : found[i].gens) c.add(g, x);
      for (Element x : found[j].gens) c.add(g, x);
      if (seen.insert(c.bits).second) {
        auto gens = c.used;
        found.push_back({Subgroup::trusted(std::move(c.bits)), std::move(gens)});
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.subgroup));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h) {
  const auto elems = h.elements();
  Closure c(g);
  for (Element a : elems)
    for (Element b : elems) c.add(g, g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return Subgroup::trusted(std::move(c.bits));
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

std::map<std::size_t, std::size_t> element_order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t x = 0; x < g.order(); ++x) ++hist[g.element_order(static_cast<Element>(x))];
  return hist;
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (const auto& [ord, count] : element_order_histogram(g)) e = std::lcm(e, ord);
  return e;
}

std::size_t prime_power_base(std::size_t n) noexcept {
  if (n < 2) return 0;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

}  // namespace centra
