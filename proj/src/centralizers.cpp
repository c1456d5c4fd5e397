#include "centra/centralizers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "centra/error.hpp"
#include "centra/structure.hpp"
#include "clique.hpp"
#include "json.hpp"

namespace centra {

namespace {

bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const auto elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!g.commute(elems[i], elems[j])) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> cent_set(const FiniteGroup& g) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Subgroup c = centralizer(g, static_cast<Element>(x));
    // unordered_set compares full contents on hash match
    if (seen.insert(c.bits()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t cent_count(const FiniteGroup& g) { return cent_set(g).size(); }

bool is_ca(const FiniteGroup& g) {
  for (const Subgroup& c : cent_set(g)) {
    if (c.size() == g.order()) continue;
    if (!subgroup_is_abelian(g, c)) return false;
  }
  return true;
}

bool commuting_is_central_coset_invariant(const FiniteGroup& g) {
  const auto z = center(g).elements();
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xe = static_cast<Element>(x), ye = static_cast<Element>(y);
      const bool c = g.commute(xe, ye);
      for (Element s : z) {
        if (g.commute(g.mul(xe, s), ye) != c || g.commute(xe, g.mul(ye, s)) != c) return false;
      }
    }
  return true;
}

std::size_t max_noncommuting(const FiniteGroup& g, const Limits& limits) {
  const Subgroup z = center(g);
  if (z.size() == g.order()) return 1;
  const std::size_t cosets = g.order() / z.size();
  if (cosets > limits.clique) {
    throw Error(Errc::ExceedsThreshold, "clique search limited to |G/Z| <= " +
                                            std::to_string(limits.clique) + ", got " +
                                            std::to_string(cosets));
  }
  if (!commuting_is_central_coset_invariant(g)) {
    throw std::logic_error("commuting relation is not constant on central cosets");
  }

  // One vertex per non-central coset, represented by its smallest element.
  const auto members = z.elements();
  ElementSet covered = z.bits();
  std::vector<Element> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xe = static_cast<Element>(x);
    if (covered.test(xe)) continue;
    reps.push_back(xe);
    for (Element s : members) covered.set(g.mul(xe, s));
  }

  // Cosets with equal centralizers are twins: they commute with each other
  // and have the same neighbours, so a clique uses at most one of them.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Element> vertices;
  for (Element x : reps)
    if (seen.insert(centralizer(g, x).bits()).second) vertices.push_back(x);

  std::vector<ElementSet> adjacency(vertices.size(), ElementSet(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.commute(vertices[i], vertices[j])) {
        adjacency[i].set(static_cast<Element>(j));
        adjacency[j].set(static_cast<Element>(i));
      }
  return detail::max_clique_size(adjacency);
}

bool product_is_whole(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  ElementSet hit(g.order());
  const auto bs = b.elements();
  a.bits().for_each([&](Element x) {
    for (Element y : bs) hit.set(g.mul(x, y));
  });
  return hit.count() == g.order();
}

CentProfile cover_profile(const FiniteGroup& g, const Limits& limits) {
  if (g.is_abelian()) throw Error(Errc::AbelianInput, g.name() + " is abelian");

  CentProfile p;
  p.order = g.order();
  const Subgroup z = center(g);
  p.center_order = z.size();

  auto all = cent_set(g);
  p.cent_count = all.size();
  for (auto& c : all)
    if (c.size() != g.order()) p.proper_centralizers.push_back(std::move(c));
  // ascending index is descending size
  std::sort(p.proper_centralizers.begin(), p.proper_centralizers.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.bits() < b.bits();
            });

  ElementSet cover(g.order());
  p.is_ca = true;
  for (const Subgroup& c : p.proper_centralizers) {
    p.index_multiset.push_back(g.order() / c.size());
    cover |= c.bits();
    if (p.is_ca && !subgroup_is_abelian(g, c)) p.is_ca = false;
  }
  p.covers_group = cover.count() == g.order();

  p.pairwise_intersections_central = true;
  const auto& pc = p.proper_centralizers;
  for (std::size_t i = 0; i < pc.size() && p.pairwise_intersections_central; ++i)
    for (std::size_t j = i + 1; j < pc.size(); ++j)
      if ((pc[i].bits() & pc[j].bits()) != z.bits()) {
        p.pairwise_intersections_central = false;
        break;
      }

  p.product_is_group = product_is_whole(g, pc.front(), pc.back());
  p.r = max_noncommuting(g, limits);
  return p;
}

std::string profile_json(const CentProfile& profile) {
  nlohmann::ordered_json j;
  j["cent_count"] = profile.cent_count;
  j["indices"] = profile.index_multiset;
  j["r"] = profile.r;
  j["is_ca"] = profile.is_ca;
  j["covers"] = profile.covers_group;
  j["pairwise_central"] = profile.pairwise_intersections_central;
  j["product_full"] = profile.product_is_group;
  return j.dump();
}

std::vector<CoverViolation> three_cover_index(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  std::vector<Subgroup> proper;
  for (auto& s : all_subgroups(g, limits))
    if (s.size() != n) proper.push_back(std::move(s));
  std::sort(proper.begin(), proper.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });

  // |A u B u C| <= |A| + |B| + |C| - 2 since all three contain the identity.
  const auto can_cover = [n](std::size_t a, std::size_t b, std::size_t c) { return a + b + c >= n + 2; };

  std::vector<CoverViolation> violations;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    const std::size_t si = proper[i].size();
    if (!can_cover(si, si, si)) break;
    for (std::size_t j = i + 1; j < proper.size(); ++j) {
      const std::size_t sj = proper[j].size();
      if (!can_cover(si, sj, sj)) break;
      const ElementSet ab = proper[i].bits() | proper[j].bits();
      for (std::size_t k = j + 1; k < proper.size(); ++k) {
        if (!can_cover(si, sj, proper[k].size())) break;
        if ((ab | proper[k].bits()).count() != n) continue;
        const ElementSet common = proper[i].bits() & proper[j].bits() & proper[k].bits();
        const std::size_t index = n / common.count();
        if (index != 4) violations.push_back({{proper[i], proper[j], proper[k]}, index});
      }
    }
  }
  return violations;
}

std::optional<FrobeniusWitness> is_frobenius(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  for (const Subgroup& h : all_subgroups(g, limits)) {
    if (h.size() == 1 || h.size() == n) continue;
    const auto hs = h.elements();

    bool malnormal = true;
    for (std::size_t x = 0; x < n && malnormal; ++x) {
      const auto xe = static_cast<Element>(x);
      if (h.contains(xe)) continue;
      for (Element y : hs) {
        if (y != g.identity() && h.contains(g.mul(g.mul(xe, y), g.inv(xe)))) {
          malnormal = false;
          break;
        }
      }
    }
    if (!malnormal) continue;

    ElementSet conjugates(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto xe = static_cast<Element>(x);
      for (Element y : hs) conjugates.set(g.mul(g.mul(xe, y), g.inv(xe)));
    }
    ElementSet kernel_bits = ElementSet::full(n) - conjugates;
    kernel_bits.set(g.identity());
    if (kernel_bits.count() * h.size() != n) continue;
    try {
      Subgroup kernel = Subgroup::certify(g, std::move(kernel_bits));
      if (!is_normal(g, kernel)) continue;
      return FrobeniusWitness{std::move(kernel), h};
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace centra
