#include "centra/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "centra/error.hpp"
#include "centra/expr.hpp"
#include "centra/iso.hpp"

namespace centra {

std::string_view to_string(CorpusFamily f) {
  switch (f) {
    case CorpusFamily::cyclic: return "cyclic";
    case CorpusFamily::dihedral: return "dihedral";
    case CorpusFamily::dicyclic: return "dicyclic";
    case CorpusFamily::symmetric: return "symmetric";
    case CorpusFamily::heisenberg: return "heisenberg";
    case CorpusFamily::semidirect: return "semidirect";
  }
  return "unknown";
}

std::optional<CorpusFamily> corpus_family_from_string(std::string_view s) {
  for (auto f : {CorpusFamily::cyclic, CorpusFamily::dihedral, CorpusFamily::dicyclic,
                 CorpusFamily::symmetric, CorpusFamily::heisenberg, CorpusFamily::semidirect})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

FiniteGroup CorpusEntry::build(const Limits& limits) const { return eval(spec, limits); }

std::vector<std::size_t> canonical_twists(std::size_t n, std::size_t m) {
  std::vector<std::size_t> out;
  if (n < 3 || m < 2) return out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t k = 2; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::vector<std::size_t> powers{1};
    for (std::size_t p = k; p != 1; p = p * k % n) powers.push_back(p);
    if (m % powers.size() != 0) continue;  // k^m != 1
    std::sort(powers.begin(), powers.end());
    // k ascends, so the first k reaching a subgroup is its smallest generator
    if (seen.insert(powers).second) out.push_back(k);
  }
  return out;
}

namespace {

bool enabled(const CorpusSpec& spec, CorpusFamily f) {
  return std::find(spec.families.begin(), spec.families.end(), f) != spec.families.end();
}

bool by_order_then_spec(const CorpusEntry& a, const CorpusEntry& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.spec < b.spec;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, const Limits& limits) {
  const std::size_t max = spec.max_order;
  if (max > limits.order_cap) {
    throw Error(Errc::ExceedsCap, "corpus max order " + std::to_string(max) +
                                      " exceeds the order cap of " + std::to_string(limits.order_cap));
  }
  std::vector<CorpusEntry> base;
  const auto add = [&](std::string s, std::size_t order) { base.push_back({std::move(s), order}); };

  if (enabled(spec, CorpusFamily::cyclic))
    for (std::size_t n = 1; n <= max; ++n) add("C" + std::to_string(n), n);
  if (enabled(spec, CorpusFamily::dihedral))
    for (std::size_t n = 4; n <= max; n += 2) add("D" + std::to_string(n), n);
  if (enabled(spec, CorpusFamily::dicyclic))
    for (std::size_t n = 4; n <= max; n += 4) add("Q" + std::to_string(n), n);
  if (enabled(spec, CorpusFamily::symmetric)) {
    std::size_t fact = 2;
    for (std::size_t n = 3; n <= 5; ++n) {
      fact *= n;
      if (fact <= max) add("S" + std::to_string(n), fact);
    }
  }
  if (enabled(spec, CorpusFamily::heisenberg))
    for (std::size_t p : {3, 5, 7})
      if (p * p * p <= max) add("Heis" + std::to_string(p), p * p * p);
  if (enabled(spec, CorpusFamily::semidirect))
    for (std::size_t n = 3; n <= max / 2; ++n)
      for (std::size_t m = 2; n * m <= max; ++m)
        for (std::size_t k : canonical_twists(n, m))
          add("C" + std::to_string(n) + ":C" + std::to_string(m) + "(k=" + std::to_string(k) + ")",
              n * m);

  std::sort(base.begin(), base.end(), by_order_then_spec);

  std::vector<CorpusEntry> out = base;
  if (spec.include_products) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i].order < 2) continue;
      for (std::size_t j = 0; j <= i; ++j) {
        if (base[j].order < 2) continue;
        if (base[i].order * base[j].order > max) break;
        out.push_back({base[i].spec + "x" + base[j].spec, base[i].order * base[j].order});
      }
    }
  }
  std::sort(out.begin(), out.end(), by_order_then_spec);

  if (!spec.dedup) return out;

  struct Kept {
    FiniteGroup group;
    Fingerprint print;
  };
  std::vector<CorpusEntry> unique;
  std::vector<Kept> kept;  // only groups within the iso threshold
  for (auto& entry : out) {
    if (entry.order > limits.iso) {
      unique.push_back(std::move(entry));
      continue;
    }
    FiniteGroup g = entry.build(limits);
    Fingerprint fp = fingerprint(g);
    bool duplicate = false;
    for (const Kept& k : kept) {
      if (k.print == fp && is_isomorphic(k.group, g, limits)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back({std::move(g), std::move(fp)});
      unique.push_back(std::move(entry));
    }
  }
  return unique;
}

}  // namespace centra
