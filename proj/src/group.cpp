#include "centra/group.hpp"

#include "json.hpp"

#include "centra/error.hpp"

namespace centra {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::InvalidParam: return "InvalidParam";
    case Errc::ExceedsCap: return "ExceedsCap";
    case Errc::InvalidTwist: return "InvalidTwist";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ExceedsThreshold: return "ExceedsThreshold";
    case Errc::AbelianInput: return "AbelianInput";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownAtom: return "UnknownAtom";
    case Errc::SemidirectNonCyclic: return "SemidirectNonCyclic";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kMaxIndexableOrder = std::size_t{1} << 16;

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Identity and inverses for a table whose entries are already in range.
std::pair<Element, std::vector<Element>> discover_identity_and_inverses(
    std::size_t n, const std::vector<Element>& table) {
  const auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(Errc::NoIdentity, "no element acts as a two-sided identity");

  std::vector<Element> inverses(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t found = n;
    for (std::size_t y = 0; y < n; ++y) {
      if (at(x, y) == identity && at(y, x) == identity) {
        found = y;
        break;
      }
    }
    if (found == n) {
      throw Error(Errc::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    inverses[x] = static_cast<Element>(found);
  }
  return {static_cast<Element>(identity), std::move(inverses)};
}

}  // namespace

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Element> table,
                                            std::string name, const Limits& limits) {
  auto [identity, inverses] = discover_identity_and_inverses(order, table);
  FiniteGroup g(order, std::move(table), identity, std::move(inverses), std::move(name));
  if (limits.debug_checks) verify_associative(g, limits);
  return g;
}

FiniteGroup build_from_table(const std::vector<std::vector<std::size_t>>& rows, std::string name,
                             const Limits& limits) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::MalformedTable, "empty table");
  if (n > limits.order_cap || n > kMaxIndexableOrder) {
    throw Error(Errc::ExceedsCap, "table of order " + std::to_string(n) + " exceeds the cap of " +
                                      std::to_string(limits.order_cap));
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw Error(Errc::MalformedTable, "row " + std::to_string(a) + " has " +
                                            std::to_string(rows[a].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) {
        throw Error(Errc::MalformedTable, "entry (" + std::to_string(a) + ", " + std::to_string(b) +
                                              ") = " + std::to_string(rows[a][b]) + " out of range");
      }
      table[a * n + b] = static_cast<Element>(rows[a][b]);
    }
  }
  auto [identity, inverses] = discover_identity_and_inverses(n, table);
  FiniteGroup g(n, std::move(table), identity, std::move(inverses), std::move(name));
  verify_associative(g, limits);
  return g;
}

void verify_associative(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  const auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw Error(Errc::NotAssociative, "(ab)c != a(bc) for triple " + triple(a, b, c));
  };
  if (n <= limits.full_assoc_check) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = g.mul(static_cast<Element>(a), static_cast<Element>(b));
        for (std::size_t c = 0; c < n; ++c) {
          const auto ce = static_cast<Element>(c);
          if (g.mul(ab, ce) != g.mul(static_cast<Element>(a), g.mul(static_cast<Element>(b), ce)))
            fail(a, b, c);
        }
      }
    return;
  }

  // Light's test: the elements s with (xs)y = x(sy) for all x, y form a
  // closed set, so checking a set that generates G under products suffices.
  ElementSet reached(n);
  std::vector<Element> span{g.identity()};
  reached.set(g.identity());
  std::vector<Element> gens;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (reached.test(static_cast<Element>(cand))) continue;
    gens.push_back(static_cast<Element>(cand));
    for (std::size_t i = 0; i < span.size(); ++i)
      for (Element s : gens) {
        const Element p = g.mul(span[i], s);
        if (!reached.test(p)) {
          reached.set(p);
          span.push_back(p);
        }
      }
  }
  for (Element s : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const Element xs = g.mul(static_cast<Element>(x), s);
      for (std::size_t y = 0; y < n; ++y) {
        const auto ye = static_cast<Element>(y);
        if (g.mul(xs, ye) != g.mul(static_cast<Element>(x), g.mul(s, ye))) fail(x, s, y);
      }
    }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  ElementSet bits(g.order());
  bits.set(g.identity());
  return Subgroup(std::move(bits));
}

Subgroup Subgroup::certify(const FiniteGroup& g, ElementSet bits) {
  if (bits.universe() != g.order()) {
    throw Error(Errc::NotSubgroup, "bit vector length " + std::to_string(bits.universe()) +
                                       " does not match group order " + std::to_string(g.order()));
  }
  if (!bits.test(g.identity())) throw Error(Errc::NotSubgroup, "identity missing");
  const auto elems = bits.elements();
  for (Element a : elems) {
    if (!bits.test(g.inv(a))) {
      throw Error(Errc::NotSubgroup, "inverse of " + std::to_string(a) + " missing");
    }
    for (Element b : elems) {
      if (!bits.test(g.mul(a, b))) {
        throw Error(Errc::NotSubgroup, "product of " + std::to_string(a) + " and " +
                                           std::to_string(b) + " escapes the subset");
      }
    }
  }
  if (g.order() % elems.size() != 0) {
    throw Error(Errc::NotSubgroup, "size " + std::to_string(elems.size()) +
                                       " does not divide the group order");
  }
  return Subgroup(std::move(bits));
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& hom) {
  if (hom.source_order != source.order() || hom.target_order != target.order() ||
      hom.image.size() != source.order()) {
    return false;
  }
  for (Element x : hom.image)
    if (x >= target.order()) return false;
  if (hom.image[source.identity()] != target.identity()) return false;
  const std::size_t n = source.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ae = static_cast<Element>(a), be = static_cast<Element>(b);
      if (hom.image[source.mul(ae, be)] != target.mul(hom.image[ae], hom.image[be])) return false;
    }
  return true;
}

std::string dump_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = std::vector<Element>(g.table().begin(), g.table().end());
  j["identity"] = g.identity();
  return j.dump();
}

FiniteGroup load_json(const std::string& text, const Limits& limits) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedTable, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = j.at("order").get<std::size_t>();
    const auto flat = j.at("table").get<std::vector<std::size_t>>();
    if (flat.size() != n * n) throw Error(Errc::MalformedTable, "table length is not order^2");
    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t a = 0; a < n; ++a)
      rows[a].assign(flat.begin() + static_cast<std::ptrdiff_t>(a * n),
                     flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
    auto g = build_from_table(rows, j.value("name", std::string("table")), limits);
    if (j.contains("identity") && j["identity"].get<std::size_t>() != g.identity()) {
      throw Error(Errc::MalformedTable, "declared identity does not act as identity");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedTable, std::string("bad group dump: ") + e.what());
  }
}

}  // namespace centra
