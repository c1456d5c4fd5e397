#include "centra/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/error.hpp"

namespace centra {

namespace {

void check_cap(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.order_cap || order > (std::size_t{1} << 16)) {
    throw Error(Errc::ExceedsCap, what + " has order " + std::to_string(order) +
                                      ", above the cap of " + std::to_string(limits.order_cap));
  }
}

template <typename Mul>
std::vector<Element> tabulate(std::size_t n, Mul&& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>(mul(a, b));
  return table;
}

FiniteGroup cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(Errc::InvalidParam, "cyclic group needs order >= 1");
  check_cap(n, limits, "C" + std::to_string(n));
  return FiniteGroup::from_trusted_table(
      n, tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
      "C" + std::to_string(n), limits);
}

// r^i s^f has index i + f*h, with s r s = r^-1.
FiniteGroup dihedral(std::size_t n, const Limits& limits) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::InvalidParam, "dihedral order must be even and >= 2, got " + std::to_string(n));
  }
  check_cap(n, limits, "D" + std::to_string(n));
  const std::size_t h = n / 2;
  auto mul = [h](std::size_t x, std::size_t y) {
    const std::size_t i = x % h, f = x / h, k = y % h, l = y / h;
    const std::size_t rot = f == 0 ? (i + k) % h : (i + h - k) % h;
    return rot + ((f + l) % 2) * h;
  };
  return FiniteGroup::from_trusted_table(n, tabulate(n, mul), "D" + std::to_string(n), limits);
}

// a^i x^j with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1; index i + j*2m.
FiniteGroup dicyclic(std::size_t n, const Limits& limits) {
  if (n < 4 || n % 4 != 0) {
    throw Error(Errc::InvalidParam,
                "dicyclic order must be a positive multiple of 4, got " + std::to_string(n));
  }
  check_cap(n, limits, "Q" + std::to_string(n));
  const std::size_t h = n / 2, m = n / 4;
  auto mul = [h, m](std::size_t x, std::size_t y) {
    const std::size_t i = x % h, j = x / h, k = y % h, l = y / h;
    if (j == 0) return (i + k) % h + l * h;
    const std::size_t base = (i + h - k) % h;
    if (l == 0) return base + h;
    return (base + m) % h;
  };
  return FiniteGroup::from_trusted_table(n, tabulate(n, mul), "Q" + std::to_string(n), limits);
}

std::size_t checked_factorial(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > cap / i + 1) return cap + 1;
    f *= i;
  }
  return f;
}

std::size_t lehmer_rank(const std::vector<std::uint8_t>& perm) {
  std::size_t rank = 0;
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

bool is_even(const std::vector<std::uint8_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] < perm[i]) ++inversions;
  return inversions % 2 == 0;
}

// Permutations in lexicographic order (identity first); product applies the
// left factor first: (p*q)(i) = q(p(i)).
FiniteGroup permutations(std::size_t n, bool even_only, const Limits& limits) {
  const std::string name = (even_only ? "A" : "S") + std::to_string(n);
  if (n == 0) throw Error(Errc::InvalidParam, name + ": degree must be >= 1");
  const std::size_t full = checked_factorial(n, limits.order_cap * 2 + 2);
  const std::size_t order = even_only && n >= 2 ? full / 2 : full;
  check_cap(order, limits, name);

  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::unordered_map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(lehmer_rank(perms[i]), i);

  std::vector<std::uint8_t> prod(n);
  auto mul = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) prod[i] = perms[b][perms[a][i]];
    return index.at(lehmer_rank(prod));
  };
  return FiniteGroup::from_trusted_table(perms.size(), tabulate(perms.size(), mul), name, limits);
}

// (a,b,c) = index a*p^2 + b*p + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg(std::size_t p, const Limits& limits) {
  if (p < 3 || !is_prime(p)) {
    throw Error(Errc::InvalidParam, "heisenberg parameter must be an odd prime, got " +
                                        std::to_string(p));
  }
  check_cap(p * p * p, limits, "Heis" + std::to_string(p));
  const std::size_t n = p * p * p;
  auto mul = [p](std::size_t x, std::size_t y) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
  };
  return FiniteGroup::from_trusted_table(n, tabulate(n, mul), "Heis" + std::to_string(p), limits);
}

// Digits base p; componentwise addition.
FiniteGroup elementary_abelian(std::size_t order, const Limits& limits) {
  std::size_t p = 0;
  for (std::size_t d = 2; d <= order; ++d) {
    if (order % d == 0) {
      p = d;
      break;
    }
  }
  std::size_t rest = order;
  while (p != 0 && rest % p == 0) rest /= p;
  if (order < 2 || rest != 1) {
    throw Error(Errc::InvalidParam, "elementary abelian order must be a prime power, got " +
                                        std::to_string(order));
  }
  std::size_t rank = 0;
  for (std::size_t q = order; q > 1; q /= p) ++rank;
  const std::string name = "C" + std::to_string(p) + "^" + std::to_string(rank);
  check_cap(order, limits, name);
  auto mul = [p](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    while (x > 0 || y > 0) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return out;
  };
  return FiniteGroup::from_trusted_table(order, tabulate(order, mul), name, limits);
}

std::size_t pow_mod(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cyclic: return "cyclic";
    case FamilyKind::dihedral: return "dihedral";
    case FamilyKind::dicyclic: return "dicyclic";
    case FamilyKind::symmetric: return "symmetric";
    case FamilyKind::alternating: return "alternating";
    case FamilyKind::heisenberg: return "heisenberg";
    case FamilyKind::elementary_abelian: return "elementary_abelian";
  }
  return "unknown";
}

FiniteGroup make_family(FamilyKind kind, std::size_t param, const Limits& limits) {
  switch (kind) {
    case FamilyKind::cyclic: return cyclic(param, limits);
    case FamilyKind::dihedral: return dihedral(param, limits);
    case FamilyKind::dicyclic: return dicyclic(param, limits);
    case FamilyKind::symmetric: return permutations(param, false, limits);
    case FamilyKind::alternating: return permutations(param, true, limits);
    case FamilyKind::heisenberg: return heisenberg(param, limits);
    case FamilyKind::elementary_abelian: return elementary_abelian(param, limits);
  }
  throw Error(Errc::InvalidParam, "unknown family");
}

FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k, const Limits& limits) {
  const std::string name =
      "C" + std::to_string(n) + ":C" + std::to_string(m) + "(k=" + std::to_string(k) + ")";
  if (n == 0 || m == 0) throw Error(Errc::InvalidParam, name + ": factor orders must be >= 1");
  const std::size_t kr = k % n;
  if (std::gcd(kr, n) != 1) {
    throw Error(Errc::InvalidTwist, name + ": gcd(k, n) = " + std::to_string(std::gcd(kr, n)));
  }
  if (pow_mod(kr, m, n) != 1 % n) {
    throw Error(Errc::InvalidTwist, name + ": k^m = " + std::to_string(pow_mod(kr, m, n)) +
                                        " (mod " + std::to_string(n) + "), expected 1");
  }
  if (n > limits.order_cap || m > limits.order_cap / n) {
    throw Error(Errc::ExceedsCap, name + " exceeds the order cap of " +
                                      std::to_string(limits.order_cap));
  }
  check_cap(n * m, limits, name);

  std::vector<std::size_t> twist(m);
  for (std::size_t t = 0; t < m; ++t) twist[t] = pow_mod(kr, t, n);
  // (a, t) has index a + n*t.
  auto mul = [&](std::size_t x, std::size_t y) {
    const std::size_t a1 = x % n, t1 = x / n, a2 = y % n, t2 = y / n;
    return (a1 + twist[t1] * a2) % n + ((t1 + t2) % m) * n;
  };
  return FiniteGroup::from_trusted_table(n * m, tabulate(n * m, mul), name, limits);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const std::string name = a.name() + "x" + b.name();
  if (b.order() > limits.order_cap / a.order()) {
    throw Error(Errc::ExceedsCap, name + " exceeds the order cap of " +
                                      std::to_string(limits.order_cap));
  }
  const std::size_t nb = b.order();
  check_cap(a.order() * nb, limits, name);
  auto mul = [&](std::size_t x, std::size_t y) {
    return std::size_t{a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb))} * nb +
           b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
  };
  return FiniteGroup::from_trusted_table(a.order() * nb, tabulate(a.order() * nb, mul), name, limits);
}

}  // namespace centra
