#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace centra {

using Element = std::uint16_t;

/// Fixed-length bit vector over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }

  /// Lowest member, or universe() when empty.
  std::size_t find_first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace centra
