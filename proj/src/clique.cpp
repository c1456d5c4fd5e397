#include "clique.hpp"

#include <algorithm>
#include <numeric>

namespace centra::detail {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<ElementSet>& adjacency) : adj_(adjacency) {}

  std::size_t run() {
    if (adj_.empty()) return 0;
    expand(ElementSet::full(adj_.size()), 0);
    return best_;
  }

 private:
  void expand(ElementSet candidates, std::size_t depth) {
    std::vector<Element> order;
    std::vector<std::size_t> colour;
    greedy_colour(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= best_) return;
      const Element v = order[i];
      ElementSet next = candidates & adj_[v];
      if (next.none()) {
        if (depth + 1 > best_) best_ = depth + 1;
      } else {
        expand(std::move(next), depth + 1);
      }
      candidates.reset(v);
    }
  }

  // Colour classes are independent sets, so a vertex coloured c bounds the
  // clique that can still be built from it and the vertices before it.
  void greedy_colour(const ElementSet& candidates, std::vector<Element>& order,
                     std::vector<std::size_t>& colour) const {
    ElementSet uncoloured = candidates;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      ElementSet pool = uncoloured;
      for (std::size_t v = pool.find_first(); v < pool.universe(); v = pool.find_first()) {
        const auto ve = static_cast<Element>(v);
        pool.reset(ve);
        pool -= adj_[ve];
        uncoloured.reset(ve);
        order.push_back(ve);
        colour.push_back(k);
      }
    }
  }

  const std::vector<ElementSet>& adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t max_clique_size(const std::vector<ElementSet>& adjacency) {
  // Relabel by descending degree so the first colour classes hold the
  // best-connected vertices.
  const std::size_t n = adjacency.size();
  std::vector<Element> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Element{0});
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Element a, Element b) {
    return adjacency[a].count() > adjacency[b].count();
  });
  std::vector<Element> label(n);
  for (std::size_t i = 0; i < n; ++i) label[by_degree[i]] = static_cast<Element>(i);
  std::vector<ElementSet> sorted(n, ElementSet(n));
  for (std::size_t v = 0; v < n; ++v)
    adjacency[v].for_each([&](Element u) { sorted[label[v]].set(label[u]); });
  return CliqueSearch(sorted).run();
}

}  // namespace centra::detail
