#include "clforms/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "clforms/error.hpp"

namespace clforms {

Graph::Graph(std::size_t order) : order_(order), words_((order + 63) / 64), adj_(order * words_, 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= order_ || b >= order_) fail(ErrorCode::BadIndices, "edge endpoint out of range");
  if (a == b) return;
  adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  adj_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

Graph Graph::complement() const {
  Graph c(order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (!adjacent(a, b)) c.add_edge(a, b);
  return c;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  static bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
  }

  // Greedy colouring of the candidates: order[i] gets colour bound[i]
  // (non-decreasing), so a branch at i can add at most bound[i] vertices.
  void colour(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bits uncoloured = cand;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits avail = uncoloured;
      while (any(avail)) {
        std::size_t w = 0;
        while (avail[w] == 0) ++w;
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(avail[w]));
        avail[w] &= avail[w] - 1;
        uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* nb = g.row(v);
        for (std::size_t k = 0; k < avail.size(); ++k) avail[k] &= ~nb[k];
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(Bits cand) {
    if (budget && ++nodes > budget)
      fail(ErrorCode::CapExceeded, "clique search exceeded " + std::to_string(budget) + " nodes");
    std::vector<std::size_t> order, bound;
    colour(cand, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next(cand.size());
      const std::uint64_t* nb = g.row(v);
      for (std::size_t k = 0; k < cand.size(); ++k) next[k] = cand[k] & nb[k];
      if (any(next)) {
        expand(std::move(next));
      } else if (current.size() > best.size()) {
        best = current;
      }
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }
};

}  // namespace

std::vector<std::size_t> max_clique(const Graph& g, std::uint64_t node_budget) {
  if (g.order() == 0) return {};
  CliqueSearch s{g, node_budget, 0, {}, {}};
  Bits all(g.words(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  s.expand(std::move(all));
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

}  // namespace clforms
