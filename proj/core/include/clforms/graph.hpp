#pragma once

// Small dense graphs on bitsets and an exact maximum clique search
// (branch and bound with greedy colouring bounds).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace clforms {

class Graph {
 public:
  explicit Graph(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const noexcept {
    return (adj_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  const std::uint64_t* row(std::size_t a) const noexcept { return adj_.data() + a * words_; }
  std::size_t words() const noexcept { return words_; }

  Graph complement() const;

 private:
  std::size_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

/// Vertices of one maximum clique, ascending. Deterministic. Throws
/// CapExceeded after node_budget search nodes (0 = unlimited).
std::vector<std::size_t> max_clique(const Graph& g, std::uint64_t node_budget = 0);

}  // namespace clforms
