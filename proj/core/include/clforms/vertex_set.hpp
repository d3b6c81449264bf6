#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <compare>
#include <vector>

#include "clforms/space.hpp"

namespace clforms {

/// A subset of the vertices of Bil_q(n,l), stored as a bit vector over the
/// canonical vertex order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(const SpaceParams& sp);
  VertexSet(const SpaceParams& sp, std::span<const std::uint64_t> indices);

  static VertexSet full(const SpaceParams& sp);

  const SpaceParams& params() const noexcept { return sp_; }
  std::uint64_t universe() const noexcept { return universe_; }

  bool contains(std::uint64_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(std::uint64_t v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::uint64_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::uint64_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<std::uint64_t> indices() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  std::uint64_t intersection_size(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.sp_ == b.sp_ && a.words_ == b.words_;
  }

  /// Canonical order: the bit vector read as a binary integer in which
  /// vertex i contributes 2^i.
  friend std::strong_ordering canonical_compare(const VertexSet& a, const VertexSet& b);

 private:
  void require_compatible(const VertexSet& other) const;
  void mask_tail() noexcept;

  SpaceParams sp_;
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline bool canonical_less(const VertexSet& a, const VertexSet& b) { return canonical_compare(a, b) < 0; }

}  // namespace clforms
