#include "clforms/vertex_set.hpp"

#include <bit>
#include <string>

#include "clforms/error.hpp"

namespace clforms {

VertexSet::VertexSet(const SpaceParams& sp)
    : sp_(sp), universe_(sp.vertex_count()), words_((universe_ + 63) / 64, 0) {}

VertexSet::VertexSet(const SpaceParams& sp, std::span<const std::uint64_t> indices) : VertexSet(sp) {
  for (std::uint64_t v : indices) {
    if (v >= universe_) fail(ErrorCode::BadParams, "vertex index " + std::to_string(v) + " out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(const SpaceParams& sp) {
  VertexSet s(sp);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.mask_tail();
  return s;
}

void VertexSet::mask_tail() noexcept {
  if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

void VertexSet::require_compatible(const VertexSet& other) const {
  if (!(sp_ == other.sp_)) fail(ErrorCode::AmbientMismatch, "vertex sets over different parameters");
}

std::uint64_t VertexSet::size() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<std::uint64_t> VertexSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.mask_tail();
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::uint64_t VertexSet::intersection_size(const VertexSet& other) const {
  require_compatible(other);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) n += std::popcount(words_[i] & other.words_[i]);
  return n;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering canonical_compare(const VertexSet& a, const VertexSet& b) {
  a.require_compatible(b);
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace clforms
