#pragma once

// The attenuated space A_q(n+l, E) in rank-metric coordinates.
//
// A vertex is an l x n matrix A standing for the column space of [I_n; A].
// A point is a pair (u, v) with u != 0 normalized (first nonzero entry 1),
// standing for <(u; v)>; it lies on A iff A u = v. Two vertices meet in
// dimension n - rank(A - B).

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "clforms/fqlinalg.hpp"
#include "clforms/space.hpp"
#include "clforms/vertex_set.hpp"

namespace clforms {

struct Vertex {
  FqMatrix a;  // l x n
};

struct Point {
  std::vector<Elem> u;  // length n, first nonzero entry 1
  std::vector<Elem> v;  // length l

  friend bool operator==(const Point&, const Point&) = default;
};

/// The hyperplane {(u; w) : a.u + b.w = 0}; b != 0 with first nonzero entry 1.
struct TypedHyperplane {
  std::vector<Elem> a;  // length n
  std::vector<Elem> b;  // length l

  friend bool operator==(const TypedHyperplane&, const TypedHyperplane&) = default;
};

/// Row-major base-q key, entry (0,0) most significant.
std::uint64_t vertex_key(const SpaceParams& sp, const Vertex& w);
Vertex vertex_from_key(const SpaceParams& sp, std::uint64_t key);
Vertex make_vertex(const SpaceParams& sp, std::span<const Elem> row_major);

/// Scales (u, v) so that u is normalized. Throws BadParams when u = 0.
Point make_point(const SpaceParams& sp, std::span<const Elem> u, std::span<const Elem> v);
/// Base-q key of the concatenation (u; v), first coordinate most significant.
std::uint64_t point_key(const SpaceParams& sp, const Point& p);

/// Scales (a, b) so that b is normalized. Throws BadParams when b = 0.
TypedHyperplane make_hyperplane(const SpaceParams& sp, std::span<const Elem> a, std::span<const Elem> b);

std::vector<Vertex> enumerate_vertices(const SpaceParams& sp, std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Point> enumerate_points(const SpaceParams& sp, std::uint64_t cap = kDefaultEnumerationCap);
/// All typed hyperplanes, ordered by the key of (a; b).
std::vector<TypedHyperplane> enumerate_typed_hyperplanes(const SpaceParams& sp,
                                                         std::uint64_t cap = kDefaultEnumerationCap);

bool incident(const Point& p, const Vertex& w);
unsigned dim_intersection(const Vertex& w1, const Vertex& w2);
bool in_hyperplane(const TypedHyperplane& h, const Vertex& w);
bool in_hyperplane(const SpaceParams& sp, const TypedHyperplane& h, const Point& p);

Subspace vertex_subspace(const SpaceParams& sp, const Vertex& w);
Subspace point_subspace(const SpaceParams& sp, const Point& p);
Subspace hyperplane_subspace(const SpaceParams& sp, const TypedHyperplane& h);
Subspace e_subspace(const SpaceParams& sp);

/// Subspaces P of F_q^{n+l} with dim P = m and dim(P ∩ E) = k, in RREF order.
/// Throws BadParams unless k <= min(m, l) and m - k <= n; CapExceeded past cap.
std::vector<Subspace> enumerate_typed_subspaces(const SpaceParams& sp, unsigned m, unsigned k,
                                                std::uint64_t cap = kDefaultEnumerationCap);
std::uint64_t count_typed_subspaces(const SpaceParams& sp, unsigned m, unsigned k);

VertexSet vertices_in_hyperplane(const SpaceParams& sp, const TypedHyperplane& h);

/// V_x = {A : first row of A is x^t}, i.e. a = -x, b = e_1.
TypedHyperplane first_row_hyperplane(const SpaceParams& sp, std::span<const Elem> x);
/// tau_v = <e_1 + sum v_i e_{n+i}>.
Point e1_point(const SpaceParams& sp, std::span<const Elem> v);

/// Base-q digits of index, most significant first.
std::vector<Elem> digits_of_index(unsigned q, std::uint64_t index, std::size_t length);

/// Precomputed tables over one parameter set: vertex digits, ranks of all
/// l x n matrices, point incidences, pencils and disjointness rows. The
/// pencil and disjointness tables are built on first use.
class AttenuatedSpace {
 public:
  explicit AttenuatedSpace(const SpaceParams& sp, std::uint64_t cap = kDefaultEnumerationCap);

  const SpaceParams& params() const noexcept { return sp_; }
  std::uint64_t vertex_count() const noexcept { return vertex_count_; }
  std::uint64_t point_count() const noexcept { return points_.size(); }

  std::span<const Elem> digits(std::uint64_t v) const noexcept {
    return {digits_.data() + v * entries_, entries_};
  }
  Vertex vertex(std::uint64_t v) const { return vertex_from_key(sp_, v); }

  unsigned rank_of_key(std::uint64_t key) const noexcept { return rank_[key]; }
  std::uint64_t difference_key(std::uint64_t a, std::uint64_t b) const noexcept;
  /// rank(A - B) = n - dim(A ∩ B).
  unsigned distance(std::uint64_t a, std::uint64_t b) const noexcept { return rank_[difference_key(a, b)]; }
  bool disjoint(std::uint64_t a, std::uint64_t b) const noexcept { return distance(a, b) == sp_.n; }

  const std::vector<Point>& points() const noexcept { return points_; }
  /// Throws BadParams for a point that is not normalized.
  std::uint64_t point_index(const Point& p) const;
  /// Indices of the (q^n-1)/(q-1) points on vertex v, ascending.
  std::span<const std::uint32_t> points_on(std::uint64_t v) const noexcept {
    return {points_on_.data() + v * per_vertex_, per_vertex_};
  }

  const VertexSet& pencil(std::uint64_t point) const;
  /// Vertices disjoint from v. Throws CapExceeded for more than 2^14 vertices.
  const VertexSet& disjoint_set(std::uint64_t v) const;

 private:
  void build_pencils() const;
  void build_disjointness() const;

  SpaceParams sp_;
  std::uint64_t vertex_count_ = 0;
  std::size_t entries_ = 0;
  std::size_t per_vertex_ = 0;
  bool char2_ = false;
  std::vector<Elem> digits_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint64_t> place_;  // q^{nl-1-i}
  std::vector<Point> points_;
  std::vector<std::uint32_t> point_lookup_;  // point key -> index + 1, 0 if absent
  std::vector<std::uint32_t> points_on_;

  mutable std::once_flag pencils_once_;
  mutable std::vector<VertexSet> pencils_;
  mutable std::once_flag disjoint_once_;
  mutable std::vector<VertexSet> disjoint_;
};

inline constexpr std::uint64_t kMaxDisjointnessVertices = std::uint64_t{1} << 14;

}  // namespace clforms
