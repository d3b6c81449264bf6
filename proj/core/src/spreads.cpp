#include "clforms/spreads.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "clforms/error.hpp"

namespace clforms {

namespace {

// Inverse by row reduction of [m | I]; m must be invertible.
FqMatrix inverse(const FqMatrix& m) {
  const std::size_t n = m.rows();
  FqMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  Rref red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) fail(ErrorCode::PreconditionViolated, "matrix is singular");
  FqMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.form(r, n + c));
  return inv;
}

FqMatrix random_matrix(const SpaceParams& sp, std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  FqMatrix m(sp.field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<Elem>(rng() % sp.q));
  return m;
}

FqMatrix random_invertible(const SpaceParams& sp, std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    FqMatrix m = random_matrix(sp, rng, n, n);
    if (rank(m) == n) return m;
  }
}

std::uint64_t key_of_matrix(const SpaceParams& sp, const FqMatrix& a) { return vertex_key(sp, Vertex{a}); }

}  // namespace

SpaceTransform SpaceTransform::identity(const SpaceParams& sp) {
  return {FqMatrix::identity(sp.field, sp.n), FqMatrix::identity(sp.field, sp.l), FqMatrix(sp.field, sp.l, sp.n)};
}

SpaceTransform SpaceTransform::random(const SpaceParams& sp, std::uint64_t seed) {
  if (seed == 0) return identity(sp);
  std::mt19937_64 rng(seed);
  SpaceTransform t;
  t.s = random_invertible(sp, rng, sp.n);
  t.t = random_invertible(sp, rng, sp.l);
  t.r = random_matrix(sp, rng, sp.l, sp.n);
  return t;
}

std::uint64_t SpaceTransform::apply(const SpaceParams& sp, std::uint64_t vertex) const {
  const FqMatrix a = vertex_from_key(sp, vertex).a;
  return key_of_matrix(sp, (t * a + r) * inverse(s));
}

FqMatrix multiplication_block(const ExtField& ext, const ExtField::Element& a, unsigned n) {
  const unsigned k = ext.degree();
  FqMatrix m(ext.base(), k, n);
  for (unsigned i = 0; i < n; ++i) {
    const auto col = ext.mul(a, ext.basis(i));
    for (unsigned r = 0; r < k; ++r) m.set(r, i, col[r]);
  }
  return m;
}

Spread spread(const SpaceParams& sp, std::uint64_t seed) {
  const ExtField ext(sp.field, sp.l);
  Spread s;
  s.members.reserve(ext.size());
  for (std::uint64_t i = 0; i < ext.size(); ++i)
    s.members.push_back(key_of_matrix(sp, multiplication_block(ext, ext.from_index(i), sp.n)));
  std::sort(s.members.begin(), s.members.end());
  s.origin = "field multiplication in F_" + std::to_string(sp.q) + "^" + std::to_string(sp.l);
  if (seed == 0) return s;
  return transformed_spread(sp, s, seed);
}

Spread transformed_spread(const SpaceParams& sp, const Spread& s, std::uint64_t seed) {
  const SpaceTransform t = SpaceTransform::random(sp, seed);
  const FqMatrix s_inv = inverse(t.s);
  Spread out;
  out.members.reserve(s.members.size());
  for (auto v : s.members) {
    const FqMatrix a = vertex_from_key(sp, v).a;
    out.members.push_back(key_of_matrix(sp, (t.t * a + t.r) * s_inv));
  }
  std::sort(out.members.begin(), out.members.end());
  out.origin = s.origin + ", transform seed " + std::to_string(seed);
  return out;
}

std::vector<std::uint32_t> covered_points(const AttenuatedSpace& space, const std::vector<std::uint64_t>& members) {
  std::vector<std::uint32_t> out;
  for (auto v : members)
    for (auto p : space.points_on(v)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_spread(const AttenuatedSpace& space, const Spread& s) {
  const auto& sp = space.params();
  std::uint64_t ql = 1;
  for (unsigned i = 0; i < sp.l; ++i) ql *= sp.q;
  if (s.members.size() != ql) return false;
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      if (!space.disjoint(s.members[i], s.members[j])) return false;
  const auto cov = covered_points(space, s.members);
  if (cov.size() != space.point_count()) return false;
  for (std::size_t i = 0; i < cov.size(); ++i)
    if (cov[i] != i) return false;
  return true;
}

std::vector<std::uint64_t> sigma_spread(const AttenuatedSpace& space, std::uint64_t pi, std::uint64_t pi_prime) {
  if (!space.disjoint(pi, pi_prime)) fail(ErrorCode::PreconditionViolated, "sigma_spread needs disjoint vertices");
  const auto& sp = space.params();
  const FqMatrix a = vertex_from_key(sp, pi).a;
  const FqMatrix d = vertex_from_key(sp, pi_prime).a - a;
  const ExtField ext(sp.field, sp.n);
  std::vector<std::uint64_t> out;
  out.reserve(ext.size());
  for (std::uint64_t i = 0; i < ext.size(); ++i)
    out.push_back(key_of_matrix(sp, a + d * multiplication_block(ext, ext.from_index(i), sp.n)));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet to_vertex_set(const SpaceParams& sp, const std::vector<std::uint64_t>& members) {
  return VertexSet(sp, members);
}

}  // namespace clforms
