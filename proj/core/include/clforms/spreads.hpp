#pragma once

// Attenuated n-spreads: q^l pairwise disjoint vertices covering every point
// once. The base spread comes from multiplication in F_{q^l}; further
// spreads are images under seeded automorphisms (u; v) -> (S u; T v + R u).

#include <cstdint>
#include <string>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/fqlinalg.hpp"
#include "clforms/space.hpp"
#include "clforms/vertex_set.hpp"

namespace clforms {

struct Spread {
  std::vector<std::uint64_t> members;  // vertex keys, ascending
  std::string origin;
};

/// Automorphism of the attenuated space fixing E, acting on vertices by
/// A -> (T A + R) S^{-1}.
struct SpaceTransform {
  FqMatrix s;  // n x n, invertible
  FqMatrix t;  // l x l, invertible
  FqMatrix r;  // l x n

  static SpaceTransform identity(const SpaceParams& sp);
  /// Seed 0 gives the identity; other seeds draw S, T, R from mt19937_64.
  static SpaceTransform random(const SpaceParams& sp, std::uint64_t seed);

  std::uint64_t apply(const SpaceParams& sp, std::uint64_t vertex) const;
};

/// n x n matrix of multiplication by a in F_{q^k} on the first n power-basis
/// coordinates: column i holds the coordinates of a t^i (k rows).
FqMatrix multiplication_block(const ExtField& ext, const ExtField::Element& a, unsigned n);

/// {A_alpha : alpha in F_{q^l}} with A_alpha u = alpha * phi(u) and phi(u) =
/// sum u_i t^{i-1}. Seed 0 is this base spread; other seeds return
/// transformed_spread(base, seed).
Spread spread(const SpaceParams& sp, std::uint64_t seed = 0);
Spread transformed_spread(const SpaceParams& sp, const Spread& s, std::uint64_t seed);

/// Size q^l, pairwise disjoint members, every point covered exactly once.
bool check_spread(const AttenuatedSpace& space, const Spread& s);

/// Points covered by a set of vertices, as a sorted list of point indices;
/// duplicates are kept so that multiple coverage is visible.
std::vector<std::uint32_t> covered_points(const AttenuatedSpace& space, const std::vector<std::uint64_t>& members);

/// An attenuated n-spread of Sigma = <pi, pi'> relative to Sigma ∩ E:
/// {pi + D B_alpha} with D = A_{pi'} - A_pi and B_alpha multiplication in
/// F_{q^n}. Contains pi and pi'. Throws PreconditionViolated unless pi and
/// pi' are disjoint.
std::vector<std::uint64_t> sigma_spread(const AttenuatedSpace& space, std::uint64_t pi, std::uint64_t pi_prime);

VertexSet to_vertex_set(const SpaceParams& sp, const std::vector<std::uint64_t>& members);

}  // namespace clforms
