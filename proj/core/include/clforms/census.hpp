#pragma once

// Brute-force counterparts of the closed forms in counting.hpp. Every census
// enumerates subspaces explicitly (RREF enumeration over F_q) and tests
// incidence with generic subspace operations; none of them evaluates a
// product formula.
//
// Fixed configurations:
//   point tau = <e_1 + e_{n+1}>, vertex pi = <e_1..e_n>,
//   in F_q^{2n}: pi_1 = <e_1..e_n>, pi_2 = <e_{n+1}..e_{2n}>,
//   pi_3 = <e_i + e_{n+i}>, sigma_0 = <e_i + e_{n+i} : i <= k>,
//   for W: pi = [I; 0] with A = 0 and pi' with A = [I_n; 0].

#include <cstdint>
#include <string>

#include "clforms/bigint.hpp"
#include "clforms/counting.hpp"
#include "clforms/space.hpp"

namespace clforms::census {

inline constexpr std::uint64_t kDefaultCensusCap = std::uint64_t{1} << 18;

std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t rank_count(unsigned n, unsigned l, unsigned m, unsigned q, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t count_through(unsigned i, unsigned j, const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t disjoint_count(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t delta(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t c_count(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t hyperplane_disjoint(const SpaceParams& sp, bool pi_in_v, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t d_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t x_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap = kDefaultCensusCap);
/// k = 0 counts m-spaces disjoint from all three.
std::uint64_t z_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t w_i(const SpaceParams& sp, unsigned i, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t w_total(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
std::uint64_t point_meet_count(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);

/// Per-point counts of common-disjoint vertices through a point.
struct PointCensus {
  std::uint64_t points = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;
  Rational average() const { return points ? Rational(sum, points) : Rational(0); }
};

/// Points of Sigma outside pi, pi' (and so outside E).
PointCensus w_sigma(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);
/// Points outside Sigma. Empty census when l = n.
PointCensus w_sigma_bar(const SpaceParams& sp, std::uint64_t cap = kDefaultCensusCap);

/// Oracle value for a formula id from counting::formula_ids(). Throws
/// BadParams for ids without a census and CapExceeded past cap.
Rational evaluate(const std::string& formula_id, const FormulaArgs& args, std::uint64_t cap = kDefaultCensusCap);

}  // namespace clforms::census
