#pragma once

// Closed-form counts for Bil_q(n,l) and the attenuated space, in exact
// arithmetic. Brute-force counterparts live in census.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clforms/bigint.hpp"
#include "clforms/space.hpp"

namespace clforms {

/// [n choose k]_q; 0 when k < 0 or k > n.
BigInt gaussian_binomial(std::int64_t n, std::int64_t k, unsigned q);

/// prod_{s=from..to} (q^{base+s} - 1), exact even when an exponent is negative.
Rational q_product(unsigned q, std::int64_t base, std::int64_t from, std::int64_t to);

/// Number of n x l matrices of rank m. Throws BadRank if m > min(n, l).
BigInt rank_count(unsigned n, unsigned l, unsigned m, unsigned q);

/// Vertices through a fixed subspace of type (i,0) counted among type (j,0):
/// q^{l(j-i)} [n-i choose j-i]_q. Throws BadIndices unless 1 <= i <= j <= n.
BigInt count_through(unsigned i, unsigned j, const SpaceParams& sp);

/// Vertices disjoint from a fixed vertex.
BigInt disjoint_count(const SpaceParams& sp);
/// Vertices through a point that are disjoint from a vertex missing the point.
BigInt delta(const SpaceParams& sp);
/// q^{(n-1)l} - delta.
BigInt c_count(const SpaceParams& sp);
/// Vertices inside a typed hyperplane V disjoint from a vertex pi.
BigInt hyperplane_disjoint(const SpaceParams& sp, bool pi_in_v);

/// In F_q^{2n} with pi_1, pi_2 disjoint n-spaces and sigma_0 a k-space
/// disjoint from both: m-spaces through sigma_0 disjoint from pi_1, pi_2.
/// Throws BadIndices unless 1 <= k <= m <= n.
BigInt d_km(unsigned q, unsigned n, unsigned k, unsigned m);
/// Pairs (tau, sigma): tau a k-space of pi_3, sigma an m-space disjoint from
/// pi_1 and pi_2 with tau in sigma. Equals [n choose k]_q d_km.
BigInt x_km(unsigned q, unsigned n, unsigned k, unsigned m);
/// m-spaces disjoint from pi_1, pi_2 meeting pi_3 in dimension exactly k,
/// by the alternating sum over x_im.
BigInt z_km(unsigned q, unsigned n, unsigned k, unsigned m);
/// m-spaces disjoint from pi_1, pi_2, pi_3 (closed form). 0 <= m <= n.
BigInt z_0m(unsigned q, unsigned n, unsigned m);
/// x_km recomputed from z: sum_{i=k..m} z_im [i choose k]_q.
BigInt x_from_z(unsigned q, unsigned n, unsigned k, unsigned m);

struct WCounts {
  std::vector<BigInt> w;  // W_0..W_n
  BigInt total;
  /// Common-disjoint vertices through a point of Sigma off pi, pi', E, as
  /// written: sum_{i>=1} W_i (q^i - 1) / ((q^n - 1)(q^n - 2)). Empty when the
  /// denominator vanishes (q = 2, n = 1).
  std::optional<Rational> w_sigma;
  /// Same quantity from the double count: sum W_i [i,1] / ([2n,1] - 3[n,1]).
  std::optional<Rational> w_sigma_double_count;
  /// Through a point outside Sigma: sum_{i<n} W_i (q^n - q^i) /
  /// (q^n (q^{l-n} - 1)(q^n - 1)). Empty when l = n.
  std::optional<Rational> w_sigma_bar;
  std::optional<Rational> w_sigma_bar_double_count;
};

WCounts w_counts(const SpaceParams& sp);
BigInt w_i(const SpaceParams& sp, unsigned i);

struct SBounds {
  BigInt s1;
  std::optional<Rational> d2_prime;
  std::optional<Rational> s2_prime;
};

SBounds s_bounds(const SpaceParams& sp, std::int64_t x);
BigInt s1(const SpaceParams& sp, std::int64_t x);
/// d_2 = (W_Sigma - W_SigmaBar)|S_0 ∩ L| - 2 W_Sigma + x W_SigmaBar.
/// Throws OutOfScopeParams when W_Sigma or W_SigmaBar is undefined.
Rational d2_formula(const SpaceParams& sp, std::int64_t x, std::uint64_t s0_meet);
Rational s2_formula(const SpaceParams& sp, std::int64_t x, std::uint64_t s0_meet);

struct Eigen {
  BigInt value;
  BigInt multiplicity;
};

struct Spectra {
  std::vector<Eigen> g;   // point graph G
  std::vector<Eigen> n;   // N = M M^t
  std::vector<Eigen> ak;  // lambda_0..lambda_n with dim V_j
  BigInt rank_m;
};

Spectra spectra(const SpaceParams& sp);
BigInt lambda(const SpaceParams& sp, unsigned j);

/// Number of vertices through a point tau meeting a vertex pi (tau not on
/// pi) in exactly a 1-space.
BigInt point_meet_count(const SpaceParams& sp);

struct ClassificationBounds {
  bool in_range = false;
  BigInt ekr_bound;
  BigInt hm_bound;
  bool delta_order_ok = false;   // q^{(n-1)l} > Delta > W_Sigma
  bool delta_vs_c_ok = false;    // Delta > x^2 C
  bool w_sigma_gap_ok = false;   // W_Sigma <= Delta - C
  bool greedy_union_ok = false;  // f s1 - C(f,2) s2' > x q^{(n-1)l}, f = floor(3x/2)
  BigInt point_meet_count;
  bool pair_bound_ok = false;    // (x-1)/(f-2) Delta - (f-3) s2' beats the n-dependent bound
  bool union_bound_ok = false;   // f s1 - C(f,2) s2' >= x q^{(n-1)l}
  bool c_bound_ok = false;       // C <= [n,1] q^{l(n-2)} < q^{n+l(n-2)}/(q-1)
  Rational w_sigma;
  BigInt delta;
  BigInt c;
  BigInt s1;
  Rational s2_prime;
};

/// Throws OutOfScopeParams unless l >= 2n >= 4 and x >= 2.
ClassificationBounds classification_bounds(const SpaceParams& sp, std::int64_t x);

/// Hilton-Milner bound for intersecting families with trivial common
/// intersection. Throws OutOfScopeParams unless l >= n+1 >= 3 and
/// (q, l) != (2, n+1).
BigInt hm_bound(const SpaceParams& sp);

struct FormulaArgs {
  unsigned q = 0;
  unsigned n = 0;
  unsigned l = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t x = 0;
  bool pi_in_v = false;
};

struct CountResult {
  std::string formula_id;
  Rational value;
  FormulaArgs args;
};

/// Names accepted by evaluate_formula.
const std::vector<std::string>& formula_ids();
/// Dispatches by name; throws BadParams for an unknown id.
CountResult evaluate_formula(const std::string& formula_id, const FormulaArgs& args);

}  // namespace clforms
