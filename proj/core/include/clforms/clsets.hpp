#pragma once

// Cameron-Liebler sets of the bilinear forms graph: constructions, closure
// operations, the multi-definition verdict and a triviality classifier.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/bigint.hpp"
#include "clforms/spectral.hpp"
#include "clforms/spreads.hpp"
#include "clforms/vertex_set.hpp"

namespace clforms {

// ---- constructions ----

/// All vertices through p.
VertexSet point_pencil(const AttenuatedSpace& space, const Point& p);
/// All vertices inside h.
VertexSet hyperplane_set(const SpaceParams& sp, const TypedHyperplane& h);
/// Pencil of tau together with the vertices of V, for tau not in V. Throws
/// PreconditionViolated when tau lies in V.
VertexSet pencil_hyperplane_union(const AttenuatedSpace& space, const Point& tau, const TypedHyperplane& v);
/// Union of the pencils of the first k points tau_v = <e_1 + sum v_i e_{n+i}>
/// (v in index order), 0 <= k <= q^l. Throws BadParams otherwise.
VertexSet e1_pencil_union(const AttenuatedSpace& space, std::uint64_t k);
/// Union of the vertex sets of the hyperplanes V_x, x = the first y vectors of
/// F_q^n in index order. These are pairwise disjoint. Requires 0 <= y <= q^n.
VertexSet hyperplane_union(const SpaceParams& sp, std::uint64_t y);
/// hyperplane_union for l > n >= 2 and 1 <= y < q^{n-1}; BadParams otherwise.
VertexSet nontrivial_family(const SpaceParams& sp, std::uint64_t y);

enum class ClosureOp { Complement, UnionDisjoint, DifferenceNested };

/// Complement ignores b. UnionDisjoint needs a ∩ b empty, DifferenceNested
/// needs b ⊆ a; violations throw PreconditionViolated.
VertexSet closure(const VertexSet& a, const VertexSet& b, ClosureOp op);

/// |L| q^{-(n-1)l}.
Rational cl_parameter(const VertexSet& s);

// ---- verdict ----

enum class Level { Fast, Full };
enum class Outcome { Pass, Fail, Skipped };

/// Definition names in report order.
inline constexpr std::array<const char*, 6> kDefinitions = {
    "image", "kernel_orth", "disjoint_count", "eigen_V1", "spread_sampled", "switching_sampled"};

struct Witness {
  std::string definition;
  std::optional<std::uint64_t> vertex;
  std::string detail;
};

struct CLVerdict {
  bool is_cl = false;
  Rational x;
  bool integral_size = true;  // false: NonIntegralSize, every test skipped
  std::array<Outcome, kDefinitions.size()> per_definition{};
  std::vector<Witness> witnesses;
  bool eigen_zero_vector = false;  // v = 0, counted as a pass

  Outcome outcome(const std::string& definition) const;
};

const char* to_string(Outcome o) noexcept;

struct VerdictOptions {
  unsigned transformed_spreads = 8;
  std::uint64_t seed = 1;
};

/// Caches spreads, Delta and (for Full) the spectral matrices of one space.
class VerdictEngine {
 public:
  explicit VerdictEngine(const AttenuatedSpace& space, VerdictOptions opts = {});

  const AttenuatedSpace& space() const noexcept { return *space_; }
  const std::vector<Spread>& spreads() const noexcept { return spreads_; }
  const Spectral& spectral() const;

  CLVerdict verdict(const VertexSet& l, Level level) const;

  /// Disjointness count: for every vertex w, |{w' in L disjoint from w}| =
  /// (x - [w in L]) Delta. Returns the first failing vertex, if any.
  std::optional<std::uint64_t> disjoint_count_violation(const VertexSet& l) const;
  bool kernel_orthogonal(const VertexSet& l) const;
  /// chi_L in the column space of M^t, by comparing ranks.
  bool in_image(const VertexSet& l) const;
  Membership eigen_v1(const VertexSet& l) const;

 private:
  const AttenuatedSpace* space_;
  VerdictOptions opts_;
  BigInt delta_;
  BigInt block_;  // q^{(n-1)l}
  std::vector<Spread> spreads_;
  mutable std::once_flag spectral_once_;
  mutable std::unique_ptr<Spectral> spectral_;
  mutable std::once_flag rank_once_;
  mutable std::size_t rank_m_ = 0;
};

// ---- triviality ----

struct TrivialityReport {
  bool trivial_as_pencil_union = false;
  std::vector<Point> cover;              // pencils of the decomposition
  std::vector<Subspace> subspace_cover;  // n = l: blocks {pi : pi in U}
  bool unresolved = true;
  bool nontrivial_certified = false;  // x * max_intersecting < |L|
  std::uint64_t max_intersecting = 0;
  bool search_exhausted = false;  // every decomposition into maximum families was tried
};

/// Tries to split L into x maximum intersecting families (pencils, and for
/// n = l also the vertices inside a fixed (2n-1, n-1) subspace U). Throws
/// NotCL unless L is CL with integral x.
TrivialityReport classify_trivial(const VerdictEngine& engine, const VertexSet& l,
                                  std::uint64_t node_budget = 1'000'000);

// ---- per-member censuses ----

/// Members of L meeting w (w itself included when w in L).
std::uint64_t meeting_count(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t w);
/// Members of L disjoint from both a and b.
std::uint64_t common_disjoint_count(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t a,
                                    std::uint64_t b);

struct PairCensus {
  std::uint64_t pi = 0;
  std::uint64_t pi_prime = 0;
  std::uint64_t s0_meet = 0;  // |S_0 ∩ L|
  std::uint64_t d2 = 0;       // census
  Rational d2_formula;
  std::optional<Rational> d2_prime;  // (x - 2) W_Sigma
  std::uint64_t s2 = 0;              // members meeting both
  Rational s2_formula;
};

/// Census of d_2 and s_2 for the disjoint pair (pi, pi') against the spread
/// S_0 = sigma_spread(pi, pi').
PairCensus pair_census(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t pi, std::uint64_t pi_prime);

}  // namespace clforms
