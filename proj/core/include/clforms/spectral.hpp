#pragma once

// Exact matrices attached to the bilinear forms graph: the point-vertex
// incidence M, the Gram matrix N = M M^t, the disjointness (q-Kneser)
// adjacency K and the point graph A, together with exact spectral checks.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/exact.hpp"
#include "clforms/vertex_set.hpp"

namespace clforms {

/// Points x vertices, M[p][w] = 1 iff p lies on w.
ExactMatrix build_incidence(const AttenuatedSpace& space);
/// K[w1][w2] = 1 iff w1 and w2 are disjoint.
ExactMatrix build_kneser(const AttenuatedSpace& space);
/// A[p1][p2] = 1 iff p1 != p2 and <p1, p2> meets E trivially.
ExactMatrix build_point_graph(const AttenuatedSpace& space);

/// M M^t == q^{(n-1)l} I + q^{(n-2)l} A.
bool gram_check(const AttenuatedSpace& space);

enum class Membership { Member, NonMember, ZeroVector };

struct EigenCheck {
  BigInt value;
  BigInt expected_multiplicity;
  std::size_t nullity = 0;  // dim ker(X - value I)
  bool ok = false;
};

struct SpectralReport {
  std::size_t rank_m = 0;
  BigInt expected_rank_m;
  bool rank_ok = false;
  bool gram_ok = false;
  std::vector<EigenCheck> point_graph;
  bool point_graph_ok = false;
  std::vector<EigenCheck> gram_spectrum;
  bool gram_spectrum_ok = false;
  std::vector<EigenCheck> kneser;
  bool kneser_ok = false;
  bool kneser_row_sums_ok = false;  // K j = -lambda_1 (q^l - 1) j
  bool kernel_vector_ok = false;    // every vertex

  bool all_ok() const noexcept {
    return rank_ok && gram_ok && point_graph_ok && gram_spectrum_ok && kneser_ok && kneser_row_sums_ok && kernel_vector_ok;
  }
};

/// Owns M and K for one parameter set; the kernel of M is computed on first
/// use. Throws CapExceeded when a matrix exceeds the exact-matrix caps.
class Spectral {
 public:
  explicit Spectral(const AttenuatedSpace& space);

  const AttenuatedSpace& space() const noexcept { return *space_; }
  const ExactMatrix& incidence() const noexcept { return m_; }
  const ExactMatrix& kneser() const noexcept { return k_; }
  const BigInt& lambda1() const noexcept { return lambda1_; }

  const ImageTester& image() const;

  /// chi in Im(M^t). Throws LengthMismatch.
  bool in_image(std::span<const Rational> chi) const;
  /// K v == lambda_1 v; the zero vector is reported separately.
  Membership eigen_membership_v1(std::span<const Rational> v) const;
  /// M (q^{(n-1)l} chi_disjoint(w) - (j - q^{(n-1)l} chi_w) Delta) == 0, i.e.
  /// the kernel vector built from w, scaled to integers.
  bool verify_kernel_vector(std::uint64_t w) const;

  SpectralReport report() const;

 private:
  const AttenuatedSpace* space_;
  ExactMatrix m_;
  ExactMatrix k_;
  BigInt lambda1_;
  mutable std::once_flag image_once_;
  mutable std::unique_ptr<ImageTester> image_;
};

/// Characteristic vector of a vertex set, as rationals.
RationalVector characteristic_vector(const VertexSet& s);
/// chi_L - x q^{-l} j with x = |L| q^{-(n-1)l}.
RationalVector centered_vector(const VertexSet& s);

/// dim ker(m - lambda I).
std::size_t nullity_at(const ExactMatrix& m, const BigInt& lambda);

}  // namespace clforms
