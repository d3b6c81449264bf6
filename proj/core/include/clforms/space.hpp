#pragma once

#include <cstdint>

#include "clforms/gf.hpp"

namespace clforms {

/// Parameters (q, n, l) of the attenuated space A_q(n+l, E) with
/// E = span of the last l coordinates.
struct SpaceParams {
  Field field;
  unsigned q = 0;
  unsigned n = 0;
  unsigned l = 0;

  /// Throws NotPrimePower/Unsupported for q and BadParams unless 1 <= n <= l.
  static SpaceParams make(unsigned q, unsigned n, unsigned l);

  unsigned ambient() const noexcept { return n + l; }
  /// q^{nl}; throws CapExceeded when it does not fit in 63 bits.
  std::uint64_t vertex_count() const;
  /// q^l (q^n - 1)/(q - 1).
  std::uint64_t point_count() const;
  /// (q^n - 1)/(q - 1), the number of points on a vertex.
  std::uint64_t points_per_vertex() const;

  friend bool operator==(const SpaceParams& a, const SpaceParams& b) noexcept {
    return a.q == b.q && a.n == b.n && a.l == b.l;
  }
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

}  // namespace clforms
