#include "clforms/spectral.hpp"

#include <map>
#include <string>

#include "clforms/counting.hpp"
#include "clforms/error.hpp"

namespace clforms {

ExactMatrix build_incidence(const AttenuatedSpace& space) {
  ExactMatrix m(space.point_count(), space.vertex_count());
  for (std::uint64_t w = 0; w < space.vertex_count(); ++w)
    for (auto p : space.points_on(w)) m(p, w) = 1;
  return m;
}

ExactMatrix build_kneser(const AttenuatedSpace& space) {
  const std::uint64_t v = space.vertex_count();
  ExactMatrix k(v, v);
  for (std::uint64_t a = 0; a < v; ++a)
    for (std::uint64_t b = 0; b < v; ++b)
      if (space.disjoint(a, b)) k(a, b) = 1;
  return k;
}

ExactMatrix build_point_graph(const AttenuatedSpace& space) {
  const auto& sp = space.params();
  const auto& pts = space.points();
  const Subspace e = e_subspace(sp);
  std::vector<Subspace> subs;
  subs.reserve(pts.size());
  for (const auto& p : pts) subs.push_back(point_subspace(sp, p));
  ExactMatrix a(pts.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (intersection_dim(span_sum(subs[i], subs[j]), e) == 0) a(i, j) = a(j, i) = 1;
  return a;
}

namespace {

bool gram_identity(const ExactMatrix& m, const ExactMatrix& a, const SpaceParams& sp) {
  const ExactMatrix n = m * transpose(m);
  const BigInt diag = ipow(sp.q, std::uint64_t{sp.n - 1} * sp.l);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) {
      // q^{(n-2)l} A; for n = 1 the point graph is empty and the term vanishes.
      BigInt want = i == j ? diag : BigInt(0);
      if (a(i, j) != 0) {
        if (sp.n < 2) return false;
        want += ipow(sp.q, std::uint64_t{sp.n - 2} * sp.l);
      }
      if (n(i, j) != want) return false;
    }
  return true;
}

// Merge equal eigenvalues before testing nullities.
std::vector<EigenCheck> check_spectrum(const ExactMatrix& x, const std::vector<Eigen>& expected, bool& all_ok) {
  std::map<BigInt, BigInt> merged;
  for (const auto& e : expected)
    if (e.multiplicity != 0) merged[e.value] += e.multiplicity;
  std::vector<EigenCheck> out;
  BigInt total = 0;
  all_ok = true;
  for (const auto& [value, mult] : merged) {
    EigenCheck c;
    c.value = value;
    c.expected_multiplicity = mult;
    c.nullity = nullity_at(x, value);
    c.ok = BigInt(c.nullity) == mult;
    all_ok = all_ok && c.ok;
    total += mult;
    out.push_back(std::move(c));
  }
  all_ok = all_ok && total == BigInt(x.rows());
  return out;
}

}  // namespace

bool gram_check(const AttenuatedSpace& space) {
  return gram_identity(build_incidence(space), build_point_graph(space), space.params());
}

std::size_t nullity_at(const ExactMatrix& m, const BigInt& lambda) {
  return m.cols() - exact_rank(shift_diagonal(m, lambda));
}

Spectral::Spectral(const AttenuatedSpace& space)
    : space_(&space), m_(build_incidence(space)), k_(build_kneser(space)), lambda1_(lambda(space.params(), 1)) {}

const ImageTester& Spectral::image() const {
  std::call_once(image_once_, [&] { image_ = std::make_unique<ImageTester>(m_); });
  return *image_;
}

bool Spectral::in_image(std::span<const Rational> chi) const { return image().contains(chi); }

Membership Spectral::eigen_membership_v1(std::span<const Rational> v) const {
  const RationalVector kv = multiply(k_, v);
  bool zero = true;
  for (const auto& e : v)
    if (e != 0) {
      zero = false;
      break;
    }
  if (zero) return Membership::ZeroVector;
  const Rational l1(lambda1_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (kv[i] != l1 * v[i]) return Membership::NonMember;
  return Membership::Member;
}

bool Spectral::verify_kernel_vector(std::uint64_t w) const {
  const auto& sp = space_->params();
  const BigInt big = ipow(sp.q, std::uint64_t{sp.n - 1} * sp.l);
  const BigInt d = delta(sp);
  const std::uint64_t v = space_->vertex_count();
  std::vector<BigInt> vec(v);
  for (std::uint64_t u = 0; u < v; ++u) {
    BigInt chi_disjoint = space_->disjoint(w, u) ? 1 : 0;
    BigInt chi_w = u == w ? 1 : 0;
    vec[u] = big * chi_disjoint - (1 - big * chi_w) * d;
  }
  for (std::size_t p = 0; p < m_.rows(); ++p) {
    BigInt acc = 0;
    for (std::uint64_t u = 0; u < v; ++u)
      if (m_(p, u) != 0) acc += vec[u];
    if (acc != 0) return false;
  }
  return true;
}

SpectralReport Spectral::report() const {
  const auto& sp = space_->params();
  const Spectra expected = spectra(sp);
  SpectralReport r;
  r.rank_m = exact_rank(m_);
  r.expected_rank_m = expected.rank_m;
  r.rank_ok = BigInt(r.rank_m) == expected.rank_m;

  const ExactMatrix a = build_point_graph(*space_);
  r.gram_ok = gram_identity(m_, a, sp);
  r.point_graph = check_spectrum(a, expected.g, r.point_graph_ok);
  r.gram_spectrum = check_spectrum(m_ * transpose(m_), expected.n, r.gram_spectrum_ok);
  r.kneser = check_spectrum(k_, expected.ak, r.kneser_ok);

  const BigInt row_sum = -lambda1_ * (ipow(sp.q, sp.l) - 1);
  r.kneser_row_sums_ok = true;
  for (std::size_t i = 0; i < k_.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < k_.cols(); ++j) s += k_(i, j);
    if (s != row_sum) r.kneser_row_sums_ok = false;
  }

  r.kernel_vector_ok = true;
  for (std::uint64_t w = 0; w < space_->vertex_count() && r.kernel_vector_ok; ++w) r.kernel_vector_ok = verify_kernel_vector(w);
  return r;
}

RationalVector characteristic_vector(const VertexSet& s) {
  RationalVector v(s.universe(), Rational(0));
  for (auto i : s.indices()) v[i] = 1;
  return v;
}

RationalVector centered_vector(const VertexSet& s) {
  const auto& sp = s.params();
  const Rational x(BigInt(s.size()), ipow(sp.q, std::uint64_t{sp.n - 1} * sp.l));
  const Rational shift = x / Rational(ipow(sp.q, sp.l));
  RationalVector v = characteristic_vector(s);
  for (auto& e : v) e -= shift;
  return v;
}

}  // namespace clforms
