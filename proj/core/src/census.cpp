#include "clforms/census.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/error.hpp"
#include "clforms/fqlinalg.hpp"

namespace clforms::census {

namespace {

void check_cap(std::uint64_t need, std::uint64_t cap, const std::string& what) {
  if (need > cap) fail(ErrorCode::CapExceeded, what + ": " + std::to_string(need) + " objects exceed census cap " + std::to_string(cap));
}

// Subspace spanned by the given rows of length dim.
Subspace span_rows(const Field& f, std::size_t dim, const std::vector<std::vector<Elem>>& rows) {
  FqMatrix m(f, rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, rows[r][c]);
  if (rows.empty()) return Subspace(f, dim);
  return Subspace::from_rows(m);
}

std::vector<Elem> unit(std::size_t dim, std::initializer_list<std::size_t> ones) {
  std::vector<Elem> v(dim, 0);
  for (auto i : ones) v[i] = 1;
  return v;
}

// <e_1 + e_{n+1}>, the fixed point off pi = <e_1..e_n>.
Subspace fixed_tau(const SpaceParams& sp) { return span_rows(sp.field, sp.ambient(), {unit(sp.ambient(), {0, sp.n})}); }

Subspace fixed_pi(const SpaceParams& sp) {
  std::vector<std::vector<Elem>> rows;
  for (unsigned i = 0; i < sp.n; ++i) rows.push_back(unit(sp.ambient(), {i}));
  return span_rows(sp.field, sp.ambient(), rows);
}

// pi' = columns of [I; I; 0], i.e. <e_i + e_{n+i}>.
Subspace fixed_pi_prime(const SpaceParams& sp) {
  std::vector<std::vector<Elem>> rows;
  for (unsigned i = 0; i < sp.n; ++i) rows.push_back(unit(sp.ambient(), {i, sp.n + i}));
  return span_rows(sp.field, sp.ambient(), rows);
}

std::vector<Subspace> vertices(const SpaceParams& sp, std::uint64_t cap) {
  check_cap(count_typed_subspaces(sp, sp.n, 0), cap, "vertex census");
  return enumerate_typed_subspaces(sp, sp.n, 0, cap);
}

struct DoubleSpace {
  Field f;
  unsigned n;
  Subspace pi1, pi2, pi3;
};

DoubleSpace double_space(unsigned q, unsigned n) {
  DoubleSpace d{field_new(q), n, {}, {}, {}};
  std::vector<std::vector<Elem>> r1, r2, r3;
  for (unsigned i = 0; i < n; ++i) {
    r1.push_back(unit(2 * n, {i}));
    r2.push_back(unit(2 * n, {n + i}));
    r3.push_back(unit(2 * n, {i, n + i}));
  }
  d.pi1 = span_rows(d.f, 2 * n, r1);
  d.pi2 = span_rows(d.f, 2 * n, r2);
  d.pi3 = span_rows(d.f, 2 * n, r3);
  return d;
}

std::vector<Subspace> subspaces_of(const Field& f, unsigned ambient, unsigned dim, std::uint64_t cap,
                                   const char* what) {
  check_cap(count_subspaces(ambient, dim, f->order()), cap, what);
  return enumerate_subspaces(f, ambient, dim, cap);
}

// Points (1-spaces meeting E trivially) of the whole space, as vectors.
std::vector<std::vector<Elem>> point_vectors(const SpaceParams& sp, std::uint64_t cap) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : enumerate_typed_subspaces(sp, 1, 0, cap)) {
    auto row = s.basis().row(0);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

bool contains_all(const Subspace& outer, const Subspace& inner) {
  for (std::size_t r = 0; r < inner.dim(); ++r)
    if (!outer.contains_vector(inner.basis().row(r))) return false;
  return true;
}

}  // namespace

std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q, std::uint64_t cap) {
  if (k > n) return 0;
  Field f = field_new(q);
  auto all = subspaces_of(f, n, k, cap, "gaussian_binomial census");
  // Distinct RREF bases, each of full rank k.
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].dim() != k) fail(ErrorCode::PreconditionViolated, "enumerated subspace has wrong dimension");
  return all.size();
}

std::uint64_t rank_count(unsigned n, unsigned l, unsigned m, unsigned q, std::uint64_t cap) {
  Field f = field_new(q);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * l; ++i) {
    total *= q;
    check_cap(total, cap, "rank_count census");
  }
  std::uint64_t hits = 0;
  std::vector<Elem> buf(n * l);
  for (std::uint64_t key = 0; key < total; ++key) {
    buf = digits_of_index(q, key, n * l);
    if (rank_in_place(*f, buf, n, l) == m) ++hits;
  }
  return hits;
}

std::uint64_t count_through(unsigned i, unsigned j, const SpaceParams& sp, std::uint64_t cap) {
  if (i < 1 || i > j || j > sp.n) fail(ErrorCode::BadIndices, "need 1 <= i <= j <= n");
  std::vector<std::vector<Elem>> rows;
  for (unsigned t = 0; t < i; ++t) rows.push_back(unit(sp.ambient(), {t}));
  Subspace base = span_rows(sp.field, sp.ambient(), rows);
  check_cap(count_typed_subspaces(sp, j, 0), cap, "count_through census");
  std::uint64_t hits = 0;
  for (const auto& s : enumerate_typed_subspaces(sp, j, 0, cap))
    if (contains_all(s, base)) ++hits;
  return hits;
}

std::uint64_t disjoint_count(const SpaceParams& sp, std::uint64_t cap) {
  Subspace pi = fixed_pi(sp);
  std::uint64_t hits = 0;
  for (const auto& s : vertices(sp, cap))
    if (intersection_dim(s, pi) == 0) ++hits;
  return hits;
}

std::uint64_t delta(const SpaceParams& sp, std::uint64_t cap) {
  Subspace pi = fixed_pi(sp), tau = fixed_tau(sp);
  std::uint64_t hits = 0;
  for (const auto& s : vertices(sp, cap))
    if (contains_all(s, tau) && intersection_dim(s, pi) == 0) ++hits;
  return hits;
}

std::uint64_t c_count(const SpaceParams& sp, std::uint64_t cap) {
  Subspace pi = fixed_pi(sp), tau = fixed_tau(sp);
  std::uint64_t hits = 0;
  for (const auto& s : vertices(sp, cap))
    if (contains_all(s, tau) && intersection_dim(s, pi) > 0) ++hits;
  return hits;
}

std::uint64_t hyperplane_disjoint(const SpaceParams& sp, bool pi_in_v, std::uint64_t cap) {
  // V = <e_1..e_{n+l-1}>; pi = <e_1..e_n> lies in V, <e_1 + e_{n+l}, e_2..e_n> does not.
  const unsigned dim = sp.ambient();
  std::vector<std::vector<Elem>> vrows, prows;
  for (unsigned t = 0; t + 1 < dim; ++t) vrows.push_back(unit(dim, {t}));
  for (unsigned t = 0; t < sp.n; ++t) prows.push_back(unit(dim, {t}));
  if (!pi_in_v) prows[0][dim - 1] = 1;
  Subspace v = span_rows(sp.field, dim, vrows);
  Subspace pi = span_rows(sp.field, dim, prows);
  std::uint64_t hits = 0;
  for (const auto& s : vertices(sp, cap))
    if (contains_all(v, s) && intersection_dim(s, pi) == 0) ++hits;
  return hits;
}

std::uint64_t d_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap) {
  if (k < 1 || k > m || m > n) fail(ErrorCode::BadIndices, "need 1 <= k <= m <= n");
  DoubleSpace d = double_space(q, n);
  std::vector<std::vector<Elem>> rows;
  for (unsigned i = 0; i < k; ++i) rows.push_back(unit(2 * n, {i, n + i}));
  Subspace sigma0 = span_rows(d.f, 2 * n, rows);
  std::uint64_t hits = 0;
  for (const auto& s : subspaces_of(d.f, 2 * n, m, cap, "d_km census"))
    if (contains_all(s, sigma0) && intersection_dim(s, d.pi1) == 0 && intersection_dim(s, d.pi2) == 0) ++hits;
  return hits;
}

std::uint64_t x_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap) {
  if (k < 1 || k > m || m > n) fail(ErrorCode::BadIndices, "need 1 <= k <= m <= n");
  DoubleSpace d = double_space(q, n);
  // k-subspaces of pi_3, pulled back from F_q^n through u -> (u; u).
  std::vector<Subspace> taus;
  for (const auto& t : subspaces_of(d.f, n, k, cap, "x_km census")) {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < t.dim(); ++r) {
      std::vector<Elem> v(2 * n, 0);
      for (unsigned c = 0; c < n; ++c) v[c] = v[n + c] = t.basis()(r, c);
      rows.push_back(v);
    }
    taus.push_back(span_rows(d.f, 2 * n, rows));
  }
  std::uint64_t pairs = 0;
  for (const auto& s : subspaces_of(d.f, 2 * n, m, cap, "x_km census")) {
    if (intersection_dim(s, d.pi1) != 0 || intersection_dim(s, d.pi2) != 0) continue;
    for (const auto& t : taus)
      if (contains_all(s, t)) ++pairs;
  }
  return pairs;
}

std::uint64_t z_km(unsigned q, unsigned n, unsigned k, unsigned m, std::uint64_t cap) {
  if (k > m || m > n) fail(ErrorCode::BadIndices, "need k <= m <= n");
  DoubleSpace d = double_space(q, n);
  std::uint64_t hits = 0;
  for (const auto& s : subspaces_of(d.f, 2 * n, m, cap, "z_km census"))
    if (intersection_dim(s, d.pi1) == 0 && intersection_dim(s, d.pi2) == 0 && intersection_dim(s, d.pi3) == k) ++hits;
  return hits;
}

namespace {

struct WSetup {
  Subspace pi, pi_prime, sigma;
  std::vector<Subspace> common;  // vertices disjoint from pi and pi'
};

WSetup w_setup(const SpaceParams& sp, std::uint64_t cap) {
  WSetup w{fixed_pi(sp), fixed_pi_prime(sp), {}, {}};
  w.sigma = span_sum(w.pi, w.pi_prime);
  for (auto& s : vertices(sp, cap))
    if (intersection_dim(s, w.pi) == 0 && intersection_dim(s, w.pi_prime) == 0) w.common.push_back(std::move(s));
  return w;
}

PointCensus per_point(const WSetup& w, const std::vector<std::vector<Elem>>& pts) {
  PointCensus out;
  out.min = std::numeric_limits<std::uint64_t>::max();
  for (const auto& p : pts) {
    std::uint64_t c = 0;
    for (const auto& s : w.common)
      if (s.contains_vector(p)) ++c;
    ++out.points;
    out.sum += c;
    out.min = std::min(out.min, c);
    out.max = std::max(out.max, c);
  }
  if (out.points == 0) out.min = 0;
  return out;
}

}  // namespace

std::uint64_t w_i(const SpaceParams& sp, unsigned i, std::uint64_t cap) {
  WSetup w = w_setup(sp, cap);
  std::uint64_t hits = 0;
  for (const auto& s : w.common)
    if (intersection_dim(s, w.sigma) == i) ++hits;
  return hits;
}

std::uint64_t w_total(const SpaceParams& sp, std::uint64_t cap) { return w_setup(sp, cap).common.size(); }

PointCensus w_sigma(const SpaceParams& sp, std::uint64_t cap) {
  WSetup w = w_setup(sp, cap);
  std::vector<std::vector<Elem>> pts;
  for (auto& p : point_vectors(sp, cap))
    if (w.sigma.contains_vector(p) && !w.pi.contains_vector(p) && !w.pi_prime.contains_vector(p)) pts.push_back(p);
  return per_point(w, pts);
}

PointCensus w_sigma_bar(const SpaceParams& sp, std::uint64_t cap) {
  WSetup w = w_setup(sp, cap);
  std::vector<std::vector<Elem>> pts;
  for (auto& p : point_vectors(sp, cap))
    if (!w.sigma.contains_vector(p)) pts.push_back(p);
  return per_point(w, pts);
}

std::uint64_t point_meet_count(const SpaceParams& sp, std::uint64_t cap) {
  Subspace pi = fixed_pi(sp), tau = fixed_tau(sp);
  std::uint64_t hits = 0;
  for (const auto& s : vertices(sp, cap))
    if (contains_all(s, tau) && intersection_dim(s, pi) == 1) ++hits;
  return hits;
}

Rational evaluate(const std::string& id, const FormulaArgs& a, std::uint64_t cap) {
  auto sp = [&] { return SpaceParams::make(a.q, a.n, a.l); };
  auto u = [](std::int64_t v, const char* what) {
    if (v < 0) fail(ErrorCode::BadIndices, std::string(what) + " must be nonnegative");
    return static_cast<unsigned>(v);
  };
  if (id == "gaussian_binomial") return Rational(gaussian_binomial(a.n, u(a.k, "k"), a.q, cap));
  if (id == "rank_count") return Rational(rank_count(a.n, a.l, u(a.m, "m"), a.q, cap));
  if (id == "count_through") return Rational(count_through(u(a.i, "i"), u(a.j, "j"), sp(), cap));
  if (id == "disjoint_pair") return Rational(disjoint_count(sp(), cap));
  if (id == "delta") return Rational(delta(sp(), cap));
  if (id == "c_count") return Rational(c_count(sp(), cap));
  if (id == "hyperplane_disjoint") return Rational(hyperplane_disjoint(sp(), a.pi_in_v, cap));
  if (id == "d_km") return Rational(d_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"), cap));
  if (id == "x_km") return Rational(x_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"), cap));
  if (id == "z_km") return Rational(z_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"), cap));
  if (id == "z_0m") return Rational(z_km(a.q, a.n, 0, u(a.m, "m"), cap));
  if (id == "w_i") return Rational(w_i(sp(), u(a.i, "i"), cap));
  if (id == "w_total") return Rational(w_total(sp(), cap));
  if (id == "w_sigma") return w_sigma(sp(), cap).average();
  if (id == "w_sigma_bar") return w_sigma_bar(sp(), cap).average();
  if (id == "point_meet_count") return Rational(point_meet_count(sp(), cap));
  fail(ErrorCode::BadParams, "no census for formula '" + id + "'");
}

}  // namespace clforms::census
