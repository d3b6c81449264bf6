#include "clforms/counting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "clforms/error.hpp"

namespace clforms {

namespace {

BigInt qpow(unsigned q, std::int64_t e) {
  if (e < 0) fail(ErrorCode::PreconditionViolated, "negative exponent in integer power");
  return ipow(BigInt(q), static_cast<std::uint64_t>(e));
}

// [i,1]_q as an integer; 0 for i <= 0.
BigInt bracket1(std::int64_t i, unsigned q) { return gaussian_binomial(i, 1, q); }

BigInt product_int(unsigned q, std::int64_t base, std::int64_t from, std::int64_t to, const char* what) {
  return require_integer(q_product(q, base, from, to), what);
}

BigInt floor3x2(std::int64_t x) { return BigInt(3 * x / 2); }

}  // namespace

BigInt gaussian_binomial(std::int64_t n, std::int64_t k, unsigned q) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= ipow(BigInt(q), static_cast<std::uint64_t>(n - i)) - 1;
    den *= ipow(BigInt(q), static_cast<std::uint64_t>(i + 1)) - 1;
  }
  return num / den;
}

Rational q_product(unsigned q, std::int64_t base, std::int64_t from, std::int64_t to) {
  Rational r = 1;
  for (std::int64_t s = from; s <= to; ++s) r *= rpow(q, base + s) - 1;
  return r;
}

BigInt rank_count(unsigned n, unsigned l, unsigned m, unsigned q) {
  if (m > std::min(n, l)) {
    fail(ErrorCode::BadRank, "rank " + std::to_string(m) + " exceeds min(" + std::to_string(n) + "," +
                                 std::to_string(l) + ")");
  }
  return qpow(q, choose2(m)) * gaussian_binomial(n, m, q) *
         product_int(q, std::int64_t{l} - m, 1, m, "rank_count");
}

BigInt count_through(unsigned i, unsigned j, const SpaceParams& sp) {
  if (i < 1 || i > j || j > sp.n) {
    fail(ErrorCode::BadIndices, "need 1 <= i <= j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  return qpow(sp.q, std::int64_t{sp.l} * (j - i)) * gaussian_binomial(sp.n - i, j - i, sp.q);
}

BigInt disjoint_count(const SpaceParams& sp) {
  const std::int64_t n = sp.n, l = sp.l;
  return qpow(sp.q, choose2(n)) * product_int(sp.q, l - n, 1, n, "disjoint_count");
}

BigInt delta(const SpaceParams& sp) {
  const std::int64_t n = sp.n, l = sp.l;
  return qpow(sp.q, choose2(n)) * product_int(sp.q, l - n, 1, n - 1, "delta");
}

BigInt c_count(const SpaceParams& sp) {
  return qpow(sp.q, std::int64_t{sp.n - 1} * sp.l) - delta(sp);
}

BigInt hyperplane_disjoint(const SpaceParams& sp, bool pi_in_v) {
  const std::int64_t n = sp.n, l = sp.l;
  if (pi_in_v) return qpow(sp.q, choose2(n)) * product_int(sp.q, l - n, 0, n - 1, "hyperplane_disjoint");
  return qpow(sp.q, l - 1 + static_cast<std::int64_t>(choose2(n - 1))) *
         product_int(sp.q, l - n, 1, n - 1, "hyperplane_disjoint");
}

BigInt d_km(unsigned q, unsigned n, unsigned k, unsigned m) {
  if (k < 1 || k > m || m > n) {
    fail(ErrorCode::BadIndices, "need 1 <= k <= m <= n, got k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
  }
  const std::int64_t d = m - k;
  BigInt r = qpow(q, d * (std::int64_t{m} + k - 1) / 2) * gaussian_binomial(n - k, d, q);
  for (std::int64_t i = 1; i <= d; ++i) r *= qpow(q, std::int64_t{n} - k - i + 1) - 1;
  return r;
}

BigInt x_km(unsigned q, unsigned n, unsigned k, unsigned m) { return gaussian_binomial(n, k, q) * d_km(q, n, k, m); }

BigInt z_km(unsigned q, unsigned n, unsigned k, unsigned m) {
  if (k < 1 || k > m || m > n) {
    fail(ErrorCode::BadIndices, "need 1 <= k <= m <= n, got k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
  }
  BigInt sum = 0;
  for (unsigned i = k; i <= m; ++i) {
    BigInt term = gaussian_binomial(i, k, q) * qpow(q, choose2(i - k)) * x_km(q, n, i, m);
    if ((i - k) % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt z_0m(unsigned q, unsigned n, unsigned m) {
  if (m > n) fail(ErrorCode::BadIndices, "need m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  BigInt sum = 0;
  for (unsigned i = 0; i <= m; ++i) {
    BigInt term = gaussian_binomial(m, i, q);
    for (unsigned j = 1; j <= m - i; ++j) term *= qpow(q, std::int64_t{n} - i - j + 1) - 1;
    if (i % 2) sum -= term;
    else sum += term;
  }
  return qpow(q, choose2(m)) * gaussian_binomial(n, m, q) * sum;
}

BigInt x_from_z(unsigned q, unsigned n, unsigned k, unsigned m) {
  BigInt sum = 0;
  for (unsigned i = k; i <= m; ++i) sum += z_km(q, n, i, m) * gaussian_binomial(i, k, q);
  return sum;
}

BigInt w_i(const SpaceParams& sp, unsigned i) {
  if (i > sp.n) fail(ErrorCode::BadIndices, "need i <= n, got i=" + std::to_string(i));
  const std::int64_t n = sp.n, l = sp.l, ii = i;
  return z_0m(sp.q, sp.n, i) * qpow(sp.q, n * (n - ii) + static_cast<std::int64_t>(choose2(n - ii))) *
         product_int(sp.q, l - 2 * n + ii, 1, n - ii, "W_i");
}

WCounts w_counts(const SpaceParams& sp) {
  WCounts out;
  const unsigned q = sp.q, n = sp.n, l = sp.l;
  for (unsigned i = 0; i <= n; ++i) {
    out.w.push_back(w_i(sp, i));
    out.total += out.w.back();
  }
  const BigInt qn = qpow(q, n);

  BigInt den = (qn - 1) * (qn - 2);
  if (den != 0) {
    BigInt num = 0;
    for (unsigned i = 1; i <= n; ++i) num += out.w[i] * (qpow(q, i) - 1);
    out.w_sigma = Rational(num, den);
  }
  BigInt den_dc = bracket1(2 * n, q) - 3 * bracket1(n, q);
  if (den_dc != 0) {
    BigInt num = 0;
    for (unsigned i = 1; i <= n; ++i) num += out.w[i] * bracket1(i, q);
    out.w_sigma_double_count = Rational(num, den_dc);
  }

  BigInt den_bar = qn * (qpow(q, std::int64_t{l} - n) - 1) * (qn - 1);
  if (den_bar != 0) {
    BigInt num = 0;
    for (unsigned i = 0; i < n; ++i) num += out.w[i] * (qn - qpow(q, i));
    out.w_sigma_bar = Rational(num, den_bar);
  }
  BigInt den_bar_dc = bracket1(n + l, q) - bracket1(l, q) - bracket1(2 * n, q) + bracket1(n, q);
  if (den_bar_dc != 0) {
    BigInt num = 0;
    for (unsigned i = 0; i < n; ++i) num += out.w[i] * (bracket1(n, q) - bracket1(i, q));
    out.w_sigma_bar_double_count = Rational(num, den_bar_dc);
  }
  return out;
}

BigInt s1(const SpaceParams& sp, std::int64_t x) {
  return x * qpow(sp.q, std::int64_t{sp.n - 1} * sp.l) - (x - 1) * delta(sp);
}

SBounds s_bounds(const SpaceParams& sp, std::int64_t x) {
  SBounds out;
  out.s1 = s1(sp, x);
  WCounts w = w_counts(sp);
  if (w.w_sigma) {
    out.d2_prime = Rational(x - 2) * *w.w_sigma;
    out.s2_prime = Rational(x * qpow(sp.q, std::int64_t{sp.n - 1} * sp.l) - 2 * (x - 1) * delta(sp)) + *out.d2_prime;
  }
  return out;
}

Rational d2_formula(const SpaceParams& sp, std::int64_t x, std::uint64_t s0_meet) {
  WCounts w = w_counts(sp);
  if (!w.w_sigma || !w.w_sigma_bar) {
    fail(ErrorCode::OutOfScopeParams, "W_Sigma or W_SigmaBar undefined at these parameters");
  }
  const Rational& ws = *w.w_sigma;
  const Rational& wb = *w.w_sigma_bar;
  return (ws - wb) * Rational(s0_meet) - 2 * ws + Rational(x) * wb;
}

Rational s2_formula(const SpaceParams& sp, std::int64_t x, std::uint64_t s0_meet) {
  return Rational(x * qpow(sp.q, std::int64_t{sp.n - 1} * sp.l) - 2 * (x - 1) * delta(sp)) +
         d2_formula(sp, x, s0_meet);
}

BigInt lambda(const SpaceParams& sp, unsigned j) {
  const std::int64_t n = sp.n, l = sp.l;
  BigInt v = qpow(sp.q, choose2(n)) * product_int(sp.q, l - n, 1, n - j, "lambda");
  return (j % 2) ? BigInt(-v) : v;
}

Spectra spectra(const SpaceParams& sp) {
  const unsigned q = sp.q, n = sp.n, l = sp.l;
  const BigInt ql = qpow(q, l);
  const BigInt n1 = bracket1(n, q);
  const BigInt nm1 = bracket1(std::int64_t{n} - 1, q);
  Spectra out;
  out.g = {{qpow(q, std::int64_t{l} + 1) * nm1, 1}, {0, (ql - 1) * n1}, {-ql, q * nm1}};
  const BigInt top = qpow(q, std::int64_t{n - 1} * l);
  out.n = {{top * n1, 1}, {top, (ql - 1) * n1}, {0, q * nm1}};
  for (unsigned j = 0; j <= n; ++j) {
    BigInt dim = gaussian_binomial(n, j, q);
    for (unsigned s = 0; s < j; ++s) dim *= ql - qpow(q, s);
    out.ak.push_back({lambda(sp, j), dim});
  }
  out.rank_m = (ql - 1) * n1 + 1;
  return out;
}

BigInt point_meet_count(const SpaceParams& sp) {
  const std::int64_t n = sp.n, l = sp.l;
  return qpow(sp.q, static_cast<std::int64_t>(choose2(n - 1)) + 1) * bracket1(n - 1, sp.q) *
         product_int(sp.q, l - n, 2, n - 1, "point_meet_count");
}

BigInt hm_bound(const SpaceParams& sp) {
  const unsigned q = sp.q, n = sp.n, l = sp.l;
  if (!(l >= n + 1 && n + 1 >= 3) || (q == 2 && l == n + 1)) {
    fail(ErrorCode::OutOfScopeParams, "Hilton-Milner bound needs l >= n+1 >= 3 and (q,l) != (2,n+1)");
  }
  if (n == 3) return qpow(q, l) * (q * q + q + 1) - BigInt(q) * (q + 1);
  return qpow(q, std::int64_t{n - 1} * l) - delta(sp) + qpow(q, std::int64_t{n} - 1) * (q - 1);
}

ClassificationBounds classification_bounds(const SpaceParams& sp, std::int64_t x) {
  const unsigned q = sp.q, n = sp.n, l = sp.l;
  if (!(l >= 2 * n && 2 * n >= 4)) {
    fail(ErrorCode::OutOfScopeParams, "classification checks need l >= 2n >= 4");
  }
  if (x < 2) fail(ErrorCode::OutOfScopeParams, "classification checks need x >= 2");

  ClassificationBounds out;
  const BigInt top = qpow(q, std::int64_t{n - 1} * l);
  out.delta = delta(sp);
  out.c = c_count(sp);
  out.in_range = BigInt(x) * x <= qpow(q - 1, n) * qpow(q, std::int64_t{l} - 2 * n + 1);
  out.ekr_bound = top;
  out.hm_bound = hm_bound(sp);

  WCounts w = w_counts(sp);
  out.w_sigma = *w.w_sigma;  // defined: n >= 2
  const Rational d(out.delta), c(out.c);

  out.delta_order_ok = top > out.delta && d > out.w_sigma;
  out.delta_vs_c_ok = out.delta > BigInt(x) * x * out.c;
  out.w_sigma_gap_ok = out.w_sigma <= d - c;

  SBounds sb = s_bounds(sp, x);
  out.s1 = sb.s1;
  out.s2_prime = *sb.s2_prime;
  const BigInt f = floor3x2(x);
  const Rational xf = Rational(x) * Rational(top);
  out.greedy_union_ok = Rational(f * out.s1) - Rational(f * (f - 1) / 2) * out.s2_prime > xf;

  out.point_meet_count = point_meet_count(sp);

  const Rational lhs_pair = Rational(BigInt(x - 1), BigInt(f - 2)) * d - Rational(f - 3) * out.s2_prime;
  if (n != 3) {
    out.pair_bound_ok = lhs_pair > c + Rational(qpow(q, std::int64_t{n} - 1) * (q - 1));
  } else {
    out.pair_bound_ok = lhs_pair > Rational(qpow(q, l) * (q * q + q + 1) - BigInt(q) * (q + 1));
  }

  // Union bound over c + 1 = floor(3x/2) mutually disjoint members.
  out.union_bound_ok = Rational(f * out.s1) - Rational(f * (f - 1) / 2) * out.s2_prime >= xf;

  const BigInt c_cap = bracket1(n, q) * qpow(q, std::int64_t{l} * (n - 2));
  out.c_bound_ok = out.c <= c_cap && Rational(c_cap) < Rational(qpow(q, n + std::int64_t{l} * (n - 2)), q - 1);
  return out;
}

const std::vector<std::string>& formula_ids() {
  static const std::vector<std::string> ids = {
      "gaussian_binomial", "rank_count", "count_through", "disjoint_pair", "delta", "c_count",
      "hyperplane_disjoint", "d_km", "x_km", "z_km", "z_0m", "w_i", "w_total", "w_sigma",
      "w_sigma_bar", "s1", "rank_m", "point_meet_count", "hm_bound"};
  return ids;
}

CountResult evaluate_formula(const std::string& id, const FormulaArgs& a) {
  auto sp = [&] { return SpaceParams::make(a.q, a.n, a.l); };
  auto u = [](std::int64_t v, const char* what) {
    if (v < 0) fail(ErrorCode::BadIndices, std::string(what) + " must be nonnegative");
    return static_cast<unsigned>(v);
  };
  Rational v;
  if (id == "gaussian_binomial") {
    field_new(a.q);
    v = gaussian_binomial(a.n, a.k, a.q);
  } else if (id == "rank_count") {
    field_new(a.q);
    v = rank_count(a.n, a.l, u(a.m, "m"), a.q);
  } else if (id == "count_through") {
    v = count_through(u(a.i, "i"), u(a.j, "j"), sp());
  } else if (id == "disjoint_pair") {
    v = disjoint_count(sp());
  } else if (id == "delta") {
    v = delta(sp());
  } else if (id == "c_count") {
    v = c_count(sp());
  } else if (id == "hyperplane_disjoint") {
    v = hyperplane_disjoint(sp(), a.pi_in_v);
  } else if (id == "d_km") {
    field_new(a.q);
    v = d_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"));
  } else if (id == "x_km") {
    field_new(a.q);
    v = x_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"));
  } else if (id == "z_km") {
    field_new(a.q);
    v = z_km(a.q, a.n, u(a.k, "k"), u(a.m, "m"));
  } else if (id == "z_0m") {
    field_new(a.q);
    v = z_0m(a.q, a.n, u(a.m, "m"));
  } else if (id == "w_i") {
    v = w_i(sp(), u(a.i, "i"));
  } else if (id == "w_total") {
    v = w_counts(sp()).total;
  } else if (id == "w_sigma") {
    auto w = w_counts(sp());
    if (!w.w_sigma) fail(ErrorCode::OutOfScopeParams, "W_Sigma denominator vanishes");
    v = *w.w_sigma;
  } else if (id == "w_sigma_bar") {
    auto w = w_counts(sp());
    if (!w.w_sigma_bar) fail(ErrorCode::OutOfScopeParams, "W_SigmaBar denominator vanishes (l = n)");
    v = *w.w_sigma_bar;
  } else if (id == "s1") {
    v = s1(sp(), a.x);
  } else if (id == "rank_m") {
    v = spectra(sp()).rank_m;
  } else if (id == "point_meet_count") {
    v = point_meet_count(sp());
  } else if (id == "hm_bound") {
    v = hm_bound(sp());
  } else {
    fail(ErrorCode::BadParams, "unknown formula '" + id + "'");
  }
  return {id, v, a};
}

}  // namespace clforms
