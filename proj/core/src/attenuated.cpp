#include "clforms/attenuated.hpp"

#include <algorithm>
#include <string>

#include "clforms/error.hpp"

namespace clforms {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) {
      fail(ErrorCode::CapExceeded, std::to_string(base) + "^" + std::to_string(exp) + " does not fit in 63 bits");
    }
    r *= base;
  }
  return r;
}

std::uint64_t key_of(unsigned q, std::span<const Elem> digits) {
  std::uint64_t k = 0;
  for (Elem d : digits) k = k * q + d;
  return k;
}

// First nonzero entry of x, or x.size() when x = 0.
std::size_t leading(std::span<const Elem> x) {
  std::size_t i = 0;
  while (i < x.size() && x[i] == 0) ++i;
  return i;
}

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    fail(ErrorCode::ShapeMismatch, std::string(what) + " has length " + std::to_string(got) + ", expected " +
                                       std::to_string(want));
  }
}

void require_entries(const SpaceParams& sp, std::span<const Elem> x) {
  for (Elem e : x)
    if (e >= sp.q) fail(ErrorCode::BadParams, "entry " + std::to_string(e) + " out of range for q=" + std::to_string(sp.q));
}

}  // namespace

SpaceParams SpaceParams::make(unsigned q, unsigned n, unsigned l) {
  SpaceParams sp;
  sp.field = field_new(q);
  sp.q = q;
  sp.n = n;
  sp.l = l;
  if (n < 1 || n > l) {
    fail(ErrorCode::BadParams, "need 1 <= n <= l, got n=" + std::to_string(n) + " l=" + std::to_string(l));
  }
  return sp;
}

std::uint64_t SpaceParams::vertex_count() const { return checked_pow(q, std::uint64_t{n} * l); }

std::uint64_t SpaceParams::points_per_vertex() const { return (checked_pow(q, n) - 1) / (q - 1); }

std::uint64_t SpaceParams::point_count() const { return checked_pow(q, l) * points_per_vertex(); }

std::vector<Elem> digits_of_index(unsigned q, std::uint64_t index, std::size_t length) {
  std::vector<Elem> d(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    d[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return d;
}

std::uint64_t vertex_key(const SpaceParams& sp, const Vertex& w) {
  if (w.a.rows() != sp.l || w.a.cols() != sp.n) fail(ErrorCode::ShapeMismatch, "vertex matrix must be l x n");
  return key_of(sp.q, w.a.entries());
}

Vertex vertex_from_key(const SpaceParams& sp, std::uint64_t key) {
  return Vertex{FqMatrix(sp.field, sp.l, sp.n, digits_of_index(sp.q, key, std::size_t{sp.n} * sp.l))};
}

Vertex make_vertex(const SpaceParams& sp, std::span<const Elem> row_major) {
  require_length(row_major.size(), std::size_t{sp.n} * sp.l, "vertex");
  return Vertex{FqMatrix(sp.field, sp.l, sp.n, std::vector<Elem>(row_major.begin(), row_major.end()))};
}

Point make_point(const SpaceParams& sp, std::span<const Elem> u, std::span<const Elem> v) {
  require_length(u.size(), sp.n, "u");
  require_length(v.size(), sp.l, "v");
  require_entries(sp, u);
  require_entries(sp, v);
  std::size_t lead = leading(u);
  if (lead == u.size()) fail(ErrorCode::BadParams, "point needs u != 0");
  const FqField& f = *sp.field;
  Elem s = f.inv(u[lead]);
  Point p{std::vector<Elem>(u.begin(), u.end()), std::vector<Elem>(v.begin(), v.end())};
  for (Elem& e : p.u) e = f.mul(e, s);
  for (Elem& e : p.v) e = f.mul(e, s);
  return p;
}

std::uint64_t point_key(const SpaceParams& sp, const Point& p) {
  return key_of(sp.q, p.u) * checked_pow(sp.q, sp.l) + key_of(sp.q, p.v);
}

TypedHyperplane make_hyperplane(const SpaceParams& sp, std::span<const Elem> a, std::span<const Elem> b) {
  require_length(a.size(), sp.n, "a");
  require_length(b.size(), sp.l, "b");
  require_entries(sp, a);
  require_entries(sp, b);
  std::size_t lead = leading(b);
  if (lead == b.size()) fail(ErrorCode::BadParams, "typed hyperplane needs b != 0");
  const FqField& f = *sp.field;
  Elem s = f.inv(b[lead]);
  TypedHyperplane h{std::vector<Elem>(a.begin(), a.end()), std::vector<Elem>(b.begin(), b.end())};
  for (Elem& e : h.a) e = f.mul(e, s);
  for (Elem& e : h.b) e = f.mul(e, s);
  return h;
}

std::vector<Vertex> enumerate_vertices(const SpaceParams& sp, std::uint64_t cap) {
  std::uint64_t count = sp.vertex_count();
  if (count > cap) fail(ErrorCode::CapExceeded, std::to_string(count) + " vertices exceed cap " + std::to_string(cap));
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(vertex_from_key(sp, k));
  return out;
}

std::vector<Point> enumerate_points(const SpaceParams& sp, std::uint64_t cap) {
  std::uint64_t count = sp.point_count();
  if (count > cap) fail(ErrorCode::CapExceeded, std::to_string(count) + " points exceed cap " + std::to_string(cap));
  std::vector<Point> out;
  out.reserve(count);
  const std::uint64_t nu = checked_pow(sp.q, sp.n);
  const std::uint64_t nv = checked_pow(sp.q, sp.l);
  for (std::uint64_t ku = 1; ku < nu; ++ku) {
    auto u = digits_of_index(sp.q, ku, sp.n);
    if (u[leading(u)] != 1) continue;
    for (std::uint64_t kv = 0; kv < nv; ++kv) out.push_back(Point{u, digits_of_index(sp.q, kv, sp.l)});
  }
  return out;
}

std::vector<TypedHyperplane> enumerate_typed_hyperplanes(const SpaceParams& sp, std::uint64_t cap) {
  const std::uint64_t na = checked_pow(sp.q, sp.n);
  const std::uint64_t nb = checked_pow(sp.q, sp.l);
  std::uint64_t count = na * ((nb - 1) / (sp.q - 1));
  if (count > cap) fail(ErrorCode::CapExceeded, std::to_string(count) + " hyperplanes exceed cap " + std::to_string(cap));
  std::vector<TypedHyperplane> out;
  out.reserve(count);
  for (std::uint64_t ka = 0; ka < na; ++ka) {
    auto a = digits_of_index(sp.q, ka, sp.n);
    for (std::uint64_t kb = 1; kb < nb; ++kb) {
      auto b = digits_of_index(sp.q, kb, sp.l);
      if (b[leading(b)] != 1) continue;
      out.push_back(TypedHyperplane{a, std::move(b)});
    }
  }
  return out;
}

bool incident(const Point& p, const Vertex& w) {
  auto au = clforms::apply(w.a, p.u);
  return au == p.v;
}

unsigned dim_intersection(const Vertex& w1, const Vertex& w2) {
  return static_cast<unsigned>(w1.a.cols() - rank_distance(w1.a, w2.a));
}

bool in_hyperplane(const TypedHyperplane& h, const Vertex& w) {
  // Column i of [I; A] is (e_i; A e_i); it lies in V iff a_i + b . A e_i = 0.
  const FqField& f = *w.a.field();
  for (std::size_t i = 0; i < w.a.cols(); ++i) {
    Elem acc = h.a[i];
    for (std::size_t r = 0; r < w.a.rows(); ++r) acc = f.add(acc, f.mul(h.b[r], w.a(r, i)));
    if (acc) return false;
  }
  return true;
}

bool in_hyperplane(const SpaceParams& sp, const TypedHyperplane& h, const Point& p) {
  const FqField& f = *sp.field;
  Elem acc = 0;
  for (unsigned i = 0; i < sp.n; ++i) acc = f.add(acc, f.mul(h.a[i], p.u[i]));
  for (unsigned i = 0; i < sp.l; ++i) acc = f.add(acc, f.mul(h.b[i], p.v[i]));
  return acc == 0;
}

Subspace vertex_subspace(const SpaceParams& sp, const Vertex& w) {
  FqMatrix cols(sp.field, sp.n + sp.l, sp.n);
  for (unsigned i = 0; i < sp.n; ++i) cols.set(i, i, 1);
  for (unsigned r = 0; r < sp.l; ++r)
    for (unsigned c = 0; c < sp.n; ++c) cols.set(sp.n + r, c, w.a(r, c));
  return Subspace::from_columns(cols);
}

Subspace point_subspace(const SpaceParams& sp, const Point& p) {
  FqMatrix row(sp.field, 1, sp.n + sp.l);
  for (unsigned i = 0; i < sp.n; ++i) row.set(0, i, p.u[i]);
  for (unsigned i = 0; i < sp.l; ++i) row.set(0, sp.n + i, p.v[i]);
  return Subspace::from_rows(row);
}

Subspace hyperplane_subspace(const SpaceParams& sp, const TypedHyperplane& h) {
  FqMatrix row(sp.field, 1, sp.n + sp.l);
  for (unsigned i = 0; i < sp.n; ++i) row.set(0, i, h.a[i]);
  for (unsigned i = 0; i < sp.l; ++i) row.set(0, sp.n + i, h.b[i]);
  return kernel(row);
}

Subspace e_subspace(const SpaceParams& sp) {
  FqMatrix rows(sp.field, sp.l, sp.n + sp.l);
  for (unsigned i = 0; i < sp.l; ++i) rows.set(i, sp.n + i, 1);
  return Subspace::from_rows(rows);
}

namespace {

// dim(P ∩ E) equals the number of RREF pivots among the last l coordinates.
auto typed_filter(const SpaceParams& sp, unsigned k) {
  return [n = sp.n, k](std::span<const std::size_t> piv) {
    unsigned in_e = 0;
    for (std::size_t p : piv)
      if (p >= n) ++in_e;
    return in_e == k;
  };
}

void require_type(const SpaceParams& sp, unsigned m, unsigned k) {
  if (k > m || k > sp.l || m - k > sp.n) {
    fail(ErrorCode::BadParams, "no subspaces of type (" + std::to_string(m) + "," + std::to_string(k) + ")");
  }
}

}  // namespace

std::uint64_t count_typed_subspaces(const SpaceParams& sp, unsigned m, unsigned k) {
  require_type(sp, m, k);
  return count_subspaces(sp.n + sp.l, m, sp.q, typed_filter(sp, k));
}

std::vector<Subspace> enumerate_typed_subspaces(const SpaceParams& sp, unsigned m, unsigned k, std::uint64_t cap) {
  require_type(sp, m, k);
  return enumerate_subspaces(sp.field, sp.n + sp.l, m, cap, typed_filter(sp, k));
}

VertexSet vertices_in_hyperplane(const SpaceParams& sp, const TypedHyperplane& h) {
  require_length(h.a.size(), sp.n, "a");
  require_length(h.b.size(), sp.l, "b");
  VertexSet out(sp);
  const std::uint64_t count = sp.vertex_count();
  for (std::uint64_t k = 0; k < count; ++k)
    if (in_hyperplane(h, vertex_from_key(sp, k))) out.insert(k);
  return out;
}

TypedHyperplane first_row_hyperplane(const SpaceParams& sp, std::span<const Elem> x) {
  require_length(x.size(), sp.n, "x");
  std::vector<Elem> a(sp.n), b(sp.l, 0);
  for (unsigned i = 0; i < sp.n; ++i) a[i] = sp.field->neg(x[i]);
  b[0] = 1;
  return make_hyperplane(sp, a, b);
}

Point e1_point(const SpaceParams& sp, std::span<const Elem> v) {
  std::vector<Elem> u(sp.n, 0);
  u[0] = 1;
  return make_point(sp, u, v);
}

AttenuatedSpace::AttenuatedSpace(const SpaceParams& sp, std::uint64_t cap)
    : sp_(sp),
      vertex_count_(sp.vertex_count()),
      entries_(std::size_t{sp.n} * sp.l),
      per_vertex_(sp.points_per_vertex()),
      char2_(sp.field->characteristic() == 2) {
  if (vertex_count_ > cap) {
    fail(ErrorCode::CapExceeded, std::to_string(vertex_count_) + " vertices exceed cap " + std::to_string(cap));
  }
  const FqField& f = *sp.field;
  place_.assign(entries_, 1);
  for (std::size_t i = entries_; i-- > 1;) place_[i - 1] = place_[i] * sp.q;

  digits_.resize(vertex_count_ * entries_);
  rank_.resize(vertex_count_);
  std::vector<Elem> scratch(entries_);
  for (std::uint64_t k = 0; k < vertex_count_; ++k) {
    auto d = digits_of_index(sp.q, k, entries_);
    std::copy(d.begin(), d.end(), digits_.begin() + k * entries_);
    scratch = d;
    rank_[k] = static_cast<std::uint8_t>(rank_in_place(f, scratch, sp.l, sp.n));
  }

  points_ = enumerate_points(sp, cap);
  const std::uint64_t key_space = checked_pow(sp.q, sp.n + sp.l);
  if (key_space > cap * 16) fail(ErrorCode::CapExceeded, "point key space too large");
  point_lookup_.assign(key_space, 0);
  for (std::size_t i = 0; i < points_.size(); ++i) point_lookup_[point_key(sp, points_[i])] = i + 1;

  // Normalized u vectors in point order; points on A are (u, A u).
  std::vector<std::vector<Elem>> us;
  for (const auto& p : points_)
    if (us.empty() || us.back() != p.u) us.push_back(p.u);
  const std::uint64_t ql = checked_pow(sp.q, sp.l);
  points_on_.resize(vertex_count_ * per_vertex_);
  for (std::uint64_t k = 0; k < vertex_count_; ++k) {
    auto a = digits(k);
    for (std::size_t j = 0; j < us.size(); ++j) {
      std::uint64_t vkey = 0;
      for (unsigned r = 0; r < sp.l; ++r) {
        Elem acc = 0;
        for (unsigned c = 0; c < sp.n; ++c) acc = f.add(acc, f.mul(a[r * sp.n + c], us[j][c]));
        vkey = vkey * sp.q + acc;
      }
      // Points sharing u are contiguous and ordered by v.
      points_on_[k * per_vertex_ + j] = static_cast<std::uint32_t>(j * ql + vkey);
    }
  }
}

std::uint64_t AttenuatedSpace::difference_key(std::uint64_t a, std::uint64_t b) const noexcept {
  // In characteristic 2 subtraction is XOR on element codes, and the base-q
  // key packs codes into disjoint bit fields.
  if (char2_) return a ^ b;
  const FqField& f = *sp_.field;
  auto da = digits(a);
  auto db = digits(b);
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < entries_; ++i) k += f.sub(da[i], db[i]) * place_[i];
  return k;
}

std::uint64_t AttenuatedSpace::point_index(const Point& p) const {
  if (p.u.size() != sp_.n || p.v.size() != sp_.l) fail(ErrorCode::ShapeMismatch, "point shape does not match");
  std::uint64_t key = point_key(sp_, p);
  if (key >= point_lookup_.size() || point_lookup_[key] == 0) fail(ErrorCode::BadParams, "point is not normalized");
  return point_lookup_[key] - 1;
}

void AttenuatedSpace::build_pencils() const {
  std::call_once(pencils_once_, [this] {
    pencils_.assign(points_.size(), VertexSet(sp_));
    for (std::uint64_t k = 0; k < vertex_count_; ++k)
      for (std::uint32_t p : points_on(k)) pencils_[p].insert(k);
  });
}

const VertexSet& AttenuatedSpace::pencil(std::uint64_t point) const {
  build_pencils();
  return pencils_.at(point);
}

void AttenuatedSpace::build_disjointness() const {
  std::call_once(disjoint_once_, [this] {
    if (vertex_count_ > kMaxDisjointnessVertices) {
      fail(ErrorCode::CapExceeded, "disjointness table for " + std::to_string(vertex_count_) + " vertices exceeds cap " +
                                       std::to_string(kMaxDisjointnessVertices));
    }
    disjoint_.assign(vertex_count_, VertexSet(sp_));
    for (std::uint64_t a = 0; a < vertex_count_; ++a) {
      for (std::uint64_t b = a + 1; b < vertex_count_; ++b) {
        if (disjoint(a, b)) {
          disjoint_[a].insert(b);
          disjoint_[b].insert(a);
        }
      }
    }
  });
}

const VertexSet& AttenuatedSpace::disjoint_set(std::uint64_t v) const {
  build_disjointness();
  return disjoint_.at(v);
}

}  // namespace clforms
