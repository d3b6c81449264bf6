#include "clforms/fqlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "clforms/error.hpp"

namespace clforms {

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorCode::ShapeMismatch, "entry count does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (Elem e : entries_) {
    if (e >= field_->order()) fail(ErrorCode::BadParams, "entry out of range for F_" + std::to_string(field_->order()));
  }
}

FqMatrix FqMatrix::identity(Field field, std::size_t n) {
  FqMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_rows(Field field, std::initializer_list<std::initializer_list<unsigned>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Elem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorCode::ShapeMismatch, "ragged rows");
    for (unsigned v : row) entries.push_back(static_cast<Elem>(v));
  }
  return FqMatrix(std::move(field), r, c, std::move(entries));
}

bool FqMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
         (!a.field_ || !b.field_ || a.field_->order() == b.field_->order());
}

FqMatrix transpose(const FqMatrix& m) {
  FqMatrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m(r, c));
  return t;
}

namespace {

void require_same_shape(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  require_same_shape(a, b);
  FqMatrix out(a.field(), a.rows(), a.cols());
  const FqField& f = *a.field();
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.entries()[i] = f.add(a.entries()[i], b.entries()[i]);
  return out;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  require_same_shape(a, b);
  FqMatrix out(a.field(), a.rows(), a.cols());
  const FqField& f = *a.field();
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.entries()[i] = f.sub(a.entries()[i], b.entries()[i]);
  return out;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                       " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const FqField& f = *a.field();
  FqMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem aik = a(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, f.add(out(i, j), f.mul(aik, b(k, j))));
    }
  }
  return out;
}

FqMatrix vstack(const FqMatrix& top, const FqMatrix& bottom) {
  if (top.cols() != bottom.cols()) fail(ErrorCode::ShapeMismatch, "vstack column mismatch");
  std::vector<Elem> entries(top.entries().begin(), top.entries().end());
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return FqMatrix(top.field() ? top.field() : bottom.field(), top.rows() + bottom.rows(), top.cols(),
                  std::move(entries));
}

std::vector<Elem> apply(const FqMatrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) fail(ErrorCode::ShapeMismatch, "vector length does not match column count");
  const FqField& f = *m.field();
  std::vector<Elem> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Rref rref(const FqMatrix& m) {
  Rref out{m, 0, {}};
  FqMatrix& a = out.form;
  if (!m.field()) return out;
  const FqField& f = *m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      auto rp = a.row(p);
      auto rl = a.row(lead);
      std::swap_ranges(rp.begin(), rp.end(), rl.begin());
    }
    Elem inv = f.inv(a(lead, c));
    for (Elem& e : a.row(lead)) e = f.mul(e, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      Elem factor = a(r, c);
      if (!factor) continue;
      auto src = a.row(lead);
      auto dst = a.row(r);
      for (std::size_t k = c; k < a.cols(); ++k) dst[k] = f.sub(dst[k], f.mul(factor, src[k]));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank_in_place(const FqField& f, std::span<Elem> a, std::size_t rows, std::size_t cols) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t k = c; k < cols; ++k) std::swap(a[p * cols + k], a[lead * cols + k]);
    }
    Elem inv = f.inv(a[lead * cols + c]);
    for (std::size_t r = lead + 1; r < rows; ++r) {
      Elem factor = a[r * cols + c];
      if (!factor) continue;
      factor = f.mul(factor, inv);
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[lead * cols + k]));
      }
    }
    ++lead;
  }
  return lead;
}

std::size_t rank(const FqMatrix& m) {
  if (!m.field()) return 0;
  std::vector<Elem> buf(m.entries().begin(), m.entries().end());
  return rank_in_place(*m.field(), buf, m.rows(), m.cols());
}

std::size_t rank_distance(const FqMatrix& a, const FqMatrix& b) { return rank(a - b); }

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::from_rows(const FqMatrix& spanning) {
  Rref r = rref(spanning);
  Subspace s(spanning.field(), spanning.cols());
  std::vector<Elem> entries(r.form.entries().begin(), r.form.entries().begin() + r.rank * spanning.cols());
  s.basis_ = FqMatrix(spanning.field(), r.rank, spanning.cols(), std::move(entries));
  return s;
}

Subspace Subspace::from_columns(const FqMatrix& spanning) { return from_rows(transpose(spanning)); }

Subspace Subspace::full(Field field, std::size_t ambient) {
  return from_rows(FqMatrix::identity(std::move(field), ambient));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (v.size() != ambient_) fail(ErrorCode::AmbientMismatch, "vector length does not match ambient dimension");
  // Reduce v against the RREF basis; it lies in the span iff the residue vanishes.
  const FqField& f = *field_;
  std::vector<Elem> w(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_ && r < dim(); ++c) {
    if (basis_(r, c) == 0) continue;
    Elem factor = w[c];
    if (factor) {
      auto row = basis_.row(r);
      for (std::size_t k = c; k < ambient_; ++k) w[k] = f.sub(w[k], f.mul(factor, row[k]));
    }
    ++r;
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

Subspace kernel(const FqMatrix& m) {
  const FqField& f = *m.field();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FqMatrix basis(m.field(), free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    basis.set(i, fc, 1);
    for (std::size_t k = 0; k < r.rank; ++k) basis.set(i, r.pivots[k], f.neg(r.form(k, fc)));
  }
  if (free_cols.empty()) return Subspace(m.field(), m.cols());
  return Subspace::from_rows(basis);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return kernel(s.basis());
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorCode::AmbientMismatch,
         "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace span_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::from_rows(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.field(), a.ambient_dim());
  // a ∩ b = ann(ann(a) + ann(b)).
  Subspace aa = annihilator(a);
  Subspace ab = annihilator(b);
  return annihilator(span_sum(aa, ab));
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner);
  for (std::size_t r = 0; r < inner.dim(); ++r)
    if (!outer.contains_vector(inner.basis().row(r))) return false;
  return true;
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a.dim() + b.dim() - rank(vstack(a.basis(), b.basis()));
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return {span_sum(a, b), intersect(a, b), contains(a, b)};
}

namespace {

// Visits every strictly increasing pivot tuple of length dim in [0, ambient).
template <class Fn>
void for_each_pivot_set(std::size_t ambient, std::size_t dim, Fn&& fn) {
  if (dim > ambient) return;
  std::vector<std::size_t> piv(dim);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  while (true) {
    fn(std::span<const std::size_t>(piv));
    std::size_t i = dim;
    while (i > 0 && piv[i - 1] == ambient - dim + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// Free entries of an RREF with given pivots: row i may be nonzero in any
// non-pivot column to the right of its pivot.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(std::size_t ambient,
                                                               std::span<const std::size_t> piv) {
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = piv[i] + 1; c < ambient; ++c)
      if (!is_pivot[c]) out.emplace_back(i, c);
  return out;
}

}  // namespace

std::uint64_t count_subspaces(std::size_t ambient, std::size_t dim, unsigned q,
                              const std::function<bool(std::span<const std::size_t>)>& pivot_filter) {
  std::uint64_t total = 0;
  for_each_pivot_set(ambient, dim, [&](std::span<const std::size_t> piv) {
    if (pivot_filter && !pivot_filter(piv)) return;
    std::uint64_t n = 1;
    for (std::size_t k = free_positions(ambient, piv).size(); k > 0; --k) n *= q;
    total += n;
  });
  return total;
}

std::vector<Subspace> enumerate_subspaces(Field field, std::size_t ambient, std::size_t dim, std::uint64_t cap,
                                          const std::function<bool(std::span<const std::size_t>)>& pivot_filter) {
  const unsigned q = field->order();
  std::uint64_t expected = count_subspaces(ambient, dim, q, pivot_filter);
  if (expected > cap) {
    fail(ErrorCode::CapExceeded, std::to_string(expected) + " subspaces exceed cap " + std::to_string(cap));
  }
  std::vector<Subspace> out;
  out.reserve(expected);
  if (dim == 0) {
    if (!pivot_filter || pivot_filter({})) out.emplace_back(field, ambient);
    return out;
  }
  for_each_pivot_set(ambient, dim, [&](std::span<const std::size_t> piv) {
    if (pivot_filter && !pivot_filter(piv)) return;
    auto slots = free_positions(ambient, piv);
    std::vector<Elem> digits(slots.size(), 0);
    while (true) {
      FqMatrix b(field, dim, ambient);
      for (std::size_t i = 0; i < dim; ++i) b.set(i, piv[i], 1);
      for (std::size_t k = 0; k < slots.size(); ++k) b.set(slots[k].first, slots[k].second, digits[k]);
      out.push_back(Subspace::from_rows(b));
      // Increment with the last slot as least significant digit.
      std::size_t k = slots.size();
      while (k > 0) {
        if (++digits[k - 1] < q) break;
        digits[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  });
  return out;
}

}  // namespace clforms
