#pragma once

// Dense exact linear algebra over F_q.
//
// Subspaces use the row convention: a Subspace stores the reduced row echelon
// form of a spanning set, one basis vector per row, so equal subspaces have
// identical basis matrices. Column-convention inputs go through
// Subspace::from_columns.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "clforms/gf.hpp"

namespace clforms {

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(Field field, std::size_t rows, std::size_t cols);
  FqMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static FqMatrix identity(Field field, std::size_t n);
  static FqMatrix from_rows(Field field, std::initializer_list<std::initializer_list<unsigned>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem value) noexcept { entries_[r * cols_ + c] = value; }

  std::span<const Elem> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const noexcept { return entries_; }
  std::span<Elem> entries() noexcept { return entries_; }

  bool is_zero() const noexcept;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> entries_;
};

FqMatrix transpose(const FqMatrix& m);
/// Throws ShapeMismatch on incompatible shapes.
FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
/// Rows of top followed by rows of bottom.
FqMatrix vstack(const FqMatrix& top, const FqMatrix& bottom);

std::vector<Elem> apply(const FqMatrix& m, std::span<const Elem> v);

struct Rref {
  FqMatrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);

/// In-place rank of a small row-major buffer; the buffer is destroyed.
std::size_t rank_in_place(const FqField& f, std::span<Elem> buffer, std::size_t rows, std::size_t cols);

/// rank(a - b). Throws ShapeMismatch.
std::size_t rank_distance(const FqMatrix& a, const FqMatrix& b);

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F_q^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace from_rows(const FqMatrix& spanning);
  static Subspace from_columns(const FqMatrix& spanning);
  static Subspace full(Field field, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FqMatrix& basis() const noexcept { return basis_; }
  const Field& field() const noexcept { return field_; }

  bool contains_vector(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  FqMatrix basis_;
};

/// Null space {v : m v = 0} as a subspace of F_q^{m.cols()}.
Subspace kernel(const FqMatrix& m);

/// Vectors orthogonal (standard dot product) to every vector of s.
Subspace annihilator(const Subspace& s);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  /// b is contained in a.
  bool contains = false;
};

/// Throws AmbientMismatch.
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);
Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);
/// dim(a ∩ b) via the modular law; cheaper than building the intersection.
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Number of RREF matrices (subspaces) visited by enumerate_subspaces.
std::uint64_t count_subspaces(std::size_t ambient, std::size_t dim, unsigned q,
                              const std::function<bool(std::span<const std::size_t>)>& pivot_filter = {});

/// All dim-dimensional subspaces of F_q^ambient whose pivot set passes the
/// filter, in order of pivot set (lexicographic) then free entries.
/// Throws CapExceeded when the count exceeds cap.
std::vector<Subspace> enumerate_subspaces(Field field, std::size_t ambient, std::size_t dim, std::uint64_t cap,
                                          const std::function<bool(std::span<const std::size_t>)>& pivot_filter = {});

}  // namespace clforms
