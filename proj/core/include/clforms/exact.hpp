#pragma once

// Dense exact matrices over Z (viewed inside Q) with fraction-free
// elimination. Rational vectors are used only on the vector side.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clforms/bigint.hpp"

namespace clforms {

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<BigInt>;

inline constexpr std::size_t kMaxExactDimension = 4096;

/// Memory cap for dense exact matrices in MiB, from CLFORMS_CAP_MB
/// (default 1024).
std::uint64_t matrix_cap_mb();

class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix. Throws CapExceeded past kMaxExactDimension or the memory cap.
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  BigInt& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

ExactMatrix transpose(const ExactMatrix& m);
/// Throws ShapeMismatch.
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
/// m - lambda I; m must be square.
ExactMatrix shift_diagonal(const ExactMatrix& m, const BigInt& lambda);

/// Throws LengthMismatch.
RationalVector multiply(const ExactMatrix& m, std::span<const Rational> v);

/// Reduced form from fraction-free Gauss-Jordan elimination: every pivot
/// entry equals `scale` and pivot columns are zero elsewhere.
struct IntegerReduction {
  ExactMatrix form;
  std::vector<std::size_t> pivots;
  BigInt scale;
};

IntegerReduction fraction_free_reduce(ExactMatrix m);
std::size_t exact_rank(const ExactMatrix& m);

/// Basis of {v : m v = 0}, one primitive integer vector per free column.
std::vector<IntVector> integer_kernel_basis(const ExactMatrix& m);
std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

/// Im(m^t) = ker(m)^perp. Throws LengthMismatch unless v.size() == m.cols().
bool in_image_of_transpose(const ExactMatrix& m, std::span<const Rational> v);

/// Reusable membership test for Im(m^t) with the kernel computed once.
class ImageTester {
 public:
  explicit ImageTester(const ExactMatrix& m);

  std::size_t length() const noexcept { return length_; }
  const std::vector<IntVector>& kernel() const noexcept { return kernel_; }

  bool contains(std::span<const Rational> v) const;
  /// Characteristic vector of a 0/1 selection.
  bool contains_indicator(std::span<const std::uint8_t> bits) const;
  /// Index of the first kernel vector not orthogonal to the indicator, or -1.
  long first_violation(std::span<const std::uint8_t> bits) const;

 private:
  std::size_t length_ = 0;
  std::vector<IntVector> kernel_;
};

}  // namespace clforms
