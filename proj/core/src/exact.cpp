#include "clforms/exact.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "clforms/error.hpp"

namespace clforms {

std::uint64_t matrix_cap_mb() {
  if (const char* env = std::getenv("CLFORMS_CAP_MB")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1024;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows > kMaxExactDimension || cols > kMaxExactDimension)
    fail(ErrorCode::CapExceeded, "exact matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                     " exceeds " + std::to_string(kMaxExactDimension));
  const std::uint64_t bytes = static_cast<std::uint64_t>(rows) * cols * sizeof(BigInt);
  if (bytes > matrix_cap_mb() * (std::uint64_t{1} << 20))
    fail(ErrorCode::CapExceeded, "exact matrix needs " + std::to_string(bytes >> 20) + " MiB, cap is " +
                                     std::to_string(matrix_cap_mb()) + " MiB (CLFORMS_CAP_MB)");
  entries_.assign(rows * cols, BigInt(0));
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  ExactMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) fail(ErrorCode::ShapeMismatch, "ragged rows");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "product of incompatible matrices");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "difference of unequal shapes");
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

ExactMatrix shift_diagonal(const ExactMatrix& m, const BigInt& lambda) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "diagonal shift of a non-square matrix");
  ExactMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= lambda;
  return out;
}

RationalVector multiply(const ExactMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols())
    fail(ErrorCode::LengthMismatch, "vector of length " + std::to_string(v.size()) + " against " +
                                        std::to_string(m.cols()) + " columns");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += Rational(m(r, c)) * v[c];
  return out;
}

IntegerReduction fraction_free_reduce(ExactMatrix a) {
  IntegerReduction out;
  BigInt prev = 1;
  std::size_t r = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const BigInt piv = a(r, c);
    // Gauss-Jordan form of Bareiss: every division below is exact.
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const BigInt f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        BigInt t = piv * a(i, j);
        if (f != 0 && a(r, j) != 0) t -= f * a(r, j);
        a(i, j) = t / prev;
      }
      a(i, c) = 0;
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  // Earlier pivot rows were rescaled along the way; all pivots now equal prev.
  out.scale = prev;
  out.form = std::move(a);
  return out;
}

std::size_t exact_rank(const ExactMatrix& m) { return fraction_free_reduce(m).pivots.size(); }

std::vector<IntVector> integer_kernel_basis(const ExactMatrix& m) {
  IntegerReduction red = fraction_free_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    IntVector v(m.cols(), BigInt(0));
    v[fc] = red.scale;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.form(k, fc);
    BigInt g = 0;
    for (const auto& e : v) g = boost::multiprecision::gcd(g, e);
    if (v[fc] < 0) g = -g;
    for (auto& e : v) e /= g;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
  std::vector<RationalVector> out;
  for (const auto& v : integer_kernel_basis(m)) out.emplace_back(v.begin(), v.end());
  return out;
}

bool in_image_of_transpose(const ExactMatrix& m, std::span<const Rational> v) {
  return ImageTester(m).contains(v);
}

ImageTester::ImageTester(const ExactMatrix& m) : length_(m.cols()), kernel_(integer_kernel_basis(m)) {}

bool ImageTester::contains(std::span<const Rational> v) const {
  if (v.size() != length_)
    fail(ErrorCode::LengthMismatch, "vector of length " + std::to_string(v.size()) + ", expected " +
                                        std::to_string(length_));
  for (const auto& k : kernel_) {
    Rational dot = 0;
    for (std::size_t i = 0; i < length_; ++i)
      if (v[i] != 0 && k[i] != 0) dot += v[i] * Rational(k[i]);
    if (dot != 0) return false;
  }
  return true;
}

long ImageTester::first_violation(std::span<const std::uint8_t> bits) const {
  if (bits.size() != length_)
    fail(ErrorCode::LengthMismatch, "indicator of length " + std::to_string(bits.size()) + ", expected " +
                                        std::to_string(length_));
  for (std::size_t j = 0; j < kernel_.size(); ++j) {
    BigInt dot = 0;
    for (std::size_t i = 0; i < length_; ++i)
      if (bits[i]) dot += kernel_[j][i];
    if (dot != 0) return static_cast<long>(j);
  }
  return -1;
}

bool ImageTester::contains_indicator(std::span<const std::uint8_t> bits) const { return first_violation(bits) < 0; }

}  // namespace clforms
