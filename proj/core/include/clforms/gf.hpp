#pragma once

// Table-driven arithmetic for F_q (q <= 16) and polynomial extensions F_{q^l}.
//
// Elements of F_q are encoded as integers 0..q-1 whose base-p digits are the
// coefficients of the residue polynomial (digit i = coefficient of t^i).
// Defining polynomials are always the lexicographically least monic
// irreducible of the required degree, comparing coefficient tuples from the
// constant term upward.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace clforms {

using Elem = std::uint8_t;

inline constexpr unsigned kMaxFieldOrder = 16;

class FqField {
 public:
  /// Throws NotPrimePower or Unsupported.
  static std::shared_ptr<const FqField> create(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }

  /// Monic defining polynomial over F_p, low degree first, length degree()+1.
  std::span<const unsigned> modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// Throws PreconditionViolated for zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  Elem primitive_element() const noexcept { return generator_; }
  std::span<const Elem> exp_table() const noexcept { return exp_; }
  /// Discrete log base primitive_element(); a must be nonzero.
  unsigned log(Elem a) const noexcept { return log_[a]; }

 private:
  FqField() = default;

  unsigned q_ = 0;
  unsigned p_ = 0;
  unsigned e_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;
  std::vector<unsigned> log_;
  Elem generator_ = 1;
};

using Field = std::shared_ptr<const FqField>;

Field field_new(unsigned q);

/// Polynomials over a field, coefficient i at index i.
using Poly = std::vector<Elem>;

/// Remainder of a modulo m (m nonzero), trimmed of leading zeros.
Poly poly_mod(const FqField& f, Poly a, const Poly& m);
Poly poly_mul(const FqField& f, const Poly& a, const Poly& b);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const FqField& f, const Poly& monic);

/// Returns the monic polynomial (length degree+1) whose coefficient tuple
/// (c_0, c_1, ..., c_{degree-1}) is lexicographically least among the
/// irreducible ones.
Poly least_monic_irreducible(const FqField& f, unsigned degree);

/// F_{q^l} = F_q[t]/(modulus) with power basis 1, t, ..., t^{l-1}.
class ExtField {
 public:
  using Element = std::vector<Elem>;

  ExtField(Field base, unsigned degree);

  const Field& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return size_; }
  const Poly& modulus() const noexcept { return modulus_; }

  Element zero() const { return Element(degree_, 0); }
  Element one() const;
  /// Power-basis element t^i.
  Element basis(unsigned i) const;

  /// Base-q index with coefficient of t^0 as least significant digit.
  Element from_index(std::uint64_t index) const;
  std::uint64_t index(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  /// Throws PreconditionViolated for zero.
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;

 private:
  Field base_;
  unsigned degree_;
  std::uint64_t size_;
  Poly modulus_;
};

ExtField ext_field(Field base, unsigned degree);

}  // namespace clforms
