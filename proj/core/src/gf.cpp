#include "clforms/gf.hpp"

#include <string>

#include "clforms/error.hpp"

namespace clforms {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Elements of F_{p^e} as base-p digit vectors of length e.
Poly digits_of(unsigned value, unsigned p, unsigned e) {
  Poly d(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = static_cast<Elem>(value % p);
    value /= p;
  }
  return d;
}

unsigned value_of(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Poly poly_mul(const FqField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

Poly poly_mod(const FqField& f, Poly a, const Poly& m) {
  Poly mm = m;
  trim(mm);
  if (mm.empty()) fail(ErrorCode::PreconditionViolated, "polynomial division by zero");
  trim(a);
  const Elem lead_inv = f.inv(mm.back());
  while (a.size() >= mm.size()) {
    const Elem factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(factor, mm[i]));
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const FqField& f, const Poly& monic) {
  Poly g = monic;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1) return true;
  const unsigned q = f.order();
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(k + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      divisor[k] = 1;
      if (poly_mod(f, g, divisor).empty()) return false;
    }
  }
  return true;
}

Poly least_monic_irreducible(const FqField& f, unsigned degree) {
  if (degree == 0) fail(ErrorCode::BadParams, "irreducible polynomial of degree 0 requested");
  const unsigned q = f.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= q;
  // Enumerate (c_0, ..., c_{d-1}) with c_0 the most significant position.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly candidate(degree + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = degree; i-- > 0;) {
      candidate[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    candidate[degree] = 1;
    if (is_irreducible(f, candidate)) return candidate;
  }
  fail(ErrorCode::Unsupported, "no irreducible polynomial of degree " + std::to_string(degree));
}

std::shared_ptr<const FqField> FqField::create(unsigned q) {
  if (q < 2) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) {
    fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxFieldOrder) {
    fail(ErrorCode::Unsupported, "field order " + std::to_string(q) + " exceeds 16");
  }

  std::shared_ptr<FqField> f(new FqField());
  f->q_ = q;
  f->p_ = p;
  f->e_ = e;
  f->add_.resize(q * q);
  f->mul_.resize(q * q);
  f->neg_.resize(q);
  f->inv_.assign(q, 0);

  if (e == 1) {
    f->modulus_ = {0, 1};
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        f->add_[a * q + b] = static_cast<Elem>((a + b) % q);
        f->mul_[a * q + b] = static_cast<Elem>((a * b) % q);
      }
    }
  } else {
    const auto prime = create(p);
    const Poly modulus = least_monic_irreducible(*prime, e);
    f->modulus_.assign(modulus.begin(), modulus.end());
    for (unsigned a = 0; a < q; ++a) {
      const Poly da = digits_of(a, p, e);
      for (unsigned b = 0; b < q; ++b) {
        const Poly db = digits_of(b, p, e);
        Poly sum(e, 0);
        for (unsigned i = 0; i < e; ++i) sum[i] = static_cast<Elem>((da[i] + db[i]) % p);
        f->add_[a * q + b] = static_cast<Elem>(value_of(sum, p));
        Poly prod = poly_mod(*prime, poly_mul(*prime, da, db), modulus);
        prod.resize(e, 0);
        f->mul_[a * q + b] = static_cast<Elem>(value_of(prod, p));
      }
    }
  }

  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (f->add_[a * q + b] == 0) f->neg_[a] = static_cast<Elem>(b);
      if (a != 0 && f->mul_[a * q + b] == 1) f->inv_[a] = static_cast<Elem>(b);
    }
  }

  // Smallest element of multiplicative order q-1.
  for (unsigned g = 1; g < q; ++g) {
    unsigned order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = f->mul_[x * q + g];
      ++order;
    }
    if (order == q - 1) {
      f->generator_ = static_cast<Elem>(g);
      break;
    }
  }
  f->exp_.resize(q - 1);
  f->log_.assign(q, 0);
  Elem x = 1;
  for (unsigned k = 0; k + 1 < q; ++k) {
    f->exp_[k] = x;
    f->log_[x] = k;
    x = f->mul_[x * q + f->generator_];
  }
  return f;
}

Elem FqField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::PreconditionViolated, "inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

Elem FqField::pow(Elem a, std::uint64_t k) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Field field_new(unsigned q) { return FqField::create(q); }

ExtField::ExtField(Field base, unsigned degree) : base_(std::move(base)), degree_(degree), size_(1) {
  if (degree_ == 0) fail(ErrorCode::BadParams, "extension degree must be >= 1");
  for (unsigned i = 0; i < degree_; ++i) size_ *= base_->order();
  modulus_ = least_monic_irreducible(*base_, degree_);
}

ExtField::Element ExtField::one() const {
  Element r(degree_, 0);
  r[0] = 1;
  return r;
}

ExtField::Element ExtField::basis(unsigned i) const {
  Element r(degree_, 0);
  if (i < degree_) {
    r[i] = 1;
  } else {
    Poly t(i + 1, 0);
    t[i] = 1;
    Poly red = poly_mod(*base_, t, modulus_);
    for (std::size_t k = 0; k < red.size(); ++k) r[k] = red[k];
  }
  return r;
}

ExtField::Element ExtField::from_index(std::uint64_t index) const {
  Element r(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    r[i] = static_cast<Elem>(index % base_->order());
    index /= base_->order();
  }
  return r;
}

std::uint64_t ExtField::index(const Element& a) const {
  std::uint64_t v = 0;
  for (unsigned i = degree_; i-- > 0;) v = v * base_->order() + a[i];
  return v;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
  Element r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
  Element r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = base_->sub(a[i], b[i]);
  return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
  Poly prod = poly_mod(*base_, poly_mul(*base_, a, b), modulus_);
  prod.resize(degree_, 0);
  return prod;
}

bool ExtField::is_zero(const Element& a) const {
  for (Elem c : a) {
    if (c != 0) return false;
  }
  return true;
}

ExtField::Element ExtField::inv(const Element& a) const {
  if (is_zero(a)) fail(ErrorCode::PreconditionViolated, "inverse of zero in extension field");
  // a^(q^l - 2)
  std::uint64_t k = size_ - 2;
  Element result = one();
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

ExtField ext_field(Field base, unsigned degree) { return ExtField(std::move(base), degree); }

}  // namespace clforms
