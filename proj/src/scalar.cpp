#include "lu/scalar.hpp"

#include "lu/errors.hpp"

namespace lu {

Scalar::Scalar(long value, Field field) : q_(value), p_(field.p) {
  normalize();
}

Scalar Scalar::from_rational(const mpq_class& q, Field field) {
  Scalar s;
  s.q_ = q;
  s.q_.canonicalize();
  s.p_ = field.p;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (p_ == 0) return;
  mpz_class p = p_;
  mpz_class num = q_.get_num() % p;
  if (num < 0) num += p;
  if (q_.get_den() != 1) {
    mpz_class den = q_.get_den() % p;
    if (den == 0) throw Error("denominator divisible by field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  q_ = mpq_class(num);
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw Error("mixing scalars of different characteristic");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r;
  r.p_ = p_;
  r.q_ = 1 / q_;
  r.q_.canonicalize();
  r.normalize();
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.p_ = Scalar::common_modulus(a, b);
  r.q_ = a.q_ + b.q_;
  r.normalize();
  if (r.p_ != 0 && (a.p_ == 0 || b.p_ == 0)) {
    // reduce the rational operand first
    Scalar ra = Scalar::from_rational(a.q_, {r.p_});
    Scalar rb = Scalar::from_rational(b.q_, {r.p_});
    r.q_ = ra.q_ + rb.q_;
    r.normalize();
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.p_ = Scalar::common_modulus(a, b);
  if (r.p_ != 0 && (a.p_ == 0 || b.p_ == 0)) {
    Scalar ra = Scalar::from_rational(a.q_, {r.p_});
    Scalar rb = Scalar::from_rational(b.q_, {r.p_});
    r.q_ = ra.q_ * rb.q_;
  } else {
    r.q_ = a.q_ * b.q_;
  }
  r.normalize();
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  return a * Scalar::from_rational(b.q_, {p}).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.q_ == b.q_;
  std::uint32_t p = Scalar::common_modulus(a, b);
  return Scalar::from_rational(a.q_, {p}).q_ ==
         Scalar::from_rational(b.q_, {p}).q_;
}

std::string Scalar::str() const { return q_.get_str(); }

}  // namespace lu
