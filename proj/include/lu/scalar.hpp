#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lu {

/// Coefficient field: modulus 0 means Q, otherwise F_p with p < 2^31.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element. Rationals are kept canonical (lowest terms, positive
/// denominator); residues are stored as integers in [0, p).
///
/// A rational operand meeting an F_p operand is reduced mod p first, so
/// integer literals built without a field mix freely with residues.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, Field field = {});  // NOLINT(google-explicit-constructor)
  static Scalar from_rational(const mpq_class& q, Field field = {});

  Field field() const { return {p_}; }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void normalize();
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);

  mpq_class q_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace lu
