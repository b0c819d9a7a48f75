#pragma once

#include <vector>

#include "qtsg/exact.hpp"

namespace qtsg {

// Truncated formal power series with exact rational coefficients. All
// arithmetic is exact modulo z^order.
class PowerSeries {
 public:
  // The zero series of the given truncation order (number of coefficients).
  explicit PowerSeries(size_t order);
  PowerSeries(std::vector<Rational> coefficients, size_t order);

  // e^z truncated to `order` terms.
  static PowerSeries exp(size_t order);
  // A polynomial given by integer coefficients, constant term first.
  static PowerSeries polynomial(const std::vector<long long>& coefficients,
                                size_t order);

  size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  // 1/f by the linear recurrence on coefficients. Throws InvalidArgument when
  // the constant term vanishes.
  PowerSeries reciprocal() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// n! * [z^n] s, asserted integral (InternalConsistencyError otherwise).
ExactInt egf_coefficient(const PowerSeries& s, size_t n);
// [z^n] s, asserted integral.
ExactInt gf_coefficient(const PowerSeries& s, size_t n);

}  // namespace qtsg
