#include "qtsg/power_series.hpp"

#include <algorithm>

#include "qtsg/error.hpp"

namespace qtsg {

PowerSeries::PowerSeries(size_t order) : coeffs_(order, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, size_t order)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order, Rational(0));
}

PowerSeries PowerSeries::exp(size_t order) {
  PowerSeries s(order);
  Rational term(1);
  for (size_t k = 0; k < order; ++k) {
    if (k > 0) term /= static_cast<long long>(k);
    s.coeffs_[k] = term;
  }
  return s;
}

PowerSeries PowerSeries::polynomial(const std::vector<long long>& coefficients,
                                    size_t order) {
  PowerSeries s(order);
  for (size_t k = 0; k < std::min(order, coefficients.size()); ++k) {
    s.coeffs_[k] = coefficients[k];
  }
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (size_t i = 0; i < order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < order; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_.empty()) return *this;
  if (coeffs_[0] == 0) {
    throw InvalidArgument("series with zero constant term has no reciprocal");
  }
  PowerSeries inv(order());
  const Rational c0_inv = Rational(1) / coeffs_[0];
  inv.coeffs_[0] = c0_inv;
  for (size_t n = 1; n < order(); ++n) {
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) acc += coeffs_[k] * inv.coeffs_[n - k];
    inv.coeffs_[n] = -acc * c0_inv;
  }
  return inv;
}

namespace {

ExactInt require_integral(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw InternalConsistencyError(std::string(what) +
                                   " is not an integer: " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

}  // namespace

ExactInt egf_coefficient(const PowerSeries& s, size_t n) {
  if (n >= s.order()) throw InvalidArgument("coefficient beyond truncation order");
  Rational v = s[n];
  for (size_t k = 2; k <= n; ++k) v *= static_cast<long long>(k);
  return require_integral(v, "n! times EGF coefficient");
}

ExactInt gf_coefficient(const PowerSeries& s, size_t n) {
  if (n >= s.order()) throw InvalidArgument("coefficient beyond truncation order");
  return require_integral(s[n], "GF coefficient");
}

}  // namespace qtsg
