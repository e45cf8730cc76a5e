#include "diotrip/rational_function.hpp"

#include <stdexcept>

namespace diotrip {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
  FieldElement lead = den_.leading_coefficient();
  if (!lead.is_one()) {
    FieldElement inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

const Polynomial& RationalFunction::as_polynomial() const {
  if (!is_polynomial())
    throw std::domain_error("rational function is not a polynomial: " + str());
  return num_;
}

Degree RationalFunction::degree() const {
  if (num_.is_zero()) return Degree::neg_infinity();
  return Degree::of(num_.degree().value() - den_.degree().value());
}

long RationalFunction::order_at_infinity() const {
  if (num_.is_zero())
    throw std::domain_error("order at infinity of the zero function");
  return den_.degree().value() - num_.degree().value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction base = *this;
  RationalFunction result = 1;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) result *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return result;
}

int RationalFunction::cmp(const RationalFunction& o) const {
  int c = num_.cmp(o.num_);
  return c != 0 ? c : den_.cmp(o.den_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction compose_constant_poly(const Polynomial& a, const RationalFunction& f) {
  RationalFunction acc;
  const auto& coeffs = a.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * f + RationalFunction(Polynomial(coeffs[i]));
  return acc;
}

}  // namespace diotrip
