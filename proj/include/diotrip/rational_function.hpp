#pragma once

#include <string>

#include "diotrip/polynomial.hpp"

namespace diotrip {

// Fraction of polynomials kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}  // zero
  RationalFunction(long n) : num_(n), den_(1) {}  // NOLINT: implicit
  RationalFunction(const Polynomial& num) : num_(num), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_ == Polynomial(1); }
  const Polynomial& as_polynomial() const;  // throws unless is_polynomial

  // deg num - deg den; minus infinity for the zero function.
  Degree degree() const;

  // Order of vanishing at infinity: deg den - deg num. Throws on zero.
  long order_at_infinity() const;

  FieldSpec field() const { return merge_specs(num_.field(), den_.field()); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;    // throws std::domain_error on zero
  RationalFunction pow(long e) const;  // negative exponents via inverse

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  int cmp(const RationalFunction& o) const;

  std::string str(const std::string& var = "x") const;

 private:
  Polynomial num_, den_;
};

// A(f) for a polynomial A with constant coefficients, evaluated by Horner.
RationalFunction compose_constant_poly(const Polynomial& a, const RationalFunction& f);

}  // namespace diotrip
