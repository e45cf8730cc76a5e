#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diotrip/field.hpp"

namespace diotrip {

// Degree of a univariate polynomial. The zero polynomial gets a dedicated
// minus-infinity value that absorbs addition and compares below everything,
// so no integer ever doubles as a sentinel.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree of(long v) {
    Degree g;
    g.finite_ = true;
    g.v_ = v;
    return g;
  }

  bool is_neg_infinity() const { return !finite_; }
  long value() const;  // throws std::domain_error on minus infinity

  Degree operator+(const Degree& o) const {
    return (finite_ && o.finite_) ? of(v_ + o.v_) : neg_infinity();
  }

  bool operator==(const Degree& o) const {
    return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
  }
  bool operator!=(const Degree& o) const { return !(*this == o); }
  bool operator<(const Degree& o) const {
    if (!finite_) return o.finite_;
    if (!o.finite_) return false;
    return v_ < o.v_;
  }
  bool operator<=(const Degree& o) const { return *this < o || *this == o; }
  bool operator>(const Degree& o) const { return o < *this; }
  bool operator>=(const Degree& o) const { return o <= *this; }

  bool operator==(long v) const { return finite_ && v_ == v; }
  bool operator<(long v) const { return !finite_ || v_ < v; }
  bool operator>(long v) const { return finite_ && v_ > v; }
  bool operator<=(long v) const { return !finite_ || v_ <= v; }
  bool operator>=(long v) const { return finite_ && v_ >= v; }

  std::string str() const;

 private:
  Degree() = default;
  bool finite_ = false;
  long v_ = 0;
};

// Dense univariate polynomial over the scalar field, coefficients stored in
// ascending order with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;  // zero
  Polynomial(long n) : Polynomial(FieldElement(n)) {}  // NOLINT: implicit
  explicit Polynomial(const FieldElement& c);
  explicit Polynomial(const mpq_class& c) : Polynomial(FieldElement(c)) {}

  static Polynomial from_coefficients(std::vector<FieldElement> coeffs);
  static Polynomial monomial(const FieldElement& c, std::size_t exponent);
  static Polynomial variable() { return monomial(FieldElement(1), 1); }

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading_coefficient().is_one(); }

  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coefficient(std::size_t i) const;  // zero beyond the degree
  const FieldElement& leading_coefficient() const;  // throws on zero
  FieldElement constant_term() const { return coefficient(0); }

  // Common field of all coefficients.
  FieldSpec field() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial operator/(const FieldElement& c) const { return *this * c.inverse(); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned long e) const;
  Polynomial derivative() const;
  Polynomial monic() const;  // throws on zero
  FieldElement evaluate(const FieldElement& x) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Deterministic total order: degree first, then coefficients from the top.
  int cmp(const Polynomial& o) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

// Quotient and remainder with deg(r) < deg(divisor); field coefficients make
// the division exact at every step. Throws std::domain_error on zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

// Quotient when the division is exact, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// Monic gcd by the Euclidean remainder sequence. Throws when both inputs are
// zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// How many times q divides f exactly (q nonconstant, f nonzero).
unsigned multiplicity(const Polynomial& f, const Polynomial& q);

}  // namespace diotrip
