#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace diotrip {

enum class FieldTag : std::uint8_t { rational, quadratic, zeta3 };

// Coefficient field of every scalar in the toolkit: Q, a quadratic extension
// Q(sqrt(d)) with d a squarefree integer (possibly negative), or Q(zeta3)
// realized as Q[t]/(t^2+t+1). One extension step is the whole tower.
struct FieldSpec {
  FieldTag tag = FieldTag::rational;
  mpz_class d = 0;  // radicand, quadratic tag only

  static FieldSpec rationals() { return {}; }
  static FieldSpec quadratic(const mpz_class& d);  // validates d
  static FieldSpec cyclotomic3() { return {FieldTag::zeta3, mpz_class(0)}; }

  bool operator==(const FieldSpec& o) const { return tag == o.tag && d == o.d; }
  bool is_rational() const { return tag == FieldTag::rational; }

  std::string name() const;  // "Q" | "Q_sqrt:<d>" | "Q_zeta3"
  static FieldSpec parse(const std::string& name);
};

// Common field of two scalars. Plain rationals mix with anything; two
// distinct extensions never meet (throws std::invalid_argument).
FieldSpec merge_specs(const FieldSpec& x, const FieldSpec& y);

// a + b*tau with tau^2 = d (quadratic) or tau^2 = -tau-1 (zeta3). Elements
// with b == 0 are stored with the rational tag so values of Q embedded in an
// extension compare equal to plain rationals.
class FieldElement {
 public:
  FieldElement() : a_(0), b_(0) {}
  FieldElement(long n) : a_(n), b_(0) {}  // NOLINT: implicit by design
  explicit FieldElement(const mpq_class& a) : a_(a), b_(0) {}
  FieldElement(const FieldSpec& spec, const mpq_class& a, const mpq_class& b);

  const FieldSpec& spec() const { return spec_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& extension_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  const mpq_class& as_rational() const;  // throws unless b == 0

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;    // throws std::domain_error on zero
  FieldElement conjugate() const;  // identity on rationals
  mpq_class norm() const;          // self * conjugate, always rational

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Total order for canonical sorting (not compatible with arithmetic).
  int cmp(const FieldElement& o) const;

  // Square root within this element's own field, if one exists.
  std::optional<FieldElement> sqrt() const;

  // Printable form: "a" or "a+b*w" where w is the extension generator.
  std::string str() const;

 private:
  void normalize();  // demote to rational tag when b == 0

  mpq_class a_, b_;
  FieldSpec spec_;
};

// Square root inside an explicitly given field (the element is promoted
// into `ctx` first). Lets callers ask for sqrt(2) inside Q(sqrt(2)) even
// when the element itself is stored as a plain rational.
std::optional<FieldElement> field_sqrt(const FieldElement& x, const FieldSpec& ctx);

// q == r^2 for rational r? Fills *root with the nonnegative root on success.
bool rational_is_square(const mpq_class& q, mpq_class* root = nullptr);

// Signed squarefree kernel: n = kernel * s^2 with kernel squarefree.
// Square prime factors are found by trial division up to a fixed bound plus
// a perfect-square test on the cofactor; exact for every integer whose
// square part has no prime factor above the bound.
mpz_class squarefree_kernel(const mpz_class& n);

// q = lambda * s^2 with lambda the signed squarefree kernel of q and s > 0.
void squarefree_split(const mpq_class& q, mpz_class& lambda, mpq_class& s);

mpq_class make_rational(long num, long den);

}  // namespace diotrip
