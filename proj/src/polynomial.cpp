#include "diotrip/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace diotrip {

long Degree::value() const {
  if (!finite_) throw std::domain_error("degree of the zero polynomial has no value");
  return v_;
}

std::string Degree::str() const { return finite_ ? std::to_string(v_) : "-inf"; }

Polynomial::Polynomial(const FieldElement& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial Polynomial::from_coefficients(std::vector<FieldElement> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t exponent) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.assign(exponent + 1, FieldElement());
    p.coeffs_[exponent] = c;
  }
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity()
                         : Degree::of(static_cast<long>(coeffs_.size()) - 1);
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement();
}

const FieldElement& Polynomial::leading_coefficient() const {
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

FieldSpec Polynomial::field() const {
  FieldSpec spec = FieldSpec::rationals();
  for (const auto& c : coeffs_) spec = merge_specs(spec, c.spec());
  return spec;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = coefficient(i) + o.coefficient(i);
  r.trim();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  Polynomial r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, FieldElement());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  Polynomial r;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = coeffs_[i] * FieldElement(static_cast<long>(i));
  r.trim();
  return r;
}

Polynomial Polynomial::monic() const {
  return *this * leading_coefficient().inverse();
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  FieldElement acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

int Polynomial::cmp(const Polynomial& o) const {
  if (coeffs_.size() != o.coeffs_.size())
    return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    int c = coeffs_[i].cmp(o.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negated = false;
    if (!first && cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
        cs.find('-', 1) == std::string::npos) {
      cs = cs.substr(1);
      negated = true;
    }
    if (!first) out << (negated ? " - " : " + ");
    bool wrap = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos ||
                cs.find('/') != std::string::npos;
    if (i == 0) {
      out << (wrap ? "(" + cs + ")" : cs);
    } else {
      if (cs == "1") {
      } else if (cs == "-1") {
        out << "-";
      } else {
        out << (wrap ? "(" + cs + ")" : cs) << "*";
      }
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q, r = a;
  const long db = b.degree().value();
  const FieldElement inv_lead = b.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree().value() >= db) {
    const long k = r.degree().value() - db;
    FieldElement c = r.leading_coefficient() * inv_lead;
    Polynomial t = Polynomial::monomial(c, static_cast<std::size_t>(k));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = divrem(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

unsigned multiplicity(const Polynomial& f, const Polynomial& q) {
  if (f.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (q.is_constant()) throw std::invalid_argument("multiplicity of a constant divisor");
  unsigned e = 0;
  Polynomial rest = f;
  while (true) {
    auto quotient = exact_divide(rest, q);
    if (!quotient) return e;
    rest = std::move(*quotient);
    ++e;
  }
}

}  // namespace diotrip
