#include "diotrip/squarefree.hpp"

#include <stdexcept>

namespace diotrip {

Polynomial SquarefreeDecomposition::reassemble() const {
  Polynomial p(unit);
  for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
  return p;
}

SquarefreeDecomposition squarefree_decompose(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  SquarefreeDecomposition out;
  out.unit = f.leading_coefficient();
  Polynomial m = f.monic();
  if (m.is_constant()) return out;

  // Yun's scheme: strip one squarefree layer per round via derivative gcds.
  Polynomial g = poly_gcd(m, m.derivative());
  Polynomial w = *exact_divide(m, g);
  Polynomial y = *exact_divide(m.derivative(), g);
  unsigned i = 1;
  while (!w.is_constant()) {
    Polynomial z = y - w.derivative();
    Polynomial a = poly_gcd(w, z);
    if (!a.is_constant()) out.factors.push_back({a, i});
    w = *exact_divide(w, a);
    y = *exact_divide(z, a);
    ++i;
  }
  return out;
}

bool is_square_in_closure_poly(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return true;
  for (const auto& part : squarefree_decompose(f).factors)
    if (part.multiplicity % 2 != 0) return false;
  return true;
}

bool is_square_in_closure(const RationalFunction& f) {
  return is_square_in_closure_poly(f.num()) && is_square_in_closure_poly(f.den());
}

std::optional<Polynomial> monic_sqrt(const Polynomial& m) {
  if (m.is_zero() || !m.is_monic()) return std::nullopt;
  const long deg = m.degree().value();
  if (deg % 2 != 0) return std::nullopt;
  const long s = deg / 2;

  // r = x^s + r_{s-1} x^{s-1} + ... determined from the top coefficients:
  // matching x^(s+i) gives 2 r_i = m_{s+i} - sum of known cross terms.
  std::vector<FieldElement> r(static_cast<std::size_t>(s) + 1);
  r[static_cast<std::size_t>(s)] = FieldElement(1);
  const FieldElement half = FieldElement(make_rational(1, 2));
  for (long i = s - 1; i >= 0; --i) {
    FieldElement rest;
    for (long a = i + 1; a <= s - 1; ++a) {
      long b = s + i - a;  // stays within [i+1, s-1]
      rest += r[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)];
    }
    r[static_cast<std::size_t>(i)] =
        (m.coefficient(static_cast<std::size_t>(s + i)) - rest) * half;
  }
  Polynomial root = Polynomial::from_coefficients(r);
  if (root * root != m) return std::nullopt;
  return root;
}

namespace {

// Flip the sign so the leading coefficient has positive rational part, or
// positive extension part when the rational part is zero.
Polynomial canonical_sign(const Polynomial& p) {
  const FieldElement& lead = p.leading_coefficient();
  const mpq_class& a = lead.rational_part();
  if (a < 0 || (a == 0 && lead.extension_part() < 0)) return -p;
  return p;
}

}  // namespace

std::optional<Polynomial> poly_sqrt(const Polynomial& f) {
  if (f.is_zero()) return Polynomial();
  if (f.degree().value() % 2 != 0) return std::nullopt;
  auto root = monic_sqrt(f.monic());
  if (!root) return std::nullopt;

  const FieldElement lead = f.leading_coefficient();
  std::optional<FieldElement> lead_root = field_sqrt(lead, f.field());
  if (!lead_root && lead.is_rational()) {
    // extend Q by the squarefree kernel of the leading coefficient
    mpz_class lambda;
    mpq_class rest;
    squarefree_split(lead.as_rational(), lambda, rest);
    if (lambda != 1) lead_root = FieldElement(FieldSpec::quadratic(lambda), 0, rest);
  }
  if (!lead_root) return std::nullopt;
  return canonical_sign(*root * *lead_root);
}

RationalFunction RadicalDecomposition::reassemble() const {
  return RationalFunction(Polynomial(unit)) * cofactor * cofactor *
         RationalFunction(radicand);
}

RadicalDecomposition radical_decompose(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("radical decomposition of zero");
  RadicalDecomposition out;
  out.radicand = Polynomial(1);

  // num * den = unit * even^2 * radicand, so f = unit * (even/den)^2 * radicand.
  SquarefreeDecomposition sf = squarefree_decompose(f.num() * f.den());
  out.unit = sf.unit;
  Polynomial even_part(1);
  for (const auto& part : sf.factors) {
    if (part.multiplicity % 2 == 1) out.radicand *= part.factor;
    if (part.multiplicity / 2 > 0) even_part *= part.factor.pow(part.multiplicity / 2);
  }
  out.cofactor = RationalFunction(even_part, f.den());
  return out;
}

}  // namespace diotrip
