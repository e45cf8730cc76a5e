#pragma once

#include <optional>
#include <vector>

#include "diotrip/rational_function.hpp"

namespace diotrip {

struct SquarefreeFactor {
  Polynomial factor;      // monic, squarefree, nonconstant
  unsigned multiplicity;  // >= 1
};

// f = unit * prod factor^multiplicity with pairwise coprime factors.
struct SquarefreeDecomposition {
  FieldElement unit;
  std::vector<SquarefreeFactor> factors;

  Polynomial reassemble() const;
};

// Yun's derivative/gcd scheme; no irreducible factorization anywhere.
// Throws std::domain_error on the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const Polynomial& f);

// Every multiplicity in the decomposition of f even? Constants qualify.
// Over an algebraically closed scalar field this is exactly squareness.
bool is_square_in_closure_poly(const Polynomial& f);

// Numerator and denominator both pass the polynomial test. Zero qualifies.
bool is_square_in_closure(const RationalFunction& f);

// Monic square root of a monic polynomial by coefficient matching from the
// top, verified exactly; nullopt when no such root exists.
std::optional<Polynomial> monic_sqrt(const Polynomial& m);

// s with s^2 == f. The monic part is handled by monic_sqrt; the leading
// coefficient takes a square root in the coefficient field, extending plain
// rationals to Q(sqrt(lambda)) when needed. The root's leading coefficient
// is normalized to have positive rational part (or positive extension part
// when the rational part vanishes). Nullopt when f is not a square.
std::optional<Polynomial> poly_sqrt(const Polynomial& f);

// f = unit * cofactor^2 * radicand with a monic squarefree radicand (the
// product of odd-multiplicity factors of numerator and denominator) and a
// scalar unit. Throws std::domain_error on zero.
struct RadicalDecomposition {
  FieldElement unit;
  Polynomial radicand;
  RationalFunction cofactor;

  RationalFunction reassemble() const;
};

RadicalDecomposition radical_decompose(const RationalFunction& f);

}  // namespace diotrip
