#pragma once

#include <string>
#include <vector>

#include "diotrip/squarefree.hpp"

namespace diotrip {

// A Galois-stable packet of places of the rational function field: either
// the vanishing locus of a squarefree monic polynomial (its conjugate roots
// travel together, one place per root) or the single place at infinity.
class PlaceBundle {
 public:
  enum class Kind { finite, infinite };

  static PlaceBundle at_infinity() { return PlaceBundle(); }
  static PlaceBundle finite(const Polynomial& index);  // validates the index

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  const Polynomial& index() const;  // throws for the infinite bundle

  // Number of places grouped in the bundle.
  long size() const { return is_infinite() ? 1 : index_.degree().value(); }

  bool operator==(const PlaceBundle& o) const {
    return kind_ == o.kind_ && index_ == o.index_;
  }
  int cmp(const PlaceBundle& o) const;

  std::string str() const;

 private:
  PlaceBundle() : kind_(Kind::infinite) {}
  Kind kind_;
  Polynomial index_ = Polynomial(1);
};

// Valuation value with a dedicated +infinity for the zero function.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation of(long v) {
    Valuation x;
    x.finite_ = true;
    x.v_ = v;
    return x;
  }

  bool is_infinity() const { return !finite_; }
  long value() const;  // throws on infinity

  bool operator==(const Valuation& o) const {
    return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
  }
  bool operator==(long v) const { return finite_ && v_ == v; }

  std::string str() const;

 private:
  Valuation() = default;
  bool finite_ = false;
  long v_ = 0;
};

// Order of f along every place in the bundle (the shared value). For a
// finite bundle this is the multiplicity of the index in the numerator minus
// the denominator; the infinite place measures deg den - deg num. Throws
// std::invalid_argument when the index separates the places of f (the
// cofactor after stripping still shares a root with the index), since the
// places in the bundle then disagree.
Valuation valuation(const RationalFunction& f, const PlaceBundle& place);

// Finite bundles where f has a zero or pole, with the shared order; sorted
// deterministically. The infinite place is reported by order_at_infinity.
std::vector<std::pair<PlaceBundle, long>> support(const RationalFunction& f);

// Refine a set of nonzero polynomials into pairwise coprime squarefree monic
// polynomials generating the same vanishing loci: every input's squarefree
// part is a product of basis elements.
std::vector<Polynomial> gcd_free_basis(const std::vector<Polynomial>& inputs);

// Degrees-weighted sum of all valuations of a nonzero f, which the product
// formula makes vanish identically.
bool sum_formula_check(const RationalFunction& f);

// Height max(deg num, deg den). Throws std::domain_error on zero.
long height(const RationalFunction& f);

// The same number assembled from its definition as -sum of deg-weighted
// negative valuations; kept as an independent route for cross-checking.
long height_definitional(const RationalFunction& f);

struct HeightPropertyRecord {
  std::string property;
  std::string detail;
  bool pass;
};

struct HeightPropertyReport {
  std::vector<HeightPropertyRecord> records;
  bool all_pass = true;
  std::string first_violation;

  void add(const std::string& property, bool pass, const std::string& detail);
};

// Exercises the standard height laws on the given samples: nonnegativity
// and invariance under inversion, triangle-style bounds for sums and
// products, the power law, vanishing exactly on constants, and composition
// with constant-coefficient polynomials. The polynomials in `outer` pair up
// with the samples cyclically for the composition law.
HeightPropertyReport height_property_suite(
    const std::vector<std::pair<RationalFunction, RationalFunction>>& samples,
    const std::vector<Polynomial>& outer);

}  // namespace diotrip
