#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diotrip/expansion.hpp"
#include "diotrip/extension.hpp"
#include "diotrip/power_sum.hpp"

namespace diotrip {

// One named constant of the quantitative argument together with the formula
// that produced it.
struct LedgerEntry {
  std::string name;
  mpq_class value;
  std::string derivation;
};

// The explicit constants controlling gcd degrees and index growth for one
// sequence/shift pair. Instance-level constants (C0, C1, C8, C10) join the
// list once the data they depend on is attached.
struct ConstantLedger {
  std::vector<LedgerEntry> entries;

  bool has(const std::string& name) const;
  const LedgerEntry& at(const std::string& name) const;  // throws std::out_of_range
  mpq_class value(const std::string& name) const { return at(name).value; }
  std::string str() const;
};

// kappa, n0 and C2..C7, C9, C11, J for the sequence. Requires a dominant
// root and at least one of a second term / nonzero shift (the data behind
// C3 and C7).
ConstantLedger make_ledger(const PowerSum& seq, const Polynomial& p);

// C0/C1: right-hand-side degree constants of the fixed-x elimination,
// depending on the candidate pair (a, b) and the index gap rho = z - y.
void attach_fixed_x_constants(ConstantLedger& ledger, const PowerSum& seq, const Polynomial& p,
                              const Polynomial& a, const Polynomial& b, long rho);

// C8 from a verified subspace instance (its right-hand side) and
// C10 = C8 + 3 C2.
void attach_instance_constants(ConstantLedger& ledger, long c8);

// b*Gy - a*Gz == (b - a)*p: the elimination identity every triple satisfies.
bool fixed_x_identity(const Polynomial& a, const Polynomial& b, const Polynomial& gy,
                      const Polynomial& gz, const Polynomial& p);

struct GcdBound {
  Polynomial g;
  mpq_class bound;     // C4 + z kappa deg a1
  bool hypothesis_ok;  // growth hypotheses of the sequence
  int case_used;       // 1: y <= kappa z, 2: y > kappa z, 0 when refused
  bool pass;           // deg g <= bound, false when refused
};

// gcd of G_y - p and G_z - p against the ledger bound. Refuses (with
// hypothesis_ok = false and no bound asserted) when the sequence fails the
// growth hypotheses; throws when y >= z, y < n0, or a value at y or z is
// not a polynomial.
GcdBound gcd_bound(const PowerSum& seq, const Polynomial& p, long y, long z);

// x >= (1 - kappa) z - C5 with the ledger's constants.
bool growth_check(const ConstantLedger& ledger, long x, long z);

// The finite system feeding the subspace inequality: phi_0 = abc when a
// triple is supplied, then the truncation-head terms -f1^{3/2} a1^{s/2} t
// realized as pure radicals over D.
struct PhiSystem {
  Polynomial d;                      // radicand of the quadratic extension
  std::vector<QuadExtElement> phis;  // product element first when present
  QuadExtElement sigma;              // sum of all phis
  bool has_product_term;
  long head_count;  // phis beyond the product element
};

// Sums elements that are constant multiples of one another and drops zero
// elements and zero sums: the grouping pre-pass that restores linear
// independence of a truncation head.
std::vector<QuadExtElement> group_dependent(const std::vector<QuadExtElement>& phis);

// Parity dispatch on s = x+y+z: D is the squarefree part of f1 (s even) or
// f1 a1 (s odd); each head product of expansion terms at x, y, z with
// combined total below j becomes one pure radical, grouped. The optional
// triple (a, b, c) must satisfy the defining equations with p; it
// contributes phi_0 = abc. Requires the growth hypotheses, x < y < z with
// x >= n0, and x + C7 > 0; the scalar unit of the radicand must be a
// rational square (the realization stays inside K(X, sqrt(D))).
PhiSystem build_phi_system(const PowerSum& seq, const Polynomial& p, long x, long y, long z,
                           long j,
                           const std::optional<std::array<Polynomial, 3>>& triple = std::nullopt);

// Fiber entries over every finite bundle supporting some element (or the
// radicand) plus the infinite fiber; pairwise disjoint, deterministic order.
std::vector<ExtensionPlace> place_set_for(const std::vector<QuadExtElement>& phis);

struct SubspaceReport {
  long lhs = 0;
  long rhs = 0;
  long place_count = 0;  // |S| as a number of extension places
  long genus_value = 0;
  long n = 0;  // system size
  bool pass = false;

  std::string str() const;
};

// Exact evaluation of sum over S of (v(sigma) - min_i v(phi_i)) against
// binom(n,2)(|S| + 2g - 2) + sum of the heights of phi_{r+1..n}. Elements
// must be nonzero pure shapes over one radicand and linearly independent
// over the constants; S must consist of pairwise disjoint fibers covering
// every pole of every element and every zero of the first r.
SubspaceReport subspace_verify(const std::vector<QuadExtElement>& phis,
                               const std::vector<ExtensionPlace>& places, long r = 0);

// A constant-coefficient relation sum c_i phi_i = 0 with some c_i nonzero,
// or nullopt when the elements are linearly independent over the constants.
// Denominators are cleared and the coordinates over powers of X times
// {1, sqrt(D)} feed an exact kernel computation; a relation over the
// coefficient field exists iff one exists over the constants' closure.
std::optional<std::vector<FieldElement>> linear_dependence(
    const std::vector<QuadExtElement>& elements);

}  // namespace diotrip
