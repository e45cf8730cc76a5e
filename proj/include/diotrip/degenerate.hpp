#pragma once

#include <string>
#include <vector>

#include "diotrip/power_sum.hpp"

namespace diotrip {

// Q with Q_n = P_{n-r} when n = r (mod 3) and Q_n = 0 otherwise, still in
// Binet form over Q(zeta3): each term s sigma^n of P contributes the three
// terms (s sigma^{-r} zeta3^{-jr} / 3) (zeta3^j sigma)^n, j = 0, 1, 2, the
// sigma^{-r} division landing in the coefficient rational functions.
PowerSum phase_filter(const PowerSum& p, int r);

// Per-constraint verdicts for the three single-term building blocks.
struct ConstraintReport {
  bool inputs_single_term = false;
  bool coefficients_polynomial = false;
  bool roots_squares = false;
  bool roots_nonconstant = false;
  bool roots_pairwise_distinct = false;
  bool roots_pairwise_coprime = false;
  bool coefficients_nonconstant = false;
  bool coefficients_squarefree = false;
  bool coefficients_pairwise_distinct = false;
  bool coefficients_pairwise_coprime = false;
  bool no_shared_zeros = false;  // between any root and any coefficient
  bool no_dominant_root = false;
  bool square_condition_entangled = false;  // f_1 square iff f_1 a_1 square

  bool pass() const;
  std::string str() const;
};

// The interleaved sequence G with G_{3u} = A_{3u}B_{3u} + 1,
// G_{3u+1} = A_{3u}C_{3u} + 1, G_{3u+2} = B_{3u}C_{3u} + 1, assembled as
// G = phase_filter(AB, 0) + phase_filter(AC, 1) + phase_filter(BC, 2) + 1
// term by term in Binet form.
struct CounterexampleSpec {
  PowerSum a, b, c;
  PowerSum d, e, f;
  PowerSum g;
  ConstraintReport report;
};

// Assembles G from three single-term sequences and validates every
// construction constraint; violations are flagged in the report, never
// thrown.
CounterexampleSpec build_counterexample(const PowerSum& a, const PowerSum& b, const PowerSum& c);

// A_n = (X+1)(X^2)^n, B_n = (X+2)((X+5)^2)^n, C_n = (X+3)((X+7)^2)^n.
CounterexampleSpec canonical_counterexample();

struct PlantedTriple {
  Polynomial a, b, c;
  long x, y, z;
};

// One triple (A_{3u}, B_{3u}, C_{3u}) at indices (3u, 3u+1, 3u+2) for every
// u with 3u+2 <= bound, each verified against G by exact evaluation.
// Requires a passing constraint report.
std::vector<PlantedTriple> planted_triples(const CounterexampleSpec& spec, long bound);

}  // namespace diotrip
