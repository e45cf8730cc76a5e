#pragma once

#include <string>
#include <vector>

#include "diotrip/places.hpp"
#include "diotrip/power_sum.hpp"

namespace diotrip {

// Exponent vector (h_1, ..., h_k) of one formal expansion term: slot 0
// belongs to the -p/f_1 factor, slot s >= 1 to the sequence term s.
struct MultiIndex {
  std::vector<long> h;

  long total() const;
  bool operator==(const MultiIndex& o) const { return h == o.h; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }
  std::string str() const;
};

// Every index with the given slot count and total < limit, graded: total
// ascending, leading slots largest first within a grade.
std::vector<MultiIndex> indices_below_total(long slots, long limit);

// Coefficient of u^h in the square-root series sqrt(1 + u_1 + ... + u_k):
// binom(1/2, m) m! / (h_1! ... h_k!) with m = total(h). Never zero.
mpq_class gamma(const MultiIndex& h);

struct SeriesTerm {
  MultiIndex index;
  RationalFunction value;
  long certified_bound;  // value vanishes at infinity to at least this order
};

// t_h at index n: gamma(h) (-p/f_1)^{h_1} (1/a_1)^{n h_1} prod over s >= 2 of
// (f_s/f_1)^{h_s} (a_s/a_1)^{n h_s}, with certified_bound = total(h)(n + C_7).
// Requires a dominant root, n >= 0 and n + C_7 > 0.
SeriesTerm expansion_term(const PowerSum& seq, const Polynomial& p, long n, const MultiIndex& h);

struct TruncatedExpansion {
  RationalFunction sum;           // S_J
  std::vector<SeriesTerm> terms;  // the graded head, L = terms.size()
};

// Sum of t_h over every h with total(h) < J; every omitted term vanishes at
// infinity to order at least J(n + C_7).
TruncatedExpansion truncated_sum(const PowerSum& seq, const Polynomial& p, long n, long J);

struct SquareCertificate {
  Valuation valuation;  // exact vanishing order of the defect at infinity
  long bound;           // J(n + C_7) - deg f_1 - n deg a_1
};

// Defect Delta = f_1 a_1^n S_J^2 - (G_n - p), verified to vanish at infinity
// to at least the bound (std::logic_error otherwise - an expansion bug).
SquareCertificate certify_square(const PowerSum& seq, const Polynomial& p, long n, long J);

}  // namespace diotrip
