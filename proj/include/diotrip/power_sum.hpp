#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diotrip/rational_function.hpp"

namespace diotrip {

// Binet-form sequence G_n = f_1 a_1^n + ... + f_k a_k^n with nonzero
// rational-function coefficients f_i and nonzero polynomial roots a_i.
// Terms are kept sorted by root degree descending (root order on ties), so
// index 0 is the candidate dominant term; equal roots are merged on
// construction and terms whose merged coefficient vanishes are pruned.
class PowerSum {
 public:
  // Throws std::invalid_argument on length mismatch, an empty term list
  // (also after cancellation), a zero coefficient or a zero root.
  PowerSum(std::vector<RationalFunction> coefficients, std::vector<Polynomial> roots);

  long order() const { return static_cast<long>(roots_.size()); }
  const RationalFunction& coefficient(long i) const;
  const Polynomial& root(long i) const;

  // Common field of every coefficient and root.
  FieldSpec field() const;

  bool operator==(const PowerSum& o) const {
    return coefficients_ == o.coefficients_ && roots_ == o.roots_;
  }
  bool operator!=(const PowerSum& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<RationalFunction> coefficients_;
  std::vector<Polynomial> roots_;
};

// Exact Binet sum at index n >= 0; query is_polynomial() on the result for
// indices where denominators fail to clear.
RationalFunction evaluate(const PowerSum& seq, long n);

struct HypothesisReport {
  bool dominant_root = false;
  long tied_top_degree_count = 0;  // roots sharing the top degree
  bool coefficient_not_square = false;       // f_1 not a square in C(X)
  bool coefficient_root_not_square = false;  // f_1 a_1 not a square in C(X)

  bool pass() const {
    return dominant_root && coefficient_not_square && coefficient_root_not_square;
  }
};

// Dominant-root arm (order 2: deg a_1 > deg a_2 > 0; order >= 3: the chain
// deg a_1 > deg a_2 > deg a_3 >= ...) plus the two square conditions.
// Reports, never throws.
HypothesisReport check_hypotheses(const PowerSum& seq);

// Smallest n from which the leading term strictly out-degrees every other
// term. Throws std::invalid_argument when no such n exists.
long dominance_threshold(const PowerSum& seq);

// Smallest n with deg f_1 + n deg a_1 strictly above deg p and above every
// deg f_i + n deg a_i (i >= 2). Throws when the leading root is not dominant.
long compute_n0(const PowerSum& seq, const Polynomial& p);

// min over {deg f_1 - deg f_i : i >= 2} and {deg f_1 - deg p} (the latter
// dropped for p = 0). Throws when no term constrains the minimum.
long compute_c7(const PowerSum& seq, const Polynomial& p);

// deg a_1 / (deg a_1 + 1) as an exact rational.
mpq_class kappa(const PowerSum& seq);

// deg f_1 + n deg a_1 for n at or beyond the dominance threshold, checked
// against the exact evaluation (std::logic_error on mismatch).
long degree_law(const PowerSum& seq, long n);

// Index n with evaluate(seq, n) == h, if any: indices below the threshold
// compute_n0(seq, p) by direct enumeration, the rest by inverting the degree
// law. Requires check_hypotheses(seq).pass().
std::optional<long> membership(const PowerSum& seq, const Polynomial& h, const Polynomial& p);

// Binet tensor: coefficients f_i g_j, roots a_i b_j, like roots merged.
PowerSum product(const PowerSum& a, const PowerSum& b);

}  // namespace diotrip
