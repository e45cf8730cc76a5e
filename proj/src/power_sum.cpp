#include "diotrip/power_sum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "diotrip/squarefree.hpp"

namespace diotrip {
namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

long root_degree(const PowerSum& seq, long i) {
  return seq.root(i).degree().value();
}

long coefficient_degree(const PowerSum& seq, long i) {
  return seq.coefficient(i).degree().value();
}

}  // namespace

PowerSum::PowerSum(std::vector<RationalFunction> coefficients, std::vector<Polynomial> roots) {
  if (coefficients.size() != roots.size())
    throw std::invalid_argument("power sum: coefficient and root counts differ");
  if (roots.empty()) throw std::invalid_argument("power sum: no terms");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (coefficients[i].is_zero()) throw std::invalid_argument("power sum: zero coefficient");
    if (roots[i].is_zero()) throw std::invalid_argument("power sum: zero root");
  }

  std::vector<std::size_t> index(roots.size());
  std::iota(index.begin(), index.end(), 0);
  std::stable_sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
    if (roots[a].degree() != roots[b].degree()) return roots[b].degree() < roots[a].degree();
    return roots[a].cmp(roots[b]) < 0;
  });

  for (std::size_t pos : index) {
    if (!roots_.empty() && roots_.back() == roots[pos]) {
      RationalFunction merged = coefficients_.back() + coefficients[pos];
      if (merged.is_zero()) {
        coefficients_.pop_back();
        roots_.pop_back();
      } else {
        coefficients_.back() = merged;
      }
      continue;
    }
    coefficients_.push_back(coefficients[pos]);
    roots_.push_back(roots[pos]);
  }
  if (roots_.empty()) throw std::invalid_argument("power sum: all terms cancelled");
}

const RationalFunction& PowerSum::coefficient(long i) const {
  return coefficients_.at(static_cast<std::size_t>(i));
}

const Polynomial& PowerSum::root(long i) const {
  return roots_.at(static_cast<std::size_t>(i));
}

FieldSpec PowerSum::field() const {
  FieldSpec spec = FieldSpec::rationals();
  for (const RationalFunction& f : coefficients_) spec = merge_specs(spec, f.field());
  for (const Polynomial& a : roots_) spec = merge_specs(spec, a.field());
  return spec;
}

std::string PowerSum::str(const std::string& var) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i > 0) out << " + ";
    out << "(" << coefficients_[i].str(var) << ")(" << roots_[i].str(var) << ")^n";
  }
  return out.str();
}

RationalFunction evaluate(const PowerSum& seq, long n) {
  if (n < 0) throw std::invalid_argument("power sum: negative index");
  RationalFunction value;
  for (long i = 0; i < seq.order(); ++i)
    value += seq.coefficient(i) * RationalFunction(seq.root(i).pow(static_cast<unsigned long>(n)));
  return value;
}

HypothesisReport check_hypotheses(const PowerSum& seq) {
  HypothesisReport report;
  const long k = seq.order();
  const long d1 = root_degree(seq, 0);
  report.tied_top_degree_count = 0;
  for (long i = 0; i < k; ++i)
    if (root_degree(seq, i) == d1) ++report.tied_top_degree_count;

  if (k == 1) {
    report.dominant_root = d1 > 0;
  } else if (k == 2) {
    const long d2 = root_degree(seq, 1);
    report.dominant_root = d1 > d2 && d2 > 0;
  } else {
    const long d2 = root_degree(seq, 1);
    const long d3 = root_degree(seq, 2);
    report.dominant_root = d1 > d2 && d2 > d3;
  }

  report.coefficient_not_square = !is_square_in_closure(seq.coefficient(0));
  report.coefficient_root_not_square =
      !is_square_in_closure(seq.coefficient(0) * RationalFunction(seq.root(0)));
  return report;
}

long dominance_threshold(const PowerSum& seq) {
  const long d1 = root_degree(seq, 0);
  const long e1 = coefficient_degree(seq, 0);
  long threshold = 0;
  for (long i = 1; i < seq.order(); ++i) {
    const long di = root_degree(seq, i);
    if (di >= d1) throw std::invalid_argument("power sum: no dominant root");
    threshold = std::max(threshold, floor_div(coefficient_degree(seq, i) - e1, d1 - di) + 1);
  }
  return threshold;
}

long compute_n0(const PowerSum& seq, const Polynomial& p) {
  long threshold = dominance_threshold(seq);
  if (!p.is_zero()) {
    const long d1 = root_degree(seq, 0);
    const long e1 = coefficient_degree(seq, 0);
    const long dp = p.degree().value();
    if (d1 > 0) {
      threshold = std::max(threshold, floor_div(dp - e1, d1) + 1);
    } else if (e1 <= dp) {
      throw std::invalid_argument("power sum: degrees never exceed deg p");
    }
  }
  return std::max(threshold, 0L);
}

long compute_c7(const PowerSum& seq, const Polynomial& p) {
  const long e1 = coefficient_degree(seq, 0);
  bool constrained = false;
  long c7 = 0;
  for (long i = 1; i < seq.order(); ++i) {
    const long gap = e1 - coefficient_degree(seq, i);
    c7 = constrained ? std::min(c7, gap) : gap;
    constrained = true;
  }
  if (!p.is_zero()) {
    const long gap = e1 - p.degree().value();
    c7 = constrained ? std::min(c7, gap) : gap;
    constrained = true;
  }
  if (!constrained) throw std::invalid_argument("power sum: C7 undefined for a single term and p = 0");
  return c7;
}

mpq_class kappa(const PowerSum& seq) {
  const long d1 = root_degree(seq, 0);
  mpq_class value(d1, d1 + 1);
  value.canonicalize();
  return value;
}

long degree_law(const PowerSum& seq, long n) {
  if (n < dominance_threshold(seq))
    throw std::invalid_argument("power sum: index below the dominance threshold");
  const long expected = coefficient_degree(seq, 0) + n * root_degree(seq, 0);
  if (evaluate(seq, n).degree() != expected)
    throw std::logic_error("power sum: degree law violated");
  return expected;
}

std::optional<long> membership(const PowerSum& seq, const Polynomial& h, const Polynomial& p) {
  if (!check_hypotheses(seq).pass())
    throw std::invalid_argument("power sum: membership requires the finiteness hypotheses");
  const RationalFunction target(h);
  const long n0 = compute_n0(seq, p);
  for (long n = 0; n < n0; ++n)
    if (evaluate(seq, n) == target) return n;
  if (h.is_zero()) return std::nullopt;
  const long d1 = root_degree(seq, 0);
  const long gap = h.degree().value() - coefficient_degree(seq, 0);
  if (gap % d1 != 0) return std::nullopt;
  const long n = gap / d1;
  if (n < n0) return std::nullopt;
  if (evaluate(seq, n) != target) return std::nullopt;
  return n;
}

PowerSum product(const PowerSum& a, const PowerSum& b) {
  std::vector<RationalFunction> coefficients;
  std::vector<Polynomial> roots;
  coefficients.reserve(static_cast<std::size_t>(a.order() * b.order()));
  roots.reserve(coefficients.capacity());
  for (long i = 0; i < a.order(); ++i)
    for (long j = 0; j < b.order(); ++j) {
      coefficients.push_back(a.coefficient(i) * b.coefficient(j));
      roots.push_back(a.root(i) * b.root(j));
    }
  return PowerSum(std::move(coefficients), std::move(roots));
}

}  // namespace diotrip
