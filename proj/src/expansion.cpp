#include "diotrip/expansion.hpp"

#include <sstream>
#include <stdexcept>

namespace diotrip {
namespace {

void append_compositions(long slots, long total, std::vector<long>& prefix,
                         std::vector<MultiIndex>& out) {
  if (slots == 1) {
    prefix.push_back(total);
    out.push_back(MultiIndex{prefix});
    prefix.pop_back();
    return;
  }
  for (long lead = total; lead >= 0; --lead) {
    prefix.push_back(lead);
    append_compositions(slots - 1, total - lead, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

long MultiIndex::total() const {
  long t = 0;
  for (long v : h) {
    if (v < 0) throw std::invalid_argument("multi-index: negative entry");
    t += v;
  }
  return t;
}

std::string MultiIndex::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out << ",";
    out << h[i];
  }
  out << ")";
  return out.str();
}

std::vector<MultiIndex> indices_below_total(long slots, long limit) {
  if (slots < 1) throw std::invalid_argument("multi-index: need at least one slot");
  std::vector<MultiIndex> out;
  std::vector<long> prefix;
  for (long total = 0; total < limit; ++total)
    append_compositions(slots, total, prefix, out);
  return out;
}

mpq_class gamma(const MultiIndex& h) {
  const long m = h.total();
  mpq_class value(1);
  for (long i = 0; i < m; ++i) value *= mpq_class(1 - 2 * i, 2);
  for (long entry : h.h)
    for (long i = 2; i <= entry; ++i) value /= i;
  value.canonicalize();
  return value;
}

SeriesTerm expansion_term(const PowerSum& seq, const Polynomial& p, long n, const MultiIndex& h) {
  if (static_cast<long>(h.h.size()) != seq.order())
    throw std::invalid_argument("expansion term: slot count differs from the sequence order");
  if (n < 0) throw std::invalid_argument("expansion term: negative index");
  dominance_threshold(seq);
  const long c7 = compute_c7(seq, p);
  if (n + c7 <= 0) throw std::invalid_argument("expansion term: n + C7 must be positive");

  const RationalFunction f1 = seq.coefficient(0);
  const RationalFunction a1{seq.root(0)};
  RationalFunction value{Polynomial(FieldElement(gamma(h)))};
  if (h.h[0] > 0)
    value *= (-(RationalFunction(p) / f1)).pow(h.h[0]) * a1.pow(-n * h.h[0]);
  for (long s = 1; s < seq.order(); ++s)
    if (h.h[s] > 0)
      value *= (seq.coefficient(s) / f1).pow(h.h[s]) *
               (RationalFunction(seq.root(s)) / a1).pow(n * h.h[s]);

  const long bound = h.total() * (n + c7);
  if (!value.is_zero() && value.order_at_infinity() < bound)
    throw std::logic_error("expansion term: certified bound violated");
  return SeriesTerm{h, value, bound};
}

TruncatedExpansion truncated_sum(const PowerSum& seq, const Polynomial& p, long n, long limit) {
  if (limit < 1) throw std::invalid_argument("truncated sum: J must be positive");
  TruncatedExpansion out;
  for (const MultiIndex& h : indices_below_total(seq.order(), limit)) {
    out.terms.push_back(expansion_term(seq, p, n, h));
    out.sum += out.terms.back().value;
  }
  return out;
}

SquareCertificate certify_square(const PowerSum& seq, const Polynomial& p, long n, long limit) {
  const TruncatedExpansion head = truncated_sum(seq, p, n, limit);
  const RationalFunction f1 = seq.coefficient(0);
  const RationalFunction a1n = RationalFunction(seq.root(0)).pow(n);
  const RationalFunction delta =
      f1 * a1n * head.sum * head.sum - (evaluate(seq, n) - RationalFunction(p));
  const long bound = limit * (n + compute_c7(seq, p)) - f1.degree().value() -
                     n * seq.root(0).degree().value();
  SquareCertificate cert{Valuation::infinity(), bound};
  if (!delta.is_zero()) {
    cert.valuation = Valuation::of(delta.order_at_infinity());
    if (delta.order_at_infinity() < bound)
      throw std::logic_error("square certificate: valuation bound violated");
  }
  return cert;
}

}  // namespace diotrip
