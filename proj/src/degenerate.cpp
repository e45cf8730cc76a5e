#include "diotrip/degenerate.hpp"

#include <sstream>
#include <stdexcept>

#include "diotrip/squarefree.hpp"

namespace diotrip {
namespace {

bool pairwise_distinct(const std::vector<Polynomial>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

bool pairwise_coprime(const std::vector<Polynomial>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!poly_gcd(v[i], v[j]).is_constant()) return false;
  return true;
}

bool squarefree(const Polynomial& f) {
  for (const SquarefreeFactor& part : squarefree_decompose(f).factors)
    if (part.multiplicity > 1) return false;
  return true;
}

}  // namespace

PowerSum phase_filter(const PowerSum& p, int r) {
  if (r < 0 || r > 2) throw std::invalid_argument("phase filter: residue must be 0, 1 or 2");
  const FieldElement zeta(FieldSpec::cyclotomic3(), 0, 1);
  const FieldElement zpow[3] = {FieldElement(1), zeta, zeta * zeta};
  const FieldElement third{mpq_class(1, 3)};

  std::vector<RationalFunction> coefficients;
  std::vector<Polynomial> roots;
  for (long i = 0; i < p.order(); ++i) {
    const RationalFunction shift(Polynomial(1), p.root(i).pow(static_cast<unsigned long>(r)));
    for (int j = 0; j < 3; ++j) {
      const FieldElement scale = zpow[(3 - j * r % 3) % 3] * third;
      coefficients.push_back(p.coefficient(i) * shift * RationalFunction(Polynomial(scale)));
      roots.push_back(p.root(i) * zpow[j]);
    }
  }
  return PowerSum(std::move(coefficients), std::move(roots));
}

bool ConstraintReport::pass() const {
  return inputs_single_term && coefficients_polynomial && roots_squares && roots_nonconstant &&
         roots_pairwise_distinct && roots_pairwise_coprime && coefficients_nonconstant &&
         coefficients_squarefree && coefficients_pairwise_distinct &&
         coefficients_pairwise_coprime && no_shared_zeros && no_dominant_root &&
         square_condition_entangled;
}

std::string ConstraintReport::str() const {
  struct Entry {
    const char* name;
    bool ok;
  };
  const Entry entries[] = {
      {"inputs single-term", inputs_single_term},
      {"coefficients polynomial", coefficients_polynomial},
      {"roots squares", roots_squares},
      {"roots nonconstant", roots_nonconstant},
      {"roots pairwise distinct", roots_pairwise_distinct},
      {"roots pairwise coprime", roots_pairwise_coprime},
      {"coefficients nonconstant", coefficients_nonconstant},
      {"coefficients squarefree", coefficients_squarefree},
      {"coefficients pairwise distinct", coefficients_pairwise_distinct},
      {"coefficients pairwise coprime", coefficients_pairwise_coprime},
      {"no shared zeros", no_shared_zeros},
      {"no dominant root", no_dominant_root},
      {"square condition entangled", square_condition_entangled},
  };
  std::ostringstream out;
  for (const Entry& e : entries) out << (e.ok ? "pass " : "FAIL ") << e.name << "\n";
  return out.str();
}

CounterexampleSpec build_counterexample(const PowerSum& a, const PowerSum& b, const PowerSum& c) {
  ConstraintReport report;
  const PowerSum* inputs[3] = {&a, &b, &c};
  report.inputs_single_term = a.order() == 1 && b.order() == 1 && c.order() == 1;

  std::vector<Polynomial> all_roots;
  std::vector<RationalFunction> raw_coefficients;
  for (const PowerSum* s : inputs)
    for (long i = 0; i < s->order(); ++i) {
      all_roots.push_back(s->root(i));
      raw_coefficients.push_back(s->coefficient(i));
    }

  report.coefficients_polynomial = true;
  for (const RationalFunction& f : raw_coefficients)
    if (!f.is_polynomial()) report.coefficients_polynomial = false;

  report.roots_squares = true;
  report.roots_nonconstant = true;
  for (const Polynomial& rt : all_roots) {
    if (!is_square_in_closure_poly(rt)) report.roots_squares = false;
    if (rt.is_constant()) report.roots_nonconstant = false;
  }
  report.roots_pairwise_distinct = pairwise_distinct(all_roots);
  report.roots_pairwise_coprime = pairwise_coprime(all_roots);

  if (report.coefficients_polynomial) {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(raw_coefficients.size());
    for (const RationalFunction& f : raw_coefficients) coeffs.push_back(f.as_polynomial());
    report.coefficients_nonconstant = true;
    report.coefficients_squarefree = true;
    for (const Polynomial& f : coeffs) {
      if (f.is_constant()) report.coefficients_nonconstant = false;
      if (!squarefree(f)) report.coefficients_squarefree = false;
    }
    report.coefficients_pairwise_distinct = pairwise_distinct(coeffs);
    report.coefficients_pairwise_coprime = pairwise_coprime(coeffs);
    report.no_shared_zeros = true;
    for (const Polynomial& rt : all_roots)
      for (const Polynomial& f : coeffs)
        if (!poly_gcd(rt, f).is_constant()) report.no_shared_zeros = false;
  }

  PowerSum d = phase_filter(product(a, b), 0);
  PowerSum e = phase_filter(product(a, c), 1);
  PowerSum f = phase_filter(product(b, c), 2);

  std::vector<RationalFunction> coefficients;
  std::vector<Polynomial> roots;
  for (const PowerSum* s : {&d, &e, &f})
    for (long i = 0; i < s->order(); ++i) {
      coefficients.push_back(s->coefficient(i));
      roots.push_back(s->root(i));
    }
  coefficients.push_back(1);
  roots.push_back(Polynomial(1));
  PowerSum g(std::move(coefficients), std::move(roots));

  HypothesisReport hyp = check_hypotheses(g);
  report.no_dominant_root = hyp.tied_top_degree_count >= 2;
  report.square_condition_entangled =
      hyp.coefficient_not_square == hyp.coefficient_root_not_square;

  return CounterexampleSpec{a,            b,            c,            std::move(d),
                            std::move(e), std::move(f), std::move(g), report};
}

CounterexampleSpec canonical_counterexample() {
  const Polynomial x = Polynomial::variable();
  const auto shifted_square = [&x](long s) {
    const Polynomial lin = x + Polynomial(s);
    return lin * lin;
  };
  PowerSum a({RationalFunction(x + Polynomial(1))}, {x * x});
  PowerSum b({RationalFunction(x + Polynomial(2))}, {shifted_square(5)});
  PowerSum c({RationalFunction(x + Polynomial(3))}, {shifted_square(7)});
  return build_counterexample(a, b, c);
}

std::vector<PlantedTriple> planted_triples(const CounterexampleSpec& spec, long bound) {
  if (!spec.report.pass())
    throw std::invalid_argument("planted triples need a validated counterexample");
  std::vector<PlantedTriple> out;
  const RationalFunction one(1);
  for (long u = 0; 3 * u + 2 <= bound; ++u) {
    const long n = 3 * u;
    Polynomial pa = evaluate(spec.a, n).as_polynomial();
    Polynomial pb = evaluate(spec.b, n).as_polynomial();
    Polynomial pc = evaluate(spec.c, n).as_polynomial();
    if (evaluate(spec.g, n) != RationalFunction(pa * pb) + one ||
        evaluate(spec.g, n + 1) != RationalFunction(pa * pc) + one ||
        evaluate(spec.g, n + 2) != RationalFunction(pb * pc) + one)
      throw std::logic_error("planted triple fails its defining equations");
    out.push_back(PlantedTriple{pa, pb, pc, n, n + 1, n + 2});
  }
  return out;
}

}  // namespace diotrip
