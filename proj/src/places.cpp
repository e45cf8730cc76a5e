#include "diotrip/places.hpp"

#include <algorithm>
#include <stdexcept>

namespace diotrip {

PlaceBundle PlaceBundle::finite(const Polynomial& index) {
  if (index.is_zero() || index.is_constant())
    throw std::invalid_argument("finite place bundle needs a nonconstant index");
  if (!index.is_monic())
    throw std::invalid_argument("place bundle index must be monic");
  if (!poly_gcd(index, index.derivative()).is_constant())
    throw std::invalid_argument("place bundle index must be squarefree");
  PlaceBundle b;
  b.kind_ = Kind::finite;
  b.index_ = index;
  return b;
}

const Polynomial& PlaceBundle::index() const {
  if (is_infinite()) throw std::domain_error("infinite place has no index polynomial");
  return index_;
}

int PlaceBundle::cmp(const PlaceBundle& o) const {
  if (kind_ != o.kind_) return kind_ == Kind::infinite ? 1 : -1;
  return index_.cmp(o.index_);
}

std::string PlaceBundle::str() const {
  return is_infinite() ? "infinity" : "zeros of " + index_.str();
}

long Valuation::value() const {
  if (!finite_) throw std::domain_error("valuation of the zero function has no value");
  return v_;
}

std::string Valuation::str() const { return finite_ ? std::to_string(v_) : "+inf"; }

namespace {

// Multiplicity of q in f, which must leave a cofactor coprime to q for the
// places in the bundle to agree.
long uniform_multiplicity(const Polynomial& f, const Polynomial& q) {
  unsigned e = multiplicity(f, q);
  Polynomial cofactor = f;
  for (unsigned i = 0; i < e; ++i) cofactor = *exact_divide(cofactor, q);
  if (!poly_gcd(cofactor, q).is_constant())
    throw std::invalid_argument(
        "places of the bundle " + q.str() +
        " disagree on this function; refine the bundle first");
  return static_cast<long>(e);
}

}  // namespace

Valuation valuation(const RationalFunction& f, const PlaceBundle& place) {
  if (f.is_zero()) return Valuation::infinity();
  if (place.is_infinite()) return Valuation::of(f.order_at_infinity());
  return Valuation::of(uniform_multiplicity(f.num(), place.index()) -
                       uniform_multiplicity(f.den(), place.index()));
}

std::vector<std::pair<PlaceBundle, long>> support(const RationalFunction& f) {
  std::vector<std::pair<PlaceBundle, long>> out;
  if (f.is_zero()) return out;
  for (const auto& part : squarefree_decompose(f.num()).factors)
    out.emplace_back(PlaceBundle::finite(part.factor), static_cast<long>(part.multiplicity));
  for (const auto& part : squarefree_decompose(f.den()).factors)
    out.emplace_back(PlaceBundle::finite(part.factor), -static_cast<long>(part.multiplicity));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  return out;
}

std::vector<Polynomial> gcd_free_basis(const std::vector<Polynomial>& inputs) {
  std::vector<Polynomial> basis;
  for (const Polynomial& raw : inputs) {
    if (raw.is_zero()) throw std::invalid_argument("zero polynomial in basis input");
    // work with the squarefree part; multiplicities play no role for loci
    Polynomial p(1);
    for (const auto& part : squarefree_decompose(raw).factors) p *= part.factor;
    if (p.is_constant()) continue;

    std::vector<Polynomial> next;
    for (const Polynomial& b : basis) {
      Polynomial g = poly_gcd(p, b);
      if (g.is_constant()) {
        next.push_back(b);
        continue;
      }
      Polynomial b_rest = *exact_divide(b, g);
      if (!b_rest.is_constant()) next.push_back(b_rest);
      next.push_back(g);
      p = *exact_divide(p, g);
    }
    if (!p.is_constant()) next.push_back(p);
    basis = std::move(next);
  }
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.cmp(b) < 0; });
  return basis;
}

bool sum_formula_check(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("sum formula needs a nonzero function");
  long total = f.order_at_infinity();
  for (const auto& [place, v] : support(f)) total += place.size() * v;
  return total == 0;
}

long height(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("height of the zero function");
  return std::max(f.num().degree().value(), f.den().degree().value());
}

long height_definitional(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("height of the zero function");
  long total = std::min(0L, f.order_at_infinity());
  for (const auto& [place, v] : support(f)) total += place.size() * std::min(0L, v);
  return -total;
}

void HeightPropertyReport::add(const std::string& property, bool pass,
                               const std::string& detail) {
  records.push_back({property, detail, pass});
  if (!pass && all_pass) {
    all_pass = false;
    first_violation = property + ": " + detail;
  }
}

HeightPropertyReport height_property_suite(
    const std::vector<std::pair<RationalFunction, RationalFunction>>& samples,
    const std::vector<Polynomial>& outer) {
  HeightPropertyReport report;
  std::size_t outer_at = 0;
  for (const auto& [f, g] : samples) {
    if (f.is_zero() || g.is_zero())
      throw std::invalid_argument("height suite samples must be nonzero");
    const std::string where = "f = " + f.str() + ", g = " + g.str();
    const long hf = height(f);
    const long hg = height(g);

    report.add("nonnegative", hf >= 0, where);
    report.add("inversion-invariant", height(f.inverse()) == hf, where);

    if (!(f + g).is_zero()) {
      long hsum = height(f + g);
      report.add("sum-upper", hsum <= hf + hg, where);
      report.add("sum-lower", hsum >= hf - hg, where);
    }
    if (!(f * g).is_zero()) {
      long hprod = height(f * g);
      report.add("product-upper", hprod <= hf + hg, where);
      report.add("product-lower", hprod >= hf - hg, where);
    }
    for (long n : {-3L, -2L, 0L, 2L, 5L})
      report.add("power-law", height(f.pow(n)) == std::abs(n) * hf,
                 where + ", n = " + std::to_string(n));
    report.add("vanishes-only-on-constants", (hf == 0) == f.is_constant(), where);

    if (!outer.empty()) {
      const Polynomial& a = outer[outer_at++ % outer.size()];
      if (a.is_zero()) throw std::invalid_argument("outer polynomials must be nonzero");
      if (!f.is_constant()) {
        RationalFunction composed = compose_constant_poly(a, f);
        report.add("composition-law",
                   height(composed) == a.degree().value() * hf,
                   where + ", outer degree " + a.degree().str());
      }
    }
  }
  return report;
}

}  // namespace diotrip
