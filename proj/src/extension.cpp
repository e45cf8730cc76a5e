#include "diotrip/extension.hpp"

#include <stdexcept>

namespace diotrip {

namespace {

void check_radicand(const Polynomial& d) {
  if (d.is_zero() || d.is_constant())
    throw std::invalid_argument("radicand must be nonconstant");
  if (!d.is_monic()) throw std::invalid_argument("radicand must be monic");
  if (!poly_gcd(d, d.derivative()).is_constant())
    throw std::invalid_argument("radicand must be squarefree");
}

}  // namespace

long genus(const Polynomial& d) {
  check_radicand(d);
  return (d.degree().value() - 1) / 2;
}

QuadExtElement::QuadExtElement(const RationalFunction& u_part,
                               const RationalFunction& v_part, const Polynomial& radicand)
    : u(u_part), v(v_part), d(radicand) {
  check_radicand(d);
}

QuadExtElement QuadExtElement::operator-() const { return QuadExtElement(-u, -v, d); }

QuadExtElement QuadExtElement::operator+(const QuadExtElement& o) const {
  if (d != o.d) throw std::invalid_argument("mixing extensions by different radicands");
  return QuadExtElement(u + o.u, v + o.v, d);
}

QuadExtElement QuadExtElement::operator-(const QuadExtElement& o) const {
  return *this + (-o);
}

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
  if (d != o.d) throw std::invalid_argument("mixing extensions by different radicands");
  RationalFunction dd(d);
  return QuadExtElement(u * o.u + v * o.v * dd, u * o.v + v * o.u, d);
}

std::string QuadExtElement::str() const {
  std::string root = "sqrt(" + d.str() + ")";
  if (v.is_zero()) return u.str();
  std::string radical = "(" + v.str() + ")*" + root;
  if (u.is_zero()) return radical;
  return "(" + u.str() + ") + " + radical;
}

std::vector<ExtensionPlace> extension_places(const Polynomial& d, const PlaceBundle& below) {
  check_radicand(d);
  long dv = below.is_infinite() ? -d.degree().value()
                                : valuation(RationalFunction(d), below).value();
  const bool odd = ((dv % 2) + 2) % 2 == 1;
  ExtensionPlace w{below, odd ? 2 : 1, odd ? 1 : 2};
  return {w};
}

namespace {

// Valuation of D itself at the base bundle (finite: multiplicity 0 or 1 for
// squarefree D; infinite: -deg D).
long radicand_order(const Polynomial& d, const PlaceBundle& below) {
  if (below.is_infinite()) return -d.degree().value();
  return valuation(RationalFunction(d), below).value();
}

}  // namespace

Valuation ext_valuation(const QuadExtElement& e, const ExtensionPlace& w) {
  if (e.is_zero()) return Valuation::infinity();
  const long dv = radicand_order(e.d, w.below);
  const bool odd = ((dv % 2) + 2) % 2 == 1;
  if (odd != w.ramified())
    throw std::invalid_argument("extension place does not match the element's radicand");

  std::optional<long> from_u, from_v;
  if (!e.u.is_zero()) {
    long base = valuation(e.u, w.below).value();
    from_u = w.ramified() ? 2 * base : base;
  }
  if (!e.v.is_zero()) {
    long base = valuation(e.v, w.below).value();
    from_v = w.ramified() ? 2 * base + dv : base + dv / 2;
  }
  if (from_u && from_v) return Valuation::of(std::min(*from_u, *from_v));
  return Valuation::of(from_u ? *from_u : *from_v);
}

long ext_height(const QuadExtElement& e) {
  if (e.is_zero()) throw std::domain_error("height of the zero element");
  if (!e.in_base_field() && !e.is_pure_radical())
    throw std::invalid_argument(
        "height is implemented for pure shapes u or v*sqrt(D) only");
  const RationalFunction& r = e.in_base_field() ? e.u : e.v;
  const int eps = e.in_base_field() ? 0 : 1;

  // one generator per squarefree layer so every resulting bundle carries a
  // single multiplicity of r
  std::vector<Polynomial> gens{e.d};
  for (const Polynomial* side : {&r.num(), &r.den()})
    if (!side->is_constant())
      for (const auto& part : squarefree_decompose(*side).factors)
        gens.push_back(part.factor);
  long total = 0;
  for (const Polynomial& q : gcd_free_basis(gens)) {
    PlaceBundle bundle = PlaceBundle::finite(q);
    long m = valuation(r, bundle).value();
    long dv = radicand_order(e.d, bundle);
    long order = (dv % 2 != 0) ? 2 * m + eps * dv : m + eps * dv / 2;
    int residues = (dv % 2 != 0) ? 1 : 2;
    total += bundle.size() * residues * std::min(0L, order);
  }
  long m_inf = r.order_at_infinity();
  long dv_inf = -e.d.degree().value();
  bool odd_inf = ((dv_inf % 2) + 2) % 2 == 1;
  long order_inf = odd_inf ? 2 * m_inf + eps * dv_inf : m_inf + eps * dv_inf / 2;
  total += (odd_inf ? 1 : 2) * std::min(0L, order_inf);
  return -total;
}

}  // namespace diotrip
