#include "diotrip/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace diotrip {

namespace {

std::string q_str(const mpq_class& v) { return v.get_str(); }

void put(ConstantLedger& ledger, const std::string& name, const mpq_class& value,
         const std::string& derivation) {
  for (LedgerEntry& e : ledger.entries)
    if (e.name == name) {
      e.value = value;
      e.derivation = derivation;
      return;
    }
  ledger.entries.push_back({name, value, derivation});
}

// max over deg f_i (i >= 2) and deg p: the degree data of the non-dominant
// part. Throws when neither exists.
long non_dominant_degree(const PowerSum& seq, const Polynomial& p) {
  std::optional<long> best;
  for (long i = 1; i < seq.order(); ++i) {
    long e = seq.coefficient(i).degree().value();
    if (!best || e > *best) best = e;
  }
  if (!p.is_zero()) {
    long e = p.degree().value();
    if (!best || e > *best) best = e;
  }
  if (!best)
    throw std::invalid_argument("no non-dominant data: single term and zero shift");
  return *best;
}

}  // namespace

bool ConstantLedger::has(const std::string& name) const {
  for (const LedgerEntry& e : entries)
    if (e.name == name) return true;
  return false;
}

const LedgerEntry& ConstantLedger::at(const std::string& name) const {
  for (const LedgerEntry& e : entries)
    if (e.name == name) return e;
  throw std::out_of_range("no ledger entry named " + name);
}

std::string ConstantLedger::str() const {
  std::string out;
  for (const LedgerEntry& e : entries)
    out += e.name + " = " + q_str(e.value) + "  [" + e.derivation + "]\n";
  return out;
}

ConstantLedger make_ledger(const PowerSum& seq, const Polynomial& p) {
  const long d1 = seq.root(0).degree().value();
  if (d1 < 1) throw std::invalid_argument("dominant root must be nonconstant");
  const long n0 = compute_n0(seq, p);
  const long c7 = compute_c7(seq, p);
  const mpq_class kap = kappa(seq);
  const long c2 = seq.coefficient(0).degree().value();
  const long c3 = non_dominant_degree(seq, p);
  const long c4 = std::max(c2, c3);
  mpq_class c5(c4, d1);
  c5.canonicalize();
  const mpq_class c6 = (1 - kap) / 2;
  const mpq_class c9 = 2;
  const mpq_class c11 = 3;
  const mpq_class j = 1 + (c11 / c6) * d1;

  ConstantLedger ledger;
  put(ledger, "kappa", kap, "deg a1 / (1 + deg a1)");
  put(ledger, "n0", n0, "least index where the dominant term outweighs every other and the shift");
  put(ledger, "C2", c2, "deg f1");
  put(ledger, "C3", c3, "max over deg f_i (i >= 2) and deg p");
  put(ledger, "C4", c4, "max(C2, C3)");
  put(ledger, "C5", c5, "C4 / deg a1");
  put(ledger, "C6", c6, "(1 - kappa)/2; any fixed value in (0, 1 - kappa) works");
  put(ledger, "C7", c7, "min over the non-dominant data of deg f1 - deg f_i and deg f1 - deg p");
  put(ledger, "C9", c9, "height over the quadratic extension doubles the degree");
  put(ledger, "C11", c11, "3 C9 / 2, from x + y + z <= 3z");
  put(ledger, "J", j, "1 + (C11 / C6) deg a1; any integer at least this truncates far enough");
  return ledger;
}

void attach_fixed_x_constants(ConstantLedger& ledger, const PowerSum& seq, const Polynomial& p,
                              const Polynomial& a, const Polynomial& b, long rho) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero candidate polynomial");
  if (rho < 1) throw std::invalid_argument("index gap must be positive");
  const long e1 = seq.coefficient(0).degree().value();
  const long cap = std::max(a.degree().value(), b.degree().value());
  const long c0 = cap + non_dominant_degree(seq, p) - e1;
  const long d2 = seq.order() > 1 ? seq.root(1).degree().value() : 0;
  put(ledger, "C0", c0,
      "max(deg a, deg b) + C3 - C2: the eliminated right-hand side net of the z-factor");
  put(ledger, "C1", c0 + rho * d2, "C0 + rho deg a2 once the index gap rho = z - y is fixed");
}

void attach_instance_constants(ConstantLedger& ledger, long c8) {
  put(ledger, "C8", c8, "right-hand side of the subspace inequality for the instance's system");
  put(ledger, "C10", c8 + 3 * ledger.value("C2"),
      "C8 + 3 C2, absorbing the coefficient part of the product's degree");
}

bool fixed_x_identity(const Polynomial& a, const Polynomial& b, const Polynomial& gy,
                      const Polynomial& gz, const Polynomial& p) {
  return b * gy - a * gz == (b - a) * p;
}

GcdBound gcd_bound(const PowerSum& seq, const Polynomial& p, long y, long z) {
  if (!check_hypotheses(seq).pass())
    return GcdBound{Polynomial(), mpq_class(0), false, 0, false};
  if (y >= z) throw std::invalid_argument("indices must satisfy y < z");
  if (y < compute_n0(seq, p))
    throw std::invalid_argument("indices must be at least the settling index");
  const RationalFunction shift(p);
  const RationalFunction gy = evaluate(seq, y) - shift;
  const RationalFunction gz = evaluate(seq, z) - shift;
  if (!gy.is_polynomial() || !gz.is_polynomial())
    throw std::invalid_argument("sequence value is not a polynomial at a requested index");

  const ConstantLedger ledger = make_ledger(seq, p);
  const long d1 = seq.root(0).degree().value();
  const mpq_class kap = ledger.value("kappa");
  GcdBound out{poly_gcd(gy.as_polynomial(), gz.as_polynomial()),
               ledger.value("C4") + z * kap * d1, true, 0, false};
  out.case_used = mpq_class(y) <= kap * z ? 1 : 2;
  out.pass = mpq_class(out.g.degree().value()) <= out.bound;
  return out;
}

bool growth_check(const ConstantLedger& ledger, long x, long z) {
  const mpq_class needed = (1 - ledger.value("kappa")) * z - ledger.value("C5");
  return mpq_class(x) >= needed;
}

namespace {

bool proportional(const QuadExtElement& e, const QuadExtElement& f) {
  const RationalFunction& anchor = f.u.is_zero() ? f.v : f.u;
  const RationalFunction& mirror = f.u.is_zero() ? e.v : e.u;
  if (mirror.is_zero()) return false;
  const RationalFunction c = mirror / anchor;
  if (!c.is_constant()) return false;
  return e.u == c * f.u && e.v == c * f.v;
}

}  // namespace

std::vector<QuadExtElement> group_dependent(const std::vector<QuadExtElement>& phis) {
  std::vector<QuadExtElement> out;
  std::vector<bool> used(phis.size(), false);
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (used[i] || phis[i].is_zero()) continue;
    QuadExtElement acc = phis[i];
    for (std::size_t j = i + 1; j < phis.size(); ++j) {
      if (used[j] || phis[j].is_zero()) continue;
      if (proportional(phis[i], phis[j])) {
        acc = acc + phis[j];
        used[j] = true;
      }
    }
    if (!acc.is_zero()) out.push_back(acc);
  }
  return out;
}

PhiSystem build_phi_system(const PowerSum& seq, const Polynomial& p, long x, long y, long z,
                           long j, const std::optional<std::array<Polynomial, 3>>& triple) {
  if (!(x < y && y < z)) throw std::invalid_argument("indices must satisfy x < y < z");
  if (j < 1) throw std::invalid_argument("truncation order must be positive");
  if (!check_hypotheses(seq).pass())
    throw std::invalid_argument("sequence fails the growth hypotheses");
  if (x < compute_n0(seq, p))
    throw std::invalid_argument("indices must be at least the settling index");
  const long c7 = compute_c7(seq, p);
  if (x + c7 < 1)
    throw std::invalid_argument("x + C7 must be positive for the head/tail split");

  const long s = x + y + z;
  const RationalFunction f1 = seq.coefficient(0);
  const RationalFunction a1(seq.root(0));
  const RadicalDecomposition rd = radical_decompose(s % 2 == 0 ? f1 : f1 * a1);
  if (!rd.unit.is_rational())
    throw std::invalid_argument("radicand unit lies outside the rationals");
  mpq_class unit_root;
  if (!rational_is_square(rd.unit.as_rational(), &unit_root))
    throw std::invalid_argument(
        "radicand unit is not a rational square; the realization would leave K(X, sqrt(D))");
  const Polynomial d = rd.radicand;
  const RationalFunction pref =
      rd.cofactor * RationalFunction(Polynomial(FieldElement(unit_root))) * f1 * a1.pow(s / 2);

  std::vector<QuadExtElement> phis;
  bool has_product = false;
  if (triple) {
    const Polynomial& a = (*triple)[0];
    const Polynomial& b = (*triple)[1];
    const Polynomial& c = (*triple)[2];
    const RationalFunction shift(p);
    if (RationalFunction(a * b) + shift != evaluate(seq, x) ||
        RationalFunction(a * c) + shift != evaluate(seq, y) ||
        RationalFunction(b * c) + shift != evaluate(seq, z))
      throw std::invalid_argument("supplied triple does not satisfy the defining equations");
    phis.push_back(QuadExtElement::base(RationalFunction(a * b * c), d));
    has_product = true;
  }

  std::vector<QuadExtElement> head;
  for (const MultiIndex& hx : indices_below_total(seq.order(), j)) {
    const RationalFunction tx = expansion_term(seq, p, x, hx).value;
    if (tx.is_zero()) continue;
    for (const MultiIndex& hy : indices_below_total(seq.order(), j - hx.total())) {
      const RationalFunction ty = expansion_term(seq, p, y, hy).value;
      if (ty.is_zero()) continue;
      for (const MultiIndex& hz :
           indices_below_total(seq.order(), j - hx.total() - hy.total())) {
        const RationalFunction tz = expansion_term(seq, p, z, hz).value;
        if (tz.is_zero()) continue;
        head.push_back(QuadExtElement::pure(-(pref * tx * ty * tz), d));
      }
    }
  }
  const std::vector<QuadExtElement> grouped = group_dependent(head);
  if (phis.empty() && grouped.empty())
    throw std::logic_error("truncation head vanished entirely");
  phis.insert(phis.end(), grouped.begin(), grouped.end());

  QuadExtElement sigma = phis.front();
  for (std::size_t i = 1; i < phis.size(); ++i) sigma = sigma + phis[i];
  return PhiSystem{d, phis, sigma, has_product,
                   static_cast<long>(phis.size()) - (has_product ? 1 : 0)};
}

namespace {

void collect_layers(const RationalFunction& f, std::vector<Polynomial>& gens) {
  for (const Polynomial* side : {&f.num(), &f.den()})
    if (!side->is_constant())
      for (const SquarefreeFactor& part : squarefree_decompose(*side).factors)
        gens.push_back(part.factor);
}

// Degree-weighted sum of the orders of f over the vanishing locus of a
// squarefree monic q; exact without any uniformity requirement.
long order_mass(const RationalFunction& f, const Polynomial& q) {
  if (f.is_zero()) throw std::domain_error("order mass of the zero function");
  long total = 0;
  int sign = 1;
  for (const Polynomial* side : {&f.num(), &f.den()}) {
    if (!side->is_constant())
      for (const SquarefreeFactor& part : squarefree_decompose(*side).factors)
        total += sign * static_cast<long>(part.multiplicity) *
                 poly_gcd(part.factor, q).degree().value();
    sign = -sign;
  }
  return total;
}

// Split the locus of a squarefree monic index into sub-bundles on which
// both parts of sigma have uniform order.
std::vector<Polynomial> refine_index(const Polynomial& index, const QuadExtElement& sigma) {
  std::vector<Polynomial> gens{index};
  if (!sigma.u.is_zero()) collect_layers(sigma.u, gens);
  if (!sigma.v.is_zero()) collect_layers(sigma.v, gens);
  std::vector<Polynomial> parts;
  for (const Polynomial& q : gcd_free_basis(gens))
    if (poly_gcd(q, index) == q) parts.push_back(q);
  return parts;
}

long base_order(const RationalFunction& f, const PlaceBundle& bundle) {
  return bundle.is_infinite() ? f.order_at_infinity() : valuation(f, bundle).value();
}

}  // namespace

std::vector<ExtensionPlace> place_set_for(const std::vector<QuadExtElement>& phis) {
  if (phis.empty()) throw std::invalid_argument("empty system");
  const Polynomial d = phis.front().d;
  std::vector<Polynomial> gens{d};
  for (const QuadExtElement& e : phis) {
    if (e.d != d) throw std::invalid_argument("mixed radicands in one system");
    if (!e.u.is_zero()) collect_layers(e.u, gens);
    if (!e.v.is_zero()) collect_layers(e.v, gens);
  }
  std::vector<ExtensionPlace> out;
  for (const Polynomial& q : gcd_free_basis(gens))
    out.push_back(extension_places(d, PlaceBundle::finite(q)).front());
  out.push_back(extension_places(d, PlaceBundle::at_infinity()).front());
  return out;
}

std::string SubspaceReport::str() const {
  return "lhs = " + std::to_string(lhs) + ", rhs = " + std::to_string(rhs) + " (|S| = " +
         std::to_string(place_count) + ", genus " + std::to_string(genus_value) + ", n = " +
         std::to_string(n) + "): " + (pass ? "holds" : "VIOLATED");
}

SubspaceReport subspace_verify(const std::vector<QuadExtElement>& phis,
                               const std::vector<ExtensionPlace>& places, long r) {
  const long n = static_cast<long>(phis.size());
  if (n == 0) throw std::invalid_argument("empty system");
  if (r < 0 || r > n) throw std::invalid_argument("zero-tracked prefix out of range");
  const Polynomial d = phis.front().d;
  for (const QuadExtElement& e : phis) {
    if (e.d != d) throw std::invalid_argument("mixed radicands in one system");
    if (e.is_zero()) throw std::invalid_argument("zero element in the system");
    if (!e.in_base_field() && !e.is_pure_radical())
      throw std::invalid_argument("system elements must be pure shapes u or v sqrt(D)");
  }
  if (linear_dependence(phis))
    throw std::invalid_argument("system is linearly dependent over the constants");

  for (std::size_t i = 0; i < places.size(); ++i)
    for (std::size_t k = i + 1; k < places.size(); ++k)
      if (places[i].below.cmp(places[k].below) == 0)
        throw std::invalid_argument("duplicate fiber in the place set");

  QuadExtElement sigma = phis.front();
  for (long i = 1; i < n; ++i) sigma = sigma + phis[i];
  if (sigma.is_zero()) throw std::logic_error("sum of an independent system vanished");

  std::vector<long> heights(n);
  for (long i = 0; i < n; ++i) heights[i] = ext_height(phis[i]);

  long lhs = 0;
  long place_count = 0;
  std::vector<long> pole_mass(n, 0), zero_mass(n, 0);
  for (const ExtensionPlace& w : places) {
    place_count += w.size();
    long minv = 0;
    for (long i = 0; i < n; ++i) {
      const long vi = ext_valuation(phis[i], w).value();
      if (i == 0 || vi < minv) minv = vi;
      pole_mass[i] += w.size() * std::max(0L, -vi);
      zero_mass[i] += w.size() * std::max(0L, vi);
    }
    const long m = w.below.size();
    if (!w.ramified()) {
      const RationalFunction norm = sigma.norm_to_base();
      const long pair_total = w.below.is_infinite() ? norm.order_at_infinity()
                                                    : order_mass(norm, w.below.index());
      lhs += pair_total - 2 * m * minv;
    } else if (w.below.is_infinite()) {
      lhs += ext_valuation(sigma, w).value() - minv;
    } else {
      const long dv = base_order(RationalFunction(d), w.below);
      long bundle_sum = 0;
      for (const Polynomial& q : refine_index(w.below.index(), sigma)) {
        const PlaceBundle part = PlaceBundle::finite(q);
        std::optional<long> sv;
        if (!sigma.u.is_zero()) sv = 2 * base_order(sigma.u, part);
        if (!sigma.v.is_zero()) {
          const long from_v = 2 * base_order(sigma.v, part) + dv;
          if (!sv || from_v < *sv) sv = from_v;
        }
        bundle_sum += q.degree().value() * *sv;
      }
      lhs += bundle_sum - m * minv;
    }
  }

  for (long i = 0; i < n; ++i) {
    if (pole_mass[i] != heights[i])
      throw std::invalid_argument("place set does not cover the poles of element " +
                                  std::to_string(i));
    if (i < r && zero_mass[i] != heights[i])
      throw std::invalid_argument("place set does not cover the zeros of element " +
                                  std::to_string(i));
  }

  SubspaceReport report;
  report.n = n;
  report.place_count = place_count;
  report.genus_value = genus(d);
  report.lhs = lhs;
  long height_tail = 0;
  for (long i = r; i < n; ++i) height_tail += heights[i];
  report.rhs = n * (n - 1) / 2 * (place_count + 2 * report.genus_value - 2) + height_tail;
  report.pass = report.lhs <= report.rhs;
  return report;
}

namespace {

// One nonzero solution of the homogeneous system given by rows (each row:
// one linear equation over the variables), or nullopt when only the trivial
// solution exists.
std::optional<std::vector<FieldElement>> kernel_element(
    std::vector<std::vector<FieldElement>> rows, long nvars) {
  std::vector<long> pivot_row(nvars, -1);
  long rank = 0;
  for (long col = 0; col < nvars && rank < static_cast<long>(rows.size()); ++col) {
    long piv = -1;
    for (long i = rank; i < static_cast<long>(rows.size()); ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const FieldElement inv = rows[rank][col].inverse();
    for (long c = col; c < nvars; ++c) rows[rank][c] *= inv;
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      const FieldElement factor = rows[i][col];
      for (long c = col; c < nvars; ++c) rows[i][c] -= factor * rows[rank][c];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  long free_var = -1;
  for (long col = 0; col < nvars; ++col)
    if (pivot_row[col] < 0) {
      free_var = col;
      break;
    }
  if (free_var < 0) return std::nullopt;

  std::vector<FieldElement> c(nvars, FieldElement(0));
  c[free_var] = FieldElement(1);
  for (long col = 0; col < nvars; ++col)
    if (pivot_row[col] >= 0) c[col] = -rows[pivot_row[col]][free_var];
  for (FieldElement& value : c)
    if (!value.is_zero()) {
      const FieldElement scale = value.inverse();
      for (FieldElement& w : c) w *= scale;
      break;
    }
  return c;
}

}  // namespace

std::optional<std::vector<FieldElement>> linear_dependence(
    const std::vector<QuadExtElement>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty system");
  const Polynomial d = elements.front().d;
  Polynomial common(1);
  for (const QuadExtElement& e : elements) {
    if (e.d != d) throw std::invalid_argument("mixed radicands in one system");
    for (const Polynomial* den : {&e.u.den(), &e.v.den()})
      common = common * *exact_divide(*den, poly_gcd(common, *den));
  }

  const RationalFunction scale(common);
  std::vector<Polynomial> us, vs;
  long du = 0, dv = 0;
  for (const QuadExtElement& e : elements) {
    us.push_back((e.u * scale).as_polynomial());
    vs.push_back((e.v * scale).as_polynomial());
    if (us.back().degree() > du) du = us.back().degree().value();
    if (vs.back().degree() > dv) dv = vs.back().degree().value();
  }

  const long n = static_cast<long>(elements.size());
  const long coords = du + 1 + dv + 1;
  std::vector<std::vector<FieldElement>> rows(coords, std::vector<FieldElement>(n, FieldElement(0)));
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k <= du; ++k) rows[k][i] = us[i].coefficient(k);
    for (long k = 0; k <= dv; ++k) rows[du + 1 + k][i] = vs[i].coefficient(k);
  }

  auto relation = kernel_element(std::move(rows), n);
  if (!relation) return std::nullopt;

  QuadExtElement check = QuadExtElement::base(RationalFunction(), d);
  for (long i = 0; i < n; ++i) {
    const Polynomial c((*relation)[i]);
    check = check + QuadExtElement(elements[i].u * RationalFunction(c),
                                   elements[i].v * RationalFunction(c), d);
  }
  if (!check.is_zero()) throw std::logic_error("relation failed the substitution check");
  return relation;
}

}  // namespace diotrip
