#include "diotrip/search.hpp"

#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diotrip/bounds.hpp"
#include "diotrip/squarefree.hpp"

namespace diotrip {

std::string TripleSolution::str() const {
  std::string out = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                    "): a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
  if (lambda) out += "  over Q(sqrt(" + lambda->get_str() + "))";
  return out;
}

namespace {

std::optional<TripleSolution> recover_triple(const Polynomial& va, const Polynomial& vb,
                                             const Polynomial& vc, long x, long y, long z,
                                             bool parity_decision) {
  const long degree_sum = va.degree().value() + vb.degree().value() + vc.degree().value();
  if (degree_sum % 2 != 0) return std::nullopt;  // odd degree is never a square

  const Polynomial ab = va * vb;
  const auto q = exact_divide(ab, vc);
  if (!q) return std::nullopt;
  const Polynomial abc = ab * vc;
  const bool square = parity_decision ? is_square_in_closure_poly(abc)
                                      : monic_sqrt(abc.monic()).has_value();
  if (!square) return std::nullopt;

  const auto a = poly_sqrt(*q);
  if (!a) return std::nullopt;
  const auto b = exact_divide(va, *a);
  if (!b) return std::nullopt;
  const auto c = exact_divide(vb, *a);
  if (!c) return std::nullopt;
  if (*a * *b != va || *a * *c != vb || *b * *c != vc) return std::nullopt;
  if (*a == *b || *a == *c || *b == *c) return std::nullopt;
  if (!(a->degree() <= b->degree() && b->degree() <= c->degree())) return std::nullopt;

  TripleSolution sol;
  sol.x = x;
  sol.y = y;
  sol.z = z;
  sol.a = *a;
  sol.b = *b;
  sol.c = *c;
  const FieldSpec field = merge_specs(merge_specs(a->field(), b->field()), c->field());
  if (field.tag == FieldTag::quadratic) sol.lambda = field.d;
  return sol;
}

// Values G_n - p for min_index <= n <= max_index; indices excluded from the
// search are left disengaged and logged.
std::vector<std::optional<Polynomial>> collect_values(const PowerSum& seq, const Polynomial& p,
                                                      long max_index, long min_index,
                                                      std::vector<SkipRecord>& skipped) {
  if (min_index < 0 || max_index < min_index)
    throw std::invalid_argument("index range must satisfy 0 <= min <= max");
  std::vector<std::optional<Polynomial>> values(max_index - min_index + 1);
  const RationalFunction shift(p);
  for (long n = min_index; n <= max_index; ++n) {
    const RationalFunction v = evaluate(seq, n) - shift;
    if (v.is_zero())
      skipped.push_back({n, "sequence value equals the shift"});
    else if (!v.is_polynomial())
      skipped.push_back({n, "sequence value minus shift is not a polynomial"});
    else
      values[n - min_index] = v.as_polynomial();
  }
  return values;
}

}  // namespace

SearchOutcome search(const PowerSum& seq, const Polynomial& p, long max_index, long min_index,
                     int jobs) {
  SearchOutcome out;
  const auto values = collect_values(seq, p, max_index, min_index, out.skipped);
  const long count = static_cast<long>(values.size());
  std::vector<std::vector<TripleSolution>> buckets(count);

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
  (void)jobs;
#endif
  for (long xi = 0; xi < count; ++xi) {
    if (!values[xi]) continue;
    for (long yi = xi + 1; yi < count; ++yi) {
      if (!values[yi]) continue;
      for (long zi = yi + 1; zi < count; ++zi) {
        if (!values[zi]) continue;
        auto sol = recover_triple(*values[xi], *values[yi], *values[zi], min_index + xi,
                                  min_index + yi, min_index + zi, true);
        if (sol) buckets[xi].push_back(std::move(*sol));
      }
    }
  }

  for (auto& bucket : buckets)
    for (auto& sol : bucket) out.solutions.push_back(std::move(sol));
  return out;
}

SearchOutcome search_reference(const PowerSum& seq, const Polynomial& p, long max_index,
                               long min_index) {
  SearchOutcome out;
  const auto values = collect_values(seq, p, max_index, min_index, out.skipped);
  const long count = static_cast<long>(values.size());
  for (long xi = 0; xi < count; ++xi) {
    if (!values[xi]) continue;
    for (long yi = xi + 1; yi < count; ++yi) {
      if (!values[yi]) continue;
      for (long zi = yi + 1; zi < count; ++zi) {
        if (!values[zi]) continue;
        auto sol = recover_triple(*values[xi], *values[yi], *values[zi], min_index + xi,
                                  min_index + yi, min_index + zi, false);
        if (sol) out.solutions.push_back(std::move(*sol));
      }
    }
  }
  return out;
}

bool verify_triple(const TripleSolution& sol, const PowerSum& seq, const Polynomial& p) {
  if (!(sol.x < sol.y && sol.y < sol.z) || sol.x < 0) return false;
  if (sol.a.is_zero() || sol.b.is_zero() || sol.c.is_zero()) return false;
  if (sol.a == sol.b || sol.a == sol.c || sol.b == sol.c) return false;
  if (!(sol.a.degree() <= sol.b.degree() && sol.b.degree() <= sol.c.degree())) return false;

  const RationalFunction shift(p);
  if (RationalFunction(sol.a * sol.b) + shift != evaluate(seq, sol.x)) return false;
  const RationalFunction gy = evaluate(seq, sol.y);
  const RationalFunction gz = evaluate(seq, sol.z);
  const bool direct = RationalFunction(sol.a * sol.c) + shift == gy &&
                      RationalFunction(sol.b * sol.c) + shift == gz;
  bool mirrored = false;
  if (!direct && sol.a.degree() == sol.b.degree())
    mirrored = RationalFunction(sol.b * sol.c) + shift == gy &&
               RationalFunction(sol.a * sol.c) + shift == gz;
  if (!direct && !mirrored) return false;

  const Polynomial gyp = (direct ? sol.a : sol.b) * sol.c + p;
  const Polynomial gzp = (direct ? sol.b : sol.a) * sol.c + p;
  return direct ? fixed_x_identity(sol.a, sol.b, gyp, gzp, p)
                : fixed_x_identity(sol.b, sol.a, gyp, gzp, p);
}

DegreeRelations degree_relations(const TripleSolution& sol, const PowerSum& seq) {
  if (!(sol.x < sol.y && sol.y < sol.z))
    throw std::invalid_argument("indices must satisfy x < y < z");
  if (sol.a.is_zero() || sol.b.is_zero() || sol.c.is_zero())
    throw std::invalid_argument("zero polynomial in the triple");

  DegreeRelations r;
  r.y_product =
      evaluate(seq, sol.y).degree() == sol.a.degree().value() + sol.c.degree().value();
  r.z_product =
      evaluate(seq, sol.z).degree() == sol.b.degree().value() + sol.c.degree().value();
  if (check_hypotheses(seq).pass() && sol.y >= dominance_threshold(seq)) {
    const long d1 = seq.root(0).degree().value();
    r.index_gap =
        (sol.z - sol.y) * d1 == sol.b.degree().value() - sol.a.degree().value();
  }
  return r;
}

}  // namespace diotrip
