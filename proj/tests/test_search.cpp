#include <doctest.h>

#include <algorithm>
#include <vector>

#include "diotrip/degenerate.hpp"
#include "diotrip/search.hpp"
#include "helpers.hpp"

using namespace diotrip;
using testutil::int_poly;

namespace {

Polynomial x() { return Polynomial::variable(); }

// G_n = X (X^2)^n + X^n, shift 1
PowerSum reference_sequence() {
  return PowerSum({RationalFunction(x()), 1}, {int_poly({0, 0, 1}), int_poly({0, 1})});
}

// G_n = (X^4 - X^2 - 1)(X^2)^n, shift -X^4, solution (X^2, X^4-1, X^6-X^4).
PowerSum product_sequence() {
  return PowerSum({RationalFunction(int_poly({-1, 0, -1, 0, 1}))}, {int_poly({0, 0, 1})});
}
Polynomial product_shift() { return int_poly({0, 0, 0, 0, -1}); }
TripleSolution product_solution() {
  TripleSolution sol;
  sol.x = 1;
  sol.y = 2;
  sol.z = 3;
  sol.a = int_poly({0, 0, 1});
  sol.b = int_poly({-1, 0, 0, 0, 1});
  sol.c = int_poly({0, 0, 0, 0, -1, 0, 1});
  return sol;
}

PowerSum doubled_sequence() {
  return PowerSum({RationalFunction(int_poly({-2, 0, -2, 0, 2}))}, {int_poly({0, 0, 1})});
}

// Two-term instance with rational-function coefficients whose first three
// values are not polynomials; solution (X, X^3 + (2/3)X, X^5 + 2X^2 + 2X)
// at indices (3, 4, 5).
PowerSum rational_sequence() {
  RationalFunction f1(int_poly({2, 6, 2, -3, 3}), int_poly({0, 0, 0, 0, 0, -3, 3}));
  RationalFunction f2(int_poly({-2, -4, -2, -2}), int_poly({0, 0, -3, 3}));
  return PowerSum({f1, f2}, {int_poly({0, 0, 1}), int_poly({0, 1})});
}
Polynomial rational_shift() { return int_poly({0, 0, -4, -2}) / FieldElement(3); }
TripleSolution rational_solution() {
  TripleSolution sol;
  sol.x = 3;
  sol.y = 4;
  sol.z = 5;
  sol.a = x();
  sol.b = int_poly({0, 2, 0, 3}) / FieldElement(3);
  sol.c = int_poly({0, 2, 2, 0, 0, 1});
  return sol;
}

bool contains(const std::vector<TripleSolution>& haystack, const TripleSolution& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

}  // namespace

TEST_CASE("search recovers the planted triples of the interleaved sequence") {
  const CounterexampleSpec spec = canonical_counterexample();
  REQUIRE(spec.report.pass());

  const SearchOutcome five = search(spec.g, Polynomial(1), 5);
  CHECK(five.skipped.empty());
  REQUIRE(five.solutions.size() == 2);
  CHECK(five.solutions[0].x == 0);
  CHECK(five.solutions[0].y == 1);
  CHECK(five.solutions[0].z == 2);
  CHECK(five.solutions[0].a == int_poly({1, 1}));
  CHECK(five.solutions[0].b == int_poly({2, 1}));
  CHECK(five.solutions[0].c == int_poly({3, 1}));
  CHECK(!five.solutions[0].lambda.has_value());

  const auto planted = planted_triples(spec, 8);
  REQUIRE(planted.size() == 3);
  const SearchOutcome eight = search(spec.g, Polynomial(1), 8);
  REQUIRE(eight.solutions.size() == planted.size());
  for (std::size_t i = 0; i < planted.size(); ++i) {
    const TripleSolution& sol = eight.solutions[i];
    CHECK(sol.x == planted[i].x);
    CHECK(sol.y == planted[i].y);
    CHECK(sol.z == planted[i].z);
    CHECK(sol.a == planted[i].a);
    CHECK(sol.b == planted[i].b);
    CHECK(sol.c == planted[i].c);
    CHECK(verify_triple(sol, spec.g, Polynomial(1)));
  }
}

TEST_CASE("reference sequence yields no solutions at any tested bound") {
  const SearchOutcome out = search(reference_sequence(), Polynomial(1), 12);
  CHECK(out.solutions.empty());
  CHECK(out.skipped.empty());
  const SearchOutcome ref = search_reference(reference_sequence(), Polynomial(1), 12);
  CHECK(ref.solutions.empty());
}

TEST_CASE("solution sets grow with the index bound") {
  const CounterexampleSpec spec = canonical_counterexample();
  const auto five = search(spec.g, Polynomial(1), 5).solutions;
  const auto eight = search(spec.g, Polynomial(1), 8).solutions;
  const auto twelve = search(spec.g, Polynomial(1), 12).solutions;
  for (const TripleSolution& sol : five) CHECK(contains(eight, sol));
  for (const TripleSolution& sol : eight) CHECK(contains(twelve, sol));
  CHECK(five.size() == 2);
  CHECK(eight.size() == 3);
  CHECK(twelve.size() == 4);
}

TEST_CASE("search finds every planted triple up to bound twenty") {
  const CounterexampleSpec spec = canonical_counterexample();
  const auto planted = planted_triples(spec, 20);
  REQUIRE(planted.size() == 7);
  const SearchOutcome out = search(spec.g, Polynomial(1), 20);
  for (const PlantedTriple& t : planted) {
    TripleSolution expected;
    expected.x = t.x;
    expected.y = t.y;
    expected.z = t.z;
    expected.a = t.a;
    expected.b = t.b;
    expected.c = t.c;
    CHECK(contains(out.solutions, expected));
  }
  for (const TripleSolution& sol : out.solutions)
    CHECK(verify_triple(sol, spec.g, Polynomial(1)));
}

TEST_CASE("search recovers the single-term product solution") {
  const SearchOutcome out = search(product_sequence(), product_shift(), 3);
  CHECK(out.skipped.empty());
  REQUIRE(out.solutions.size() == 1);
  CHECK(out.solutions[0] == product_solution());
  CHECK(verify_triple(out.solutions[0], product_sequence(), product_shift()));

  const DegreeRelations rel = degree_relations(out.solutions[0], product_sequence());
  CHECK(rel.y_product);
  CHECK(rel.z_product);
  REQUIRE(rel.index_gap.has_value());
  CHECK(*rel.index_gap);
}

TEST_CASE("doubled values surface a quadratic coefficient extension") {
  const Polynomial p2 = int_poly({0, 0, 0, 0, -2});
  const SearchOutcome out = search(doubled_sequence(), p2, 3);
  REQUIRE(out.solutions.size() == 1);
  const TripleSolution& sol = out.solutions[0];
  REQUIRE(sol.lambda.has_value());
  CHECK(*sol.lambda == 2);
  const FieldElement root2(FieldSpec::quadratic(2), 0, 1);
  CHECK(sol.a == Polynomial::monomial(root2, 2));
  CHECK(sol.b == int_poly({-1, 0, 0, 0, 1}) * root2);
  CHECK(sol.c == int_poly({0, 0, 0, 0, -1, 0, 1}) * root2);
  CHECK(verify_triple(sol, doubled_sequence(), p2));
  CHECK(sol.str().find("sqrt(2)") != std::string::npos);
}

TEST_CASE("non-polynomial values are skipped and logged") {
  const PowerSum seq = rational_sequence();
  const Polynomial p = rational_shift();
  const TripleSolution expected = rational_solution();
  const RationalFunction shift(p);
  REQUIRE(evaluate(seq, 3) == RationalFunction(expected.a * expected.b) + shift);
  REQUIRE(evaluate(seq, 4) == RationalFunction(expected.a * expected.c) + shift);
  REQUIRE(evaluate(seq, 5) == RationalFunction(expected.b * expected.c) + shift);

  const SearchOutcome out = search(seq, p, 5);
  REQUIRE(out.skipped.size() == 3);
  for (long n = 0; n < 3; ++n) {
    CHECK(out.skipped[n].n == n);
    CHECK(out.skipped[n].reason == "sequence value minus shift is not a polynomial");
  }
  REQUIRE(out.solutions.size() == 1);
  CHECK(out.solutions[0] == expected);
  CHECK(verify_triple(out.solutions[0], seq, p));

  const SearchOutcome narrowed = search(seq, p, 5, 3);
  CHECK(narrowed.skipped.empty());
  REQUIRE(narrowed.solutions.size() == 1);
  CHECK(narrowed.solutions[0] == expected);

  const DegreeRelations rel = degree_relations(out.solutions[0], seq);
  CHECK(rel.y_product);
  CHECK(rel.z_product);
  REQUIRE(rel.index_gap.has_value());
  CHECK(*rel.index_gap);
}

TEST_CASE("values equal to the shift are excluded and logged") {
  PowerSum seq({RationalFunction(x())}, {int_poly({0, 0, 1})});
  const Polynomial p = int_poly({0, 0, 0, 1});
  const SearchOutcome out = search(seq, p, 2);
  CHECK(out.solutions.empty());
  REQUIRE(out.skipped.size() == 1);
  CHECK(out.skipped[0].n == 1);
  CHECK(out.skipped[0].reason == "sequence value equals the shift");
}

TEST_CASE("worker count does not change the outcome") {
  const CounterexampleSpec spec = canonical_counterexample();
  const SearchOutcome serial = search(spec.g, Polynomial(1), 8, 0, 1);
  const SearchOutcome wide = search(spec.g, Polynomial(1), 8, 0, 4);
  const SearchOutcome second = search_reference(spec.g, Polynomial(1), 8);
  CHECK(serial.solutions == wide.solutions);
  CHECK(serial.skipped == wide.skipped);
  CHECK(serial.solutions == second.solutions);
  CHECK(serial.skipped == second.skipped);

  const SearchOutcome prod = search(product_sequence(), product_shift(), 5, 0, 3);
  const SearchOutcome prod_ref = search_reference(product_sequence(), product_shift(), 5);
  CHECK(prod.solutions == prod_ref.solutions);
}

TEST_CASE("verification rejects corrupted solutions") {
  const PowerSum seq = product_sequence();
  const Polynomial p = product_shift();
  TripleSolution sol = product_solution();
  REQUIRE(verify_triple(sol, seq, p));

  TripleSolution bumped = sol;
  bumped.c = bumped.c + Polynomial(1);
  CHECK(!verify_triple(bumped, seq, p));

  TripleSolution swapped = sol;
  std::swap(swapped.a, swapped.b);
  CHECK(!verify_triple(swapped, seq, p));

  TripleSolution degenerate = sol;
  degenerate.y = degenerate.x;
  CHECK(!verify_triple(degenerate, seq, p));

  TripleSolution zeroed = sol;
  zeroed.a = Polynomial();
  CHECK(!verify_triple(zeroed, seq, p));

  TripleSolution repeated = sol;
  repeated.b = repeated.a;
  CHECK(!verify_triple(repeated, seq, p));
}

TEST_CASE("equal-degree labels may be swapped") {
  const CounterexampleSpec spec = canonical_counterexample();
  TripleSolution mirrored;
  mirrored.x = 0;
  mirrored.y = 1;
  mirrored.z = 2;
  mirrored.a = int_poly({2, 1});
  mirrored.b = int_poly({1, 1});
  mirrored.c = int_poly({3, 1});
  CHECK(verify_triple(mirrored, spec.g, Polynomial(1)));

  mirrored.a = int_poly({3, 1});
  mirrored.b = int_poly({2, 1});
  mirrored.c = int_poly({1, 1});
  CHECK(!verify_triple(mirrored, spec.g, Polynomial(1)));

  TripleSolution planted;
  planted.x = 0;
  planted.y = 1;
  planted.z = 2;
  planted.a = int_poly({1, 1});
  planted.b = int_poly({2, 1});
  planted.c = int_poly({3, 1});
  const DegreeRelations rel = degree_relations(planted, spec.g);
  CHECK(rel.y_product);
  CHECK(rel.z_product);
  CHECK(!rel.index_gap.has_value());
}

TEST_CASE("search and relation preconditions") {
  CHECK_THROWS_AS(search(reference_sequence(), Polynomial(1), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(search(reference_sequence(), Polynomial(1), 5, -1), std::invalid_argument);
  CHECK_THROWS_AS(search_reference(reference_sequence(), Polynomial(1), 1, 2),
                  std::invalid_argument);

  TripleSolution sol = product_solution();
  sol.y = sol.x;
  CHECK_THROWS_AS(degree_relations(sol, product_sequence()), std::invalid_argument);
  TripleSolution hollow = product_solution();
  hollow.b = Polynomial();
  CHECK_THROWS_AS(degree_relations(hollow, product_sequence()), std::invalid_argument);
}
