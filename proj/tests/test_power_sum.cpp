#include <doctest.h>

#include <algorithm>
#include <vector>

#include "diotrip/power_sum.hpp"
#include "helpers.hpp"

using namespace diotrip;
using testutil::Rng;
using testutil::int_poly;
using testutil::random_monic;
using testutil::random_rational_function;

namespace {

Polynomial x() { return Polynomial::variable(); }

// G_n = X (X^2)^n + X^n
PowerSum reference_sequence() {
  return PowerSum({RationalFunction(x()), 1}, {int_poly({0, 0, 1}), int_poly({0, 1})});
}

// G_n = (1/X) (X^3)^n + X^3 X^n
PowerSum slow_start_sequence() {
  return PowerSum({RationalFunction(Polynomial(1), x()), RationalFunction(int_poly({0, 0, 0, 1}))},
                  {int_poly({0, 0, 0, 1}), int_poly({0, 1})});
}

PowerSum random_admissible(Rng& rng) {
  long k = rng.range(2, 3);
  std::vector<RationalFunction> coeffs;
  std::vector<Polynomial> roots;
  long top = k + rng.range(1, 3);
  for (long i = 0; i < k; ++i) {
    coeffs.push_back(random_rational_function(rng, 3));
    roots.push_back(random_monic(rng, top - i));
  }
  return PowerSum(std::move(coeffs), std::move(roots));
}

}  // namespace

TEST_CASE("construction sorts by root degree, merges like roots, prunes cancellations") {
  PowerSum s({1, RationalFunction(x())}, {int_poly({0, 1}), int_poly({0, 0, 1})});
  CHECK(s.root(0) == int_poly({0, 0, 1}));
  CHECK(s.coefficient(0) == RationalFunction(x()));
  CHECK(s.root(1) == int_poly({0, 1}));
  CHECK(s.coefficient(1) == RationalFunction(1));

  PowerSum merged({1, 2, 3}, {int_poly({0, 1}), int_poly({0, 0, 1}), int_poly({0, 1})});
  CHECK(merged.order() == 2);
  CHECK(merged.coefficient(1) == RationalFunction(4));

  PowerSum pruned({1, -1, 5}, {int_poly({0, 1}), int_poly({0, 1}), int_poly({1, 1})});
  CHECK(pruned.order() == 1);
  CHECK(pruned.root(0) == int_poly({1, 1}));

  CHECK(reference_sequence() == reference_sequence());
  CHECK(reference_sequence() != slow_start_sequence());
  CHECK(!reference_sequence().str().empty());

  CHECK_THROWS_AS(PowerSum({1, 2}, {int_poly({0, 1})}), std::invalid_argument);
  CHECK_THROWS_AS(PowerSum(std::vector<RationalFunction>{}, std::vector<Polynomial>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PowerSum({0}, {int_poly({0, 1})}), std::invalid_argument);
  CHECK_THROWS_AS(PowerSum({1}, {Polynomial()}), std::invalid_argument);
  CHECK_THROWS_AS(PowerSum({1, -1}, {int_poly({0, 1}), int_poly({0, 1})}), std::invalid_argument);
}

TEST_CASE("evaluate expands the Binet sum exactly") {
  PowerSum ref = reference_sequence();
  CHECK(evaluate(ref, 2) == RationalFunction(int_poly({0, 0, 1, 0, 0, 1})));
  CHECK(evaluate(ref, 0) == RationalFunction(int_poly({1, 1})));
  CHECK(evaluate(ref, 0).is_polynomial());
  CHECK_THROWS_AS(evaluate(ref, -1), std::invalid_argument);

  PowerSum frac = slow_start_sequence();
  CHECK(!evaluate(frac, 0).is_polynomial());
  CHECK(evaluate(frac, 0) == RationalFunction(int_poly({1, 0, 0, 0, 1}), x()));
  CHECK(evaluate(frac, 3).is_polynomial());
  CHECK(evaluate(frac, 3) == RationalFunction(int_poly({0, 0, 0, 0, 0, 0, 1, 0, 1})));
}

TEST_CASE("n0 and the degree law") {
  Polynomial one(1);
  PowerSum ref = reference_sequence();
  CHECK(compute_n0(ref, one) == 0);
  CHECK(degree_law(ref, 3) == 7);
  CHECK(evaluate(ref, 3) == RationalFunction(int_poly({0, 0, 0, 1, 0, 0, 0, 1})));

  PowerSum constant_lead({1, 1}, {int_poly({0, 0, 1}), int_poly({0, 1})});
  CHECK(degree_law(constant_lead, 2) == 4);

  PowerSum frac = slow_start_sequence();
  CHECK(dominance_threshold(frac) == 3);
  CHECK(compute_n0(frac, one) == 3);
  CHECK(degree_law(frac, 3) == 8);
  CHECK_THROWS_AS(degree_law(frac, 2), std::invalid_argument);

  PowerSum constant_second({RationalFunction(x()), 5}, {int_poly({0, 0, 1}), int_poly({2})});
  CHECK(compute_n0(constant_second, one) == 0);

  PowerSum tied({1, 1}, {int_poly({1, 1}), int_poly({2, 1})});
  CHECK_THROWS_AS(compute_n0(tied, one), std::invalid_argument);
  CHECK_THROWS_AS(degree_law(tied, 5), std::invalid_argument);

  Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSum seq = random_admissible(rng);
    long n0 = compute_n0(seq, one);
    REQUIRE(n0 <= 20);
    for (long n = n0; n <= 20; ++n)
      CHECK(degree_law(seq, n) == evaluate(seq, n).degree().value());
  }
}

TEST_CASE("C7 and kappa constants") {
  PowerSum ref = reference_sequence();
  CHECK(compute_c7(ref, Polynomial(1)) == 1);
  CHECK(compute_c7(ref, Polynomial()) == 1);
  CHECK(kappa(ref) == mpq_class(2, 3));

  PowerSum frac = slow_start_sequence();
  CHECK(compute_c7(frac, Polynomial(1)) == -4);
  CHECK(kappa(frac) == mpq_class(3, 4));

  PowerSum single({1}, {int_poly({0, 1})});
  CHECK(kappa(single) == mpq_class(1, 2));
  CHECK(compute_c7(single, int_poly({0, 0, 1})) == -2);
  CHECK_THROWS_AS(compute_c7(single, Polynomial()), std::invalid_argument);
}

TEST_CASE("hypothesis report verdicts") {
  HypothesisReport ok = check_hypotheses(reference_sequence());
  CHECK(ok.pass());
  CHECK(ok.dominant_root);
  CHECK(ok.tied_top_degree_count == 1);
  CHECK(ok.coefficient_not_square);
  CHECK(ok.coefficient_root_not_square);

  PowerSum square_coeff({RationalFunction(int_poly({0, 0, 1})), 1},
                        {int_poly({0, 0, 1}), int_poly({0, 1})});
  HypothesisReport r1 = check_hypotheses(square_coeff);
  CHECK(r1.dominant_root);
  CHECK(!r1.coefficient_not_square);
  CHECK(!r1.pass());

  PowerSum square_product({RationalFunction(x()), 1}, {int_poly({0, 0, 0, 1}), int_poly({0, 1})});
  HypothesisReport r2 = check_hypotheses(square_product);
  CHECK(r2.dominant_root);
  CHECK(r2.coefficient_not_square);
  CHECK(!r2.coefficient_root_not_square);
  CHECK(!r2.pass());

  PowerSum scaled({RationalFunction(x()), 1}, {int_poly({0, 0, 5}), int_poly({0, 1})});
  CHECK(check_hypotheses(scaled).pass());

  PowerSum constant_second({RationalFunction(x()), 1}, {int_poly({0, 0, 1}), int_poly({2})});
  CHECK(!check_hypotheses(constant_second).dominant_root);

  PowerSum chain3({1, 1, RationalFunction(x())},
                  {int_poly({0, 0, 0, 1}), int_poly({0, 0, 1}), int_poly({0, 1})});
  CHECK(check_hypotheses(chain3).dominant_root);

  PowerSum mid_tie({1, 1, 1}, {int_poly({0, 0, 0, 1}), int_poly({0, 0, 1}), int_poly({1, 0, 1})});
  CHECK(!check_hypotheses(mid_tie).dominant_root);

  PowerSum trailing({1, 1, 1}, {int_poly({0, 0, 0, 1}), int_poly({0, 1}), int_poly({2})});
  CHECK(check_hypotheses(trailing).dominant_root);

  PowerSum top_tie({1, 1}, {int_poly({0, 0, 1}), int_poly({1, 0, 1})});
  HypothesisReport r4 = check_hypotheses(top_tie);
  CHECK(!r4.dominant_root);
  CHECK(r4.tied_top_degree_count == 2);
}

TEST_CASE("membership inverts evaluation") {
  Polynomial one(1);
  PowerSum ref = reference_sequence();
  CHECK(membership(ref, int_poly({0, 0, 1, 0, 0, 1}), one) == 2);
  CHECK(!membership(ref, int_poly({0, 0, 0, 0, 0, 1}), one).has_value());
  CHECK(!membership(ref, int_poly({0, 0, 0, 0, 1}), one).has_value());
  CHECK(membership(ref, int_poly({1, 1}), one) == 0);
  CHECK(!membership(ref, Polynomial(), one).has_value());
  for (long n = 0; n <= 20; ++n)
    CHECK(membership(ref, evaluate(ref, n).as_polynomial(), one) == n);

  PowerSum top_tie({1, 1}, {int_poly({0, 0, 1}), int_poly({1, 0, 1})});
  CHECK_THROWS_AS(membership(top_tie, one, one), std::invalid_argument);
}

TEST_CASE("product tensors Binet data and merges like roots") {
  PowerSum xonly({1}, {int_poly({0, 1})});
  PowerSum sq = product(xonly, xonly);
  CHECK(sq.order() == 1);
  CHECK(sq.root(0) == int_poly({0, 0, 1}));
  CHECK(sq.coefficient(0) == RationalFunction(1));

  PowerSum a({RationalFunction(int_poly({1, 1}))}, {int_poly({0, 0, 1})});
  PowerSum b({RationalFunction(int_poly({2, 1}))}, {int_poly({25, 10, 1})});
  PowerSum ab = product(a, b);
  CHECK(ab.order() == 1);
  CHECK(ab.coefficient(0) == RationalFunction(int_poly({1, 1}) * int_poly({2, 1})));
  CHECK(ab.root(0) == int_poly({0, 0, 1}) * int_poly({25, 10, 1}));

  PowerSum u({1, 1}, {int_poly({0, 1}), int_poly({0, 0, 0, 1})});
  PowerSum v({1, -1}, {int_poly({0, 1}), int_poly({0, 0, 0, 1})});
  PowerSum w = product(u, v);
  CHECK(w.order() == 2);  // the two cross terms at x^4 cancel
  for (long n = 0; n <= 5; ++n)
    CHECK(evaluate(w, n) == evaluate(u, n) * evaluate(v, n));

  Rng rng(91);
  for (int trial = 0; trial < 15; ++trial) {
    PowerSum pa({random_rational_function(rng, 3), random_rational_function(rng, 3)},
                {random_monic(rng, 2), random_monic(rng, 1)});
    PowerSum pb({random_rational_function(rng, 3), random_rational_function(rng, 3)},
                {random_monic(rng, 2), random_monic(rng, 1)});
    PowerSum pp = product(pa, pb);
    for (long n = 0; n <= 10; ++n)
      CHECK(evaluate(pp, n) == evaluate(pa, n) * evaluate(pb, n));
  }
}
