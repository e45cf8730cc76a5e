#include <doctest.h>

#include "diotrip/field.hpp"
#include "helpers.hpp"

using namespace diotrip;
using testutil::Rng;

namespace {

FieldElement quad(long d, long a_num, long a_den, long b_num, long b_den) {
  return FieldElement(FieldSpec::quadratic(mpz_class(d)), make_rational(a_num, a_den),
                      make_rational(b_num, b_den));
}

FieldElement zeta(long a_num, long a_den, long b_num, long b_den) {
  return FieldElement(FieldSpec::cyclotomic3(), make_rational(a_num, a_den),
                      make_rational(b_num, b_den));
}

FieldElement random_element(Rng& rng, const FieldSpec& spec) {
  mpq_class a = make_rational(rng.range(-9, 9), rng.range(1, 5));
  mpq_class b = spec.is_rational() ? mpq_class(0) : make_rational(rng.range(-9, 9), rng.range(1, 5));
  return FieldElement(spec, a, b);
}

}  // namespace

TEST_CASE("field spec names round-trip") {
  for (const auto& name : {"Q", "Q_zeta3", "Q_sqrt:2", "Q_sqrt:-1", "Q_sqrt:-6"}) {
    CHECK(FieldSpec::parse(name).name() == name);
  }
  CHECK_THROWS_AS(FieldSpec::parse("Q_sqrt:4"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("Q_sqrt:0"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("Q_sqrt:12"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("R"), std::invalid_argument);
}

TEST_CASE("field axioms hold on random samples") {
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::quadratic(mpz_class(2)),
                                FieldSpec::quadratic(mpz_class(-1)), FieldSpec::cyclotomic3()}) {
    Rng rng(2026);
    for (int trial = 0; trial < 40; ++trial) {
      FieldElement x = random_element(rng, spec);
      FieldElement y = random_element(rng, spec);
      FieldElement z = random_element(rng, spec);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + FieldElement() == x);
      CHECK(x * FieldElement(1) == x);
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == FieldElement(1));
        CHECK((y / x) * x == y);
      }
      CHECK(x.norm() == (x * x.conjugate()).as_rational());
      CHECK(x.conjugate().conjugate() == x);
    }
  }
}

TEST_CASE("zeta3 generator satisfies its minimal polynomial") {
  FieldElement z = zeta(0, 1, 1, 1);
  CHECK(z * z + z + FieldElement(1) == FieldElement());
  CHECK(z * z * z == FieldElement(1));
  CHECK(z.norm() == 1);
}

TEST_CASE("mixing plain rationals with extensions promotes") {
  FieldElement r(make_rational(3, 2));
  FieldElement s = quad(2, 1, 1, 1, 1);  // 1 + w
  FieldElement sum = r + s;
  CHECK(sum.spec() == FieldSpec::quadratic(mpz_class(2)));
  CHECK(sum.rational_part() == make_rational(5, 2));
  CHECK(sum.extension_part() == 1);

  // values of Q embedded in an extension collapse back to plain rationals
  FieldElement t = s - quad(2, 0, 1, 1, 1);
  CHECK(t.is_rational());
  CHECK(t == FieldElement(1));

  CHECK_THROWS_AS(s + zeta(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("square roots inside each field") {
  // rationals
  CHECK(FieldElement(make_rational(9, 4)).sqrt().value() == FieldElement(make_rational(3, 2)));
  CHECK(!FieldElement(2).sqrt().has_value());
  CHECK(!FieldElement(-4).sqrt().has_value());
  CHECK(FieldElement().sqrt().value() == FieldElement());

  // Q(sqrt 2): sqrt(2) = w, sqrt(3 + 2w) = 1 + w
  FieldElement w = quad(2, 0, 1, 1, 1);
  CHECK(FieldElement(2).sqrt() == std::nullopt);
  CHECK(field_sqrt(FieldElement(2), FieldSpec::quadratic(mpz_class(2))).value() == w);
  FieldElement u = quad(2, 3, 1, 2, 1);
  auto root = u.sqrt();
  REQUIRE(root.has_value());
  CHECK(*root * *root == u);

  // Q(sqrt -1): sqrt(-1) = w, sqrt(2w) = 1 + w
  FieldElement i = quad(-1, 0, 1, 1, 1);
  CHECK(field_sqrt(FieldElement(-1), FieldSpec::quadratic(mpz_class(-1))).value() == i);
  auto root2 = quad(-1, 0, 1, 2, 1).sqrt();
  REQUIRE(root2.has_value());
  CHECK(*root2 * *root2 == quad(-1, 0, 1, 2, 1));

  // Q(zeta3): sqrt(-3) = 1 + 2 zeta3, sqrt(zeta3) = -(1 + zeta3)
  auto root3 = field_sqrt(FieldElement(-3), FieldSpec::cyclotomic3());
  REQUIRE(root3.has_value());
  CHECK(*root3 * *root3 == FieldElement(-3));
  FieldElement z = zeta(0, 1, 1, 1);
  auto root4 = z.sqrt();
  REQUIRE(root4.has_value());
  CHECK(*root4 * *root4 == z);
}

TEST_CASE("square roots round-trip on random squares and reject non-squares") {
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::quadratic(mpz_class(5)),
                                FieldSpec::quadratic(mpz_class(-2)), FieldSpec::cyclotomic3()}) {
    Rng rng(77);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
      FieldElement x = random_element(rng, spec);
      FieldElement sq = x * x;
      auto r = field_sqrt(sq, spec);
      REQUIRE(r.has_value());
      CHECK(*r * *r == sq);
      ++found;
    }
    CHECK(found == 60);
  }
  // elements that are provably not squares
  CHECK(!field_sqrt(FieldElement(3), FieldSpec::quadratic(mpz_class(2))).has_value());
  CHECK(!field_sqrt(FieldElement(2), FieldSpec::cyclotomic3()).has_value());
  CHECK(!field_sqrt(FieldElement(-1), FieldSpec::rationals()).has_value());
}

TEST_CASE("squarefree kernel and split") {
  CHECK(squarefree_kernel(mpz_class(12)) == 3);
  CHECK(squarefree_kernel(mpz_class(-4)) == -1);
  CHECK(squarefree_kernel(mpz_class(1)) == 1);
  CHECK(squarefree_kernel(mpz_class(30)) == 30);
  CHECK(squarefree_kernel(mpz_class(49)) == 1);

  mpz_class lambda;
  mpq_class s;
  squarefree_split(make_rational(8, 9), lambda, s);
  CHECK(lambda == 2);
  CHECK(s == make_rational(2, 3));
  squarefree_split(make_rational(-50, 1), lambda, s);
  CHECK(lambda == -2);
  CHECK(s == 5);
}
