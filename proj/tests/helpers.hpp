#pragma once

#include <cstdint>
#include <vector>

#include "diotrip/rational_function.hpp"

namespace diotrip::testutil {

// Deterministic generator independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline Polynomial int_poly(const std::vector<long>& ascending) {
  std::vector<FieldElement> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return Polynomial::from_coefficients(std::move(c));
}

inline Polynomial random_poly(Rng& rng, long max_degree, bool nonzero) {
  while (true) {
    long deg = rng.range(0, max_degree);
    std::vector<FieldElement> c;
    for (long i = 0; i <= deg; ++i) c.emplace_back(rng.range(-9, 9));
    Polynomial p = Polynomial::from_coefficients(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline Polynomial random_monic(Rng& rng, long deg) {
  std::vector<FieldElement> c;
  for (long i = 0; i < deg; ++i) c.emplace_back(rng.range(-9, 9));
  c.emplace_back(1);
  return Polynomial::from_coefficients(std::move(c));
}

inline RationalFunction random_rational_function(Rng& rng, long max_degree) {
  Polynomial num = random_poly(rng, max_degree, true);
  Polynomial den = random_poly(rng, max_degree, true);
  return RationalFunction(num, den);
}

// Plain extended Euclid, the oracle for gcd results: returns (g, u, v) with
// u*a + v*b == g and g monic.
struct ExtendedGcd {
  Polynomial g, u, v;
};

inline ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial u0(1), u1, v0, v1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Polynomial u2 = u0 - q * u1;
    Polynomial v2 = v0 - q * v1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  FieldElement scale = r0.leading_coefficient().inverse();
  return {r0 * scale, u0 * scale, v0 * scale};
}

}  // namespace diotrip::testutil
