#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diotrip/power_sum.hpp"

namespace diotrip {

// One verified solution of ab + p = G_x, ac + p = G_y, bc + p = G_z at
// indices x < y < z: pairwise distinct nonzero polynomials with
// deg a <= deg b <= deg c. The overall sign is fixed by giving a's leading
// coefficient positive rational part (positive radical part when the
// rational part vanishes). When the coefficients need a quadratic extension,
// lambda carries the squarefree integer with Q(sqrt(lambda)) as their field;
// disengaged over the plain rationals.
struct TripleSolution {
  long x = 0;
  long y = 0;
  long z = 0;
  Polynomial a, b, c;
  std::optional<mpz_class> lambda;

  bool operator==(const TripleSolution& o) const {
    return x == o.x && y == o.y && z == o.z && a == o.a && b == o.b && c == o.c &&
           lambda == o.lambda;
  }
  bool operator!=(const TripleSolution& o) const { return !(*this == o); }
  std::string str() const;
};

// An index whose sequence value was excluded from the search, with the
// reason.
struct SkipRecord {
  long n = 0;
  std::string reason;

  bool operator==(const SkipRecord& o) const { return n == o.n && reason == o.reason; }
};

struct SearchOutcome {
  std::vector<TripleSolution> solutions;  // in (x, y, z)-lexicographic order
  std::vector<SkipRecord> skipped;        // in index order
};

// Enumerates every min_index <= x < y < z <= max_index and keeps the index
// triples whose values A = G_x - p, B = G_y - p, C = G_z - p admit the exact
// recovery a = sqrt(AB/C), b = A/a, c = B/a: C must divide AB, ABC must have
// a polynomial square root over the closed scalar field (decided by
// multiplicity parity), and the recovered triple must reproduce A, B, C.
// Indices with non-polynomial or vanishing values are recorded in skipped
// and take part in no triple. Candidates split across jobs worker threads
// (machine default when jobs <= 0); the outcome does not depend on jobs.
// Throws std::invalid_argument unless 0 <= min_index <= max_index.
SearchOutcome search(const PowerSum& seq, const Polynomial& p, long max_index,
                     long min_index = 0, int jobs = 0);

// Same contract as search, single-threaded, with the square decision made by
// coefficient matching from the top instead of multiplicity parity. Kept as
// an independent implementation to test against.
SearchOutcome search_reference(const PowerSum& seq, const Polynomial& p, long max_index,
                               long min_index = 0);

// Re-derives everything claimed by a solution from scratch: index order,
// nonzero and pairwise distinct polynomials, the degree ordering, the three
// defining equations, and the cross-equation identity
// b G_y - a G_z = (b - a) p. When deg a = deg b the two equal-degree labels
// may be swapped, so the (y, z)-pairing is also accepted mirrored.
bool verify_triple(const TripleSolution& sol, const PowerSum& seq, const Polynomial& p);

// Degree facts about a solution: both product identities are evaluated
// directly; the index-gap identity (z - y) deg a_1 = deg b - deg a engages
// only when the sequence passes the growth hypotheses and y is beyond the
// dominance threshold, where the degree law backs it.
struct DegreeRelations {
  bool y_product = false;  // deg G_y = deg a + deg c
  bool z_product = false;  // deg G_z = deg b + deg c
  std::optional<bool> index_gap;
};
DegreeRelations degree_relations(const TripleSolution& sol, const PowerSum& seq);

}  // namespace diotrip
