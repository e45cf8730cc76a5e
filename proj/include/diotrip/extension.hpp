#pragma once

#include <vector>

#include "diotrip/places.hpp"

namespace diotrip {

// Genus of the hyperelliptic function field C(x, sqrt(D)) for a squarefree
// monic nonconstant D: floor((deg D - 1) / 2).
long genus(const Polynomial& d);

// Element u + v*sqrt(D) of the quadratic extension of the rational function
// field by a squarefree monic nonconstant D.
struct QuadExtElement {
  RationalFunction u, v;
  Polynomial d;

  QuadExtElement(const RationalFunction& u_part, const RationalFunction& v_part,
                 const Polynomial& radicand);

  static QuadExtElement base(const RationalFunction& u_part, const Polynomial& radicand) {
    return QuadExtElement(u_part, RationalFunction(), radicand);
  }
  static QuadExtElement pure(const RationalFunction& v_part, const Polynomial& radicand) {
    return QuadExtElement(RationalFunction(), v_part, radicand);
  }

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  bool in_base_field() const { return v.is_zero(); }
  bool is_pure_radical() const { return u.is_zero(); }  // shape r * sqrt(D)

  QuadExtElement operator-() const;
  QuadExtElement operator+(const QuadExtElement& o) const;
  QuadExtElement operator-(const QuadExtElement& o) const;
  QuadExtElement operator*(const QuadExtElement& o) const;

  QuadExtElement conjugate() const { return QuadExtElement(u, -v, d); }
  RationalFunction norm_to_base() const { return u * u - v * v * RationalFunction(d); }

  bool operator==(const QuadExtElement& o) const {
    return u == o.u && v == o.v && d == o.d;
  }

  std::string str() const;
};

// How a base place behaves in the extension by sqrt(D): it ramifies exactly
// when D has odd order there (one place above, ramification two), and splits
// into two unramified places otherwise. residue_count tells how many places
// sit above each place of the bundle.
struct ExtensionPlace {
  PlaceBundle below;
  int ramification;   // 2 when ramified, else 1
  int residue_count;  // 1 when ramified, else 2

  bool ramified() const { return ramification == 2; }
  // places of the extension represented by this entry
  long size() const { return below.size() * residue_count; }
};

// The fiber of the extension over one base bundle; a single entry describes
// all places above it. Checks e * f summing to the extension degree.
std::vector<ExtensionPlace> extension_places(const Polynomial& d, const PlaceBundle& below);

// Normalized valuation (surjective onto the integers) of an element at the
// places of w. Exact for the pure shapes u and v*sqrt(D); for mixed input
// the minimum of the two shape orders is returned, which is exact at
// ramified places (the shapes' orders differ in parity there) and a lower
// bound at split places, where the two places above may disagree.
Valuation ext_valuation(const QuadExtElement& e, const ExtensionPlace& w);

// Height of a pure-shape element (u or v*sqrt(D)) over the extension field:
// minus the sum of its negative valuations, counted over all places of the
// extension. Restriction to the base field doubles plain heights.
long ext_height(const QuadExtElement& e);

}  // namespace diotrip
