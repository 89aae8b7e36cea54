#pragma once

#include "smoothred/polynomial.hpp"
#include "smoothred/ring.hpp"

namespace smoothred {

using Poly = Polynomial<RingElement>;

// Internal data of a PolynomialQuotient descriptor.
struct QuotientData {
  RingPtr base;
  VarNames vars;
  std::vector<Poly> relators;  // as given
  std::vector<Poly> reducers;  // GB over a field base, the relators over ZZ
};

template <>
struct coeff_ops<RingElement> {
  using Handle = RingPtr;
  static Handle ring_of(const RingElement& c) { return c.ring(); }
  static bool same_ring(const Handle& a, const Handle& b) {
    return a == b || (a && b && a->equals(*b));
  }
  static RingElement zero(const Handle& h) { return RingElement::zero(h); }
  static RingElement one(const Handle& h) { return RingElement::one(h); }
  static RingElement from_int(const Handle& h, const Int& n) { return RingElement::from_int(h, n); }
  static bool is_zero(const RingElement& c) { return c.is_zero(); }
  static bool is_one(const RingElement& c) { return c.is_one(); }
  static std::string to_string(const RingElement& c) { return c.to_string(); }
};

inline const Polynomial<RingElement>& RingElement::quot_value() const {
  return *std::get<QuotPayload>(v_);
}

}  // namespace smoothred
