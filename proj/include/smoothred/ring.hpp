#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smoothred/numeric.hpp"

namespace smoothred {

template <class C>
class Polynomial;

class RingDescriptor;
class RingElement;
struct QuotientData;

using RingPtr = std::shared_ptr<const RingDescriptor>;

enum class RingKind { Integers, Rationals, IntegersMod, PolynomialQuotient };

// Exact base ring: ZZ, QQ, ZZ/n, or a polynomial quotient over one of
// these. Elements carry canonical payloads so structural equality is ring
// equality.
class RingDescriptor {
 public:
  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr integers_mod(Int modulus);  // requires modulus >= 2
  // Over a field base a Groebner basis of the relators is computed at
  // construction; over ZZ every relator must have unit leading coefficient
  // or construction is rejected.
  static RingPtr polynomial_quotient(RingPtr base, std::vector<std::string> vars,
                                     std::vector<Polynomial<RingElement>> relators);

  RingKind kind() const { return kind_; }
  const Int& modulus() const { return modulus_; }
  const QuotientData& quotient() const;

  // QQ and ZZ/p (p prime) are the fields the ideal engine supports.
  bool is_field() const;
  bool equals(const RingDescriptor& o) const;
  std::string name() const;

 private:
  RingDescriptor() = default;
  RingKind kind_ = RingKind::Integers;
  Int modulus_ = 0;
  std::shared_ptr<const QuotientData> quot_;
};

enum class InverseStatus { Unit, NonUnit, Undecided };
struct InverseResult;

class RingElement {
 public:
  using QuotPayload = std::shared_ptr<const Polynomial<RingElement>>;

  static RingElement from_int(const RingPtr& ring, const Int& n);
  static RingElement from_rational(const RingPtr& ring, const Rat& q);  // denominator must invert
  static RingElement zero(const RingPtr& ring) { return from_int(ring, 0); }
  static RingElement one(const RingPtr& ring) { return from_int(ring, 1); }
  // Class of a base-ring polynomial in a quotient ring (reduced to normal form).
  static RingElement quotient_class(const RingPtr& ring, const Polynomial<RingElement>& rep);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const Int& int_value() const { return std::get<Int>(v_); }
  const Rat& rat_value() const { return std::get<Rat>(v_); }
  const Polynomial<RingElement>& quot_value() const;  // defined in poly_ring.hpp

  RingElement operator+(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator-(const RingElement& o) const { return *this + (-o); }
  bool operator==(const RingElement& o) const;

  std::string to_string() const;

  // Detached placeholder; usable only after assignment from a real element.
  RingElement() = default;

 private:
  friend InverseResult ring_inverse(const RingElement& a);
  RingPtr ring_;
  std::variant<Int, Rat, QuotPayload> v_;
};

struct InverseResult {
  InverseStatus status = InverseStatus::NonUnit;
  std::optional<RingElement> value;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
InverseResult ring_inverse(const RingElement& a);

// Exact quotient a/b when it exists in the ring (b a unit, or an exact
// divisor over ZZ). Empty when a is not a multiple of b.
std::optional<RingElement> ring_div_exact(const RingElement& a, const RingElement& b);

}  // namespace smoothred
