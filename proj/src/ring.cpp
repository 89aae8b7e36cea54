#include "smoothred/ring.hpp"

#include <sstream>

#include "smoothred/ideal.hpp"
#include "smoothred/poly_ring.hpp"

namespace smoothred {

namespace {

Poly quotient_normal_form(const QuotientData& q, const Poly& p) {
  if (p.is_zero()) return p;
  return divide(p, q.reducers).remainder;
}

}  // namespace

RingPtr RingDescriptor::integers() {
  static RingPtr z = [] {
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::Integers;
    return RingPtr(d);
  }();
  return z;
}

RingPtr RingDescriptor::rationals() {
  static RingPtr q = [] {
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::Rationals;
    return RingPtr(d);
  }();
  return q;
}

RingPtr RingDescriptor::integers_mod(Int modulus) {
  if (modulus < 2) throw std::invalid_argument("IntegersMod requires modulus >= 2");
  auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
  d->kind_ = RingKind::IntegersMod;
  d->modulus_ = std::move(modulus);
  return d;
}

RingPtr RingDescriptor::polynomial_quotient(RingPtr base, std::vector<std::string> vars,
                                            std::vector<Poly> relators) {
  if (!base) throw std::invalid_argument("quotient base missing");
  for (auto& r : relators)
    if (r.is_zero()) throw std::invalid_argument("quotient relators must be nonzero");

  auto q = std::make_shared<QuotientData>();
  q->base = base;
  q->vars = make_vars(std::move(vars));
  // Rebind relators onto the shared variable list.
  for (auto& r : relators) {
    Poly rb(base, q->vars);
    if (r.nvars() != q->vars->size())
      throw std::invalid_argument("quotient relator arity mismatch");
    for (auto& [m, c] : r.terms()) rb.add_term(m, c);
    q->relators.push_back(std::move(rb));
  }

  if (base->is_field()) {
    q->reducers = groebner(IdealBasis(q->relators)).basis;
  } else if (base->kind() == RingKind::Integers) {
    for (auto& r : q->relators) {
      const RingElement& lc = r.leading().second;
      if (!(lc.is_one() || (-lc).is_one()))
        throw UnsupportedCoefficientRing(
            "quotient over ZZ requires relators with unit leading coefficient");
    }
    q->reducers = q->relators;
  } else {
    throw UnsupportedCoefficientRing("quotient base must be a field or ZZ");
  }

  auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
  d->kind_ = RingKind::PolynomialQuotient;
  d->quot_ = q;
  return d;
}

const QuotientData& RingDescriptor::quotient() const {
  if (kind_ != RingKind::PolynomialQuotient) throw std::logic_error("not a quotient ring");
  return *quot_;
}

bool RingDescriptor::is_field() const {
  switch (kind_) {
    case RingKind::Rationals:
      return true;
    case RingKind::IntegersMod:
      return is_probable_prime(modulus_);
    default:
      return false;
  }
}

bool RingDescriptor::equals(const RingDescriptor& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::IntegersMod:
      return modulus_ == o.modulus_;
    case RingKind::PolynomialQuotient: {
      const auto& a = *quot_;
      const auto& b = *o.quot_;
      if (!a.base->equals(*b.base) || *a.vars != *b.vars ||
          a.relators.size() != b.relators.size())
        return false;
      for (size_t i = 0; i < a.relators.size(); ++i)
        if (!(a.relators[i] == b.relators[i])) return false;
      return true;
    }
  }
  return false;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "ZZ";
    case RingKind::Rationals:
      return "QQ";
    case RingKind::IntegersMod:
      return "ZZ/" + modulus_.str();
    case RingKind::PolynomialQuotient: {
      std::ostringstream os;
      os << quot_->base->name() << "[";
      for (size_t i = 0; i < quot_->vars->size(); ++i)
        os << (i ? "," : "") << (*quot_->vars)[i];
      os << "]/(";
      for (size_t i = 0; i < quot_->relators.size(); ++i)
        os << (i ? ", " : "") << quot_->relators[i].to_string();
      os << ")";
      return os.str();
    }
  }
  return "?";
}

RingElement RingElement::from_int(const RingPtr& ring, const Int& n) {
  RingElement e;
  e.ring_ = ring;
  switch (ring->kind()) {
    case RingKind::Integers:
      e.v_ = n;
      break;
    case RingKind::Rationals:
      e.v_ = Rat(n);
      break;
    case RingKind::IntegersMod:
      e.v_ = mod_floor(n, ring->modulus());
      break;
    case RingKind::PolynomialQuotient: {
      const auto& q = ring->quotient();
      Poly c = Poly::constant(q.base, q.vars, RingElement::from_int(q.base, n));
      e.v_ = std::make_shared<const Poly>(quotient_normal_form(q, c));
      break;
    }
  }
  return e;
}

RingElement RingElement::from_rational(const RingPtr& ring, const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return from_int(ring, num);
  if (ring->kind() == RingKind::Rationals) {
    RingElement e;
    e.ring_ = ring;
    e.v_ = q;
    return e;
  }
  RingElement d = from_int(ring, den);
  InverseResult inv = ring_inverse(d);
  if (inv.status != InverseStatus::Unit)
    throw std::invalid_argument("denominator " + den.str() + " is not invertible in " +
                                ring->name());
  return from_int(ring, num) * *inv.value;
}

RingElement RingElement::quotient_class(const RingPtr& ring, const Poly& rep) {
  if (ring->kind() != RingKind::PolynomialQuotient)
    throw std::invalid_argument("quotient_class requires a quotient ring");
  const auto& q = ring->quotient();
  Poly rb(q.base, q.vars);
  if (rep.nvars() != q.vars->size())
    throw std::invalid_argument("quotient_class: representative arity mismatch");
  for (auto& [m, c] : rep.terms()) rb.add_term(m, c);
  RingElement e;
  e.ring_ = ring;
  e.v_ = std::make_shared<const Poly>(quotient_normal_form(q, rb));
  return e;
}

bool RingElement::is_zero() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return int_value() == 0;
    case RingKind::Rationals:
      return rat_value() == 0;
    case RingKind::PolynomialQuotient:
      return quot_value().is_zero();
  }
  return false;
}

bool RingElement::is_one() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return int_value() == 1;
    case RingKind::Rationals:
      return rat_value() == 1;
    case RingKind::PolynomialQuotient:
      return quot_value().is_constant() && !quot_value().is_zero() &&
             quot_value().constant_value().is_one();
  }
  return false;
}

static void check_same_ring(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring() || a.ring()->equals(*b.ring())))
    throw std::invalid_argument("ring descriptor mismatch: " + a.ring()->name() + " vs " +
                                b.ring()->name());
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(*this, o);
  RingElement e;
  e.ring_ = ring_;
  switch (ring_->kind()) {
    case RingKind::Integers:
      e.v_ = Int(int_value() + o.int_value());
      break;
    case RingKind::Rationals:
      e.v_ = Rat(rat_value() + o.rat_value());
      break;
    case RingKind::IntegersMod:
      e.v_ = mod_floor(int_value() + o.int_value(), ring_->modulus());
      break;
    case RingKind::PolynomialQuotient:
      // Normal forms are closed under addition: no reducible term can appear.
      e.v_ = std::make_shared<const Poly>(quot_value() + o.quot_value());
      break;
  }
  return e;
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(*this, o);
  RingElement e;
  e.ring_ = ring_;
  switch (ring_->kind()) {
    case RingKind::Integers:
      e.v_ = Int(int_value() * o.int_value());
      break;
    case RingKind::Rationals:
      e.v_ = Rat(rat_value() * o.rat_value());
      break;
    case RingKind::IntegersMod:
      e.v_ = mod_floor(int_value() * o.int_value(), ring_->modulus());
      break;
    case RingKind::PolynomialQuotient:
      e.v_ = std::make_shared<const Poly>(
          quotient_normal_form(ring_->quotient(), quot_value() * o.quot_value()));
      break;
  }
  return e;
}

RingElement RingElement::operator-() const {
  RingElement e;
  e.ring_ = ring_;
  switch (ring_->kind()) {
    case RingKind::Integers:
      e.v_ = Int(-int_value());
      break;
    case RingKind::Rationals:
      e.v_ = Rat(-rat_value());
      break;
    case RingKind::IntegersMod:
      e.v_ = mod_floor(-int_value(), ring_->modulus());
      break;
    case RingKind::PolynomialQuotient:
      e.v_ = std::make_shared<const Poly>(-quot_value());
      break;
  }
  return e;
}

bool RingElement::operator==(const RingElement& o) const {
  if (!(ring_ == o.ring_ || ring_->equals(*o.ring_))) return false;
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return int_value() == o.int_value();
    case RingKind::Rationals:
      return rat_value() == o.rat_value();
    case RingKind::PolynomialQuotient:
      return quot_value() == o.quot_value();
  }
  return false;
}

std::string RingElement::to_string() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return int_value().str();
    case RingKind::Rationals: {
      Int num = boost::multiprecision::numerator(rat_value());
      Int den = boost::multiprecision::denominator(rat_value());
      return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
    case RingKind::PolynomialQuotient: {
      std::string s = quot_value().to_string();
      return quot_value().terms().size() > 1 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }

InverseResult ring_inverse(const RingElement& a) {
  InverseResult r;
  const RingPtr& ring = a.ring();
  if (a.is_zero()) {
    r.status = InverseStatus::NonUnit;
    return r;
  }
  switch (ring->kind()) {
    case RingKind::Integers: {
      const Int& v = a.int_value();
      if (v == 1 || v == -1) {
        r.status = InverseStatus::Unit;
        r.value = a;
      }
      return r;
    }
    case RingKind::Rationals: {
      r.status = InverseStatus::Unit;
      RingElement e;
      e.ring_ = ring;
      e.v_ = Rat(Rat(1) / a.rat_value());
      r.value = e;
      return r;
    }
    case RingKind::IntegersMod: {
      Int x, y;
      Int g = ext_gcd(a.int_value(), ring->modulus(), x, y);
      if (g == 1) {
        r.status = InverseStatus::Unit;
        r.value = RingElement::from_int(ring, x);
      }
      return r;
    }
    case RingKind::PolynomialQuotient: {
      const auto& q = ring->quotient();
      if (a.quot_value().is_constant()) {
        InverseResult base = ring_inverse(a.quot_value().constant_value());
        if (base.status == InverseStatus::Unit) {
          r.status = InverseStatus::Unit;
          r.value = RingElement::quotient_class(
              ring, Poly::constant(q.base, q.vars, *base.value));
        } else {
          r.status = base.status;
        }
        return r;
      }
      if (!q.base->is_field()) {
        // No complete unit test without a strong basis over ZZ.
        r.status = InverseStatus::Undecided;
        return r;
      }
      // 1 in (relators, a)? The cofactor of a is then the inverse.
      std::vector<Poly> ext = q.reducers;
      ext.push_back(a.quot_value());
      GroebnerData gb = groebner(IdealBasis(ext));
      Poly one = Poly::constant(q.base, q.vars, RingElement::one(q.base));
      CofactorWitness w = reduce_with_cofactors(one, gb);
      if (!w.remainder.is_zero()) {
        r.status = InverseStatus::NonUnit;
        return r;
      }
      RingElement inv = RingElement::quotient_class(ring, w.cofactors.back());
      if ((a * inv).is_one()) {
        r.status = InverseStatus::Unit;
        r.value = inv;
      } else {
        r.status = InverseStatus::Undecided;
      }
      return r;
    }
  }
  return r;
}

std::optional<RingElement> ring_div_exact(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) return std::nullopt;
  InverseResult inv = ring_inverse(b);
  if (inv.status == InverseStatus::Unit) return a * *inv.value;
  if (b.ring()->kind() == RingKind::Integers) {
    if (a.int_value() % b.int_value() == 0)
      return RingElement::from_int(a.ring(), a.int_value() / b.int_value());
  }
  return std::nullopt;
}

}  // namespace smoothred
