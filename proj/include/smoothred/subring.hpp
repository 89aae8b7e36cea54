#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smoothred/poly_ring.hpp"

namespace smoothred {

class SubringView;
using SubringPtr = std::shared_ptr<const SubringView>;

// The sub-ZZ-algebra of an ambient ring generated by a finite list of
// elements, embedded injectively. Elements are integer-coefficient
// expressions in the generator symbols c1..cr together with their cached
// ambient image; equality is equality of ambient images.
class SubringView : public std::enable_shared_from_this<SubringView> {
 public:
  static SubringPtr generated(RingPtr ambient, const std::vector<RingElement>& gens);

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<RingElement>& generators() const { return gens_; }
  size_t generator_count() const { return gens_.size(); }
  std::string generator_symbol(size_t i) const { return "c" + std::to_string(i + 1); }
  std::optional<size_t> index_of_generator(const RingElement& v) const;

 private:
  SubringView() = default;
  RingPtr ambient_;
  std::vector<RingElement> gens_;  // deduplicated, first-occurrence order
};

class SubringElement {
 public:
  // Expression: generator-exponent monomial -> integer coefficient.
  using Expr = std::map<Monomial, Int, GrevlexDesc>;

  static SubringElement from_int(const SubringPtr& view, const Int& n);
  static SubringElement generator(const SubringPtr& view, size_t i);
  // Unchecked pairing of expression and cached image; used internally and
  // by fault-injection tests.
  static SubringElement from_parts(SubringPtr view, Expr expr, RingElement image);

  const SubringPtr& view() const { return view_; }
  const Expr& expr() const { return expr_; }
  const RingElement& image() const { return image_; }

  // Re-evaluates the expression at the generators; the invariant is that
  // this always equals image().
  RingElement evaluate() const;
  bool invariant_holds() const { return evaluate() == image_; }

  bool is_zero() const { return image_.is_zero(); }
  bool is_one() const;

  SubringElement operator+(const SubringElement& o) const;
  SubringElement operator*(const SubringElement& o) const;
  SubringElement operator-() const;
  SubringElement operator-(const SubringElement& o) const { return *this + (-o); }
  // Ambient-image equality, sound because the embedding is injective.
  bool operator==(const SubringElement& o) const;

  std::string expr_string() const;
  // Parenthesized when needed so it can be embedded as a coefficient.
  std::string to_string() const {
    std::string s = expr_string();
    return expr_.size() > 1 ? "(" + s + ")" : s;
  }

 private:
  SubringElement() = default;
  SubringPtr view_;
  Expr expr_;
  RingElement image_;
};

RingElement evaluate_expr(const SubringView& view, const SubringElement::Expr& expr);

template <>
struct coeff_ops<SubringElement> {
  using Handle = SubringPtr;
  static Handle ring_of(const SubringElement& c) { return c.view(); }
  static bool same_ring(const Handle& a, const Handle& b) { return a == b; }
  static SubringElement zero(const Handle& h) { return SubringElement::from_int(h, 0); }
  static SubringElement one(const Handle& h) { return SubringElement::from_int(h, 1); }
  static SubringElement from_int(const Handle& h, const Int& n) {
    return SubringElement::from_int(h, n);
  }
  static bool is_zero(const SubringElement& c) { return c.is_zero(); }
  static bool is_one(const SubringElement& c) { return c.is_one(); }
  static std::string to_string(const SubringElement& c) { return c.to_string(); }
};

using SubringPoly = Polynomial<SubringElement>;

}  // namespace smoothred
