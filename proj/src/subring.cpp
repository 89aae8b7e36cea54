#include "smoothred/subring.hpp"

#include <sstream>

namespace smoothred {

SubringPtr SubringView::generated(RingPtr ambient, const std::vector<RingElement>& gens) {
  auto v = std::shared_ptr<SubringView>(new SubringView());
  v->ambient_ = std::move(ambient);
  for (auto& g : gens) {
    if (!(g.ring() == v->ambient_ || g.ring()->equals(*v->ambient_)))
      throw std::invalid_argument("subring generator not in ambient ring");
    bool dup = false;
    for (auto& have : v->gens_)
      if (have == g) {
        dup = true;
        break;
      }
    if (!dup) v->gens_.push_back(g);
  }
  return v;
}

std::optional<size_t> SubringView::index_of_generator(const RingElement& v) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == v) return i;
  return std::nullopt;
}

RingElement evaluate_expr(const SubringView& view, const SubringElement::Expr& expr) {
  RingElement acc = RingElement::zero(view.ambient());
  for (auto& [m, c] : expr) {
    RingElement t = RingElement::from_int(view.ambient(), c);
    for (size_t i = 0; i < m.exps.size(); ++i)
      for (uint32_t e = 0; e < m.exps[i]; ++e) t = t * view.generators()[i];
    acc = acc + t;
  }
  return acc;
}

SubringElement SubringElement::from_int(const SubringPtr& view, const Int& n) {
  SubringElement e;
  e.view_ = view;
  if (n != 0) e.expr_.emplace(Monomial::unit(view->generator_count()), n);
  e.image_ = RingElement::from_int(view->ambient(), n);
  return e;
}

SubringElement SubringElement::generator(const SubringPtr& view, size_t i) {
  if (i >= view->generator_count()) throw std::invalid_argument("generator index out of range");
  SubringElement e;
  e.view_ = view;
  e.expr_.emplace(Monomial::var(view->generator_count(), i), Int(1));
  e.image_ = view->generators()[i];
  return e;
}

SubringElement SubringElement::from_parts(SubringPtr view, Expr expr, RingElement image) {
  SubringElement e;
  e.view_ = std::move(view);
  e.expr_ = std::move(expr);
  e.image_ = std::move(image);
  return e;
}

RingElement SubringElement::evaluate() const { return evaluate_expr(*view_, expr_); }

bool SubringElement::is_one() const { return image_ == RingElement::one(view_->ambient()); }

static void check_same_view(const SubringElement& a, const SubringElement& b) {
  if (a.view() != b.view()) throw std::invalid_argument("subring view mismatch");
}

SubringElement SubringElement::operator+(const SubringElement& o) const {
  check_same_view(*this, o);
  SubringElement e;
  e.view_ = view_;
  e.expr_ = expr_;
  for (auto& [m, c] : o.expr_) {
    auto it = e.expr_.find(m);
    if (it == e.expr_.end()) {
      e.expr_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) e.expr_.erase(it);
    }
  }
  e.image_ = image_ + o.image_;
  return e;
}

SubringElement SubringElement::operator*(const SubringElement& o) const {
  check_same_view(*this, o);
  SubringElement e;
  e.view_ = view_;
  for (auto& [ma, ca] : expr_)
    for (auto& [mb, cb] : o.expr_) {
      Monomial m = ma * mb;
      Int c = ca * cb;
      auto it = e.expr_.find(m);
      if (it == e.expr_.end()) {
        e.expr_.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) e.expr_.erase(it);
      }
    }
  e.image_ = image_ * o.image_;
  return e;
}

SubringElement SubringElement::operator-() const {
  SubringElement e;
  e.view_ = view_;
  for (auto& [m, c] : expr_) e.expr_.emplace(m, -c);
  e.image_ = -image_;
  return e;
}

bool SubringElement::operator==(const SubringElement& o) const {
  return view_ == o.view_ && image_ == o.image_;
}

std::string SubringElement::expr_string() const {
  if (expr_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : expr_) {
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      bool firstv = true;
      for (size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << view_->generator_symbol(i);
        if (m.exps[i] > 1) os << "^" << m.exps[i];
      }
    }
  }
  return os.str();
}

}  // namespace smoothred
