#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "smoothred/monomial.hpp"
#include "smoothred/numeric.hpp"

namespace smoothred {

// Coefficient-ring glue for Polynomial<C>. Specialized for RingElement
// (poly_ring.hpp) and SubringElement (subring.hpp).
template <class C>
struct coeff_ops;

using VarNames = std::shared_ptr<const std::vector<std::string>>;

inline VarNames make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Sparse multivariate polynomial with grevlex term order. Immutable in
// spirit: all operations return new values.
template <class C>
class Polynomial {
 public:
  using Ops = coeff_ops<C>;
  using Handle = typename Ops::Handle;
  using TermMap = std::map<Monomial, C, GrevlexDesc>;

  Polynomial() = default;
  Polynomial(Handle ring, VarNames vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

  static Polynomial zero(Handle ring, VarNames vars) {
    return Polynomial(std::move(ring), std::move(vars));
  }
  static Polynomial constant(Handle ring, VarNames vars, C value) {
    Polynomial p(std::move(ring), std::move(vars));
    if (!Ops::is_zero(value)) p.terms_.emplace(Monomial::unit(p.nvars()), std::move(value));
    return p;
  }
  static Polynomial variable(Handle ring, VarNames vars, size_t i) {
    Polynomial p(ring, vars);
    if (i >= p.nvars()) throw std::invalid_argument("variable index out of range");
    p.terms_.emplace(Monomial::var(p.nvars(), i), Ops::one(ring));
    return p;
  }
  static Polynomial term(Handle ring, VarNames vars, Monomial m, C value) {
    Polynomial p(std::move(ring), std::move(vars));
    if (m.nvars() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (!Ops::is_zero(value)) p.terms_.emplace(std::move(m), std::move(value));
    return p;
  }

  const Handle& ring() const { return ring_; }
  const VarNames& vars() const { return vars_; }
  size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }
  C constant_value() const {
    if (terms_.empty()) return Ops::zero(ring_);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  uint64_t total_degree() const {
    uint64_t d = 0;
    for (auto& [m, c] : terms_)
      if (m.degree() > d) d = m.degree();
    return d;
  }

  // Leading (monomial, coefficient) under grevlex; terms_ iterates leading first.
  const std::pair<const Monomial, C>& leading() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  bool same_context(const Polynomial& o) const {
    return Ops::same_ring(ring_, o.ring_) &&
           (vars_ == o.vars_ || (vars_ && o.vars_ && *vars_ == *o.vars_));
  }

  void add_term(const Monomial& m, const C& c) {
    if (Ops::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      C s = it->second + c;
      if (Ops::is_zero(s))
        terms_.erase(it);
      else
        it->second = std::move(s);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_context(o);
    Polynomial r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(ring_, vars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator*(const Polynomial& o) const {
    check_context(o);
    Polynomial r(ring_, vars_);
    for (auto& [ma, ca] : terms_)
      for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial scaled(const C& c) const {
    Polynomial r(ring_, vars_);
    if (Ops::is_zero(c)) return r;
    for (auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
  }
  Polynomial shifted_by_monomial(const Monomial& m) const {
    Polynomial r(ring_, vars_);
    for (auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }
  Polynomial pow(uint64_t e) const {
    Polynomial r = constant(ring_, vars_, Ops::one(ring_));
    Polynomial b(*this);
    while (e) {
      if (e & 1) r = r * b;
      b = (e >>= 1) ? b * b : b;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_context(o) || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [m, c] : terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  // All nonzero coefficients in term order, duplicates retained.
  std::vector<C> coefficients() const {
    std::vector<C> out;
    out.reserve(terms_.size());
    for (auto& [m, c] : terms_) out.push_back(c);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::string cs = Ops::to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (m.is_unit()) {
        os << mag;
      } else {
        if (mag != "1") os << mag << "*";
        bool firstv = true;
        for (size_t i = 0; i < m.exps.size(); ++i) {
          if (!m.exps[i]) continue;
          if (!firstv) os << "*";
          firstv = false;
          os << (*vars_)[i];
          if (m.exps[i] > 1) os << "^" << m.exps[i];
        }
      }
    }
    return os.str();
  }

 private:
  void check_context(const Polynomial& o) const {
    if (!same_context(o)) throw std::invalid_argument("polynomial context mismatch");
  }

  Handle ring_;
  VarNames vars_;
  TermMap terms_;
};

// Exact composition: p with each variable replaced by the given image.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p, const std::vector<Polynomial<C>>& images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitute: image count mismatch");
  for (auto& im : images)
    if (!(Polynomial<C>::zero(p.ring(), p.vars()).same_context(im)))
      throw std::invalid_argument("substitute: context mismatch");
  Polynomial<C> acc = Polynomial<C>::zero(p.ring(), p.vars());
  // Per-variable power cache.
  std::vector<std::map<uint32_t, Polynomial<C>>> pows(p.nvars());
  for (auto& [m, c] : p.terms()) {
    Polynomial<C> t = Polynomial<C>::constant(p.ring(), p.vars(), c);
    for (size_t i = 0; i < m.exps.size(); ++i) {
      uint32_t e = m.exps[i];
      if (!e) continue;
      auto it = pows[i].find(e);
      if (it == pows[i].end()) it = pows[i].emplace(e, images[i].pow(e)).first;
      t = t * it->second;
    }
    acc = acc + t;
  }
  return acc;
}

// Divided-power (Hasse) derivative D^alpha: the coefficient of monomial
// beta contributes C(beta, alpha) * x^(beta-alpha), so the Taylor identity
// p(x+h) = sum_alpha D^alpha p * h^alpha holds over any coefficient ring.
template <class C>
Polynomial<C> hasse_derivative(const Polynomial<C>& p, const Monomial& alpha) {
  using Ops = coeff_ops<C>;
  if (alpha.nvars() != p.nvars()) throw std::invalid_argument("hasse_derivative: arity mismatch");
  Polynomial<C> r = Polynomial<C>::zero(p.ring(), p.vars());
  for (auto& [m, c] : p.terms()) {
    if (!alpha.divides(m)) continue;
    Int binom = 1;
    for (size_t i = 0; i < m.exps.size(); ++i) binom *= binomial(m.exps[i], alpha.exps[i]);
    r.add_term(m / alpha, c * Ops::from_int(p.ring(), binom));
  }
  return r;
}

template <class C>
struct TaylorContribution {
  Monomial alpha;
  Polynomial<C> derivative;   // D^alpha p
  Polynomial<C> shift_power;  // shifts^alpha
};

// All nonzero contributions of the divided-power Taylor expansion of
// p(x + shifts); their sum equals substitute(p, x + shifts), which is
// re-checked before returning.
template <class C>
std::vector<TaylorContribution<C>> taylor_shift(const Polynomial<C>& p,
                                                const std::vector<Polynomial<C>>& shifts) {
  if (shifts.size() != p.nvars()) throw std::invalid_argument("taylor_shift: shift count mismatch");
  size_t n = p.nvars();
  Monomial maxexp = Monomial::unit(n);
  for (auto& [m, c] : p.terms())
    for (size_t i = 0; i < n; ++i)
      if (m.exps[i] > maxexp.exps[i]) maxexp.exps[i] = m.exps[i];

  std::vector<TaylorContribution<C>> out;
  Monomial alpha = Monomial::unit(n);
  // Odometer over 0 <= alpha <= maxexp componentwise.
  while (true) {
    Polynomial<C> d = hasse_derivative(p, alpha);
    if (!d.is_zero()) {
      Polynomial<C> sp = Polynomial<C>::constant(p.ring(), p.vars(), coeff_ops<C>::one(p.ring()));
      for (size_t i = 0; i < n; ++i)
        if (alpha.exps[i]) sp = sp * shifts[i].pow(alpha.exps[i]);
      if (!sp.is_zero()) out.push_back({alpha, std::move(d), std::move(sp)});
    }
    size_t i = 0;
    while (i < n && alpha.exps[i] == maxexp.exps[i]) alpha.exps[i++] = 0;
    if (i == n) break;
    ++alpha.exps[i];
  }

  Polynomial<C> sum = Polynomial<C>::zero(p.ring(), p.vars());
  for (auto& tc : out) sum = sum + tc.derivative * tc.shift_power;
  std::vector<Polynomial<C>> xplus;
  for (size_t i = 0; i < n; ++i)
    xplus.push_back(Polynomial<C>::variable(p.ring(), p.vars(), i) + shifts[i]);
  if (!(sum == substitute(p, xplus)))
    throw std::logic_error("taylor_shift: internal identity check failed");
  return out;
}

// Rebuild a polynomial over a different coefficient type, coefficient by
// coefficient. fn maps C -> D.
template <class D, class C, class Fn>
Polynomial<D> map_coefficients(const Polynomial<C>& p, typename coeff_ops<D>::Handle ring,
                               Fn&& fn) {
  Polynomial<D> r(ring, p.vars());
  for (auto& [m, c] : p.terms()) r.add_term(m, fn(c));
  return r;
}

}  // namespace smoothred
