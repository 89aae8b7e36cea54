#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smoothred/ideal.hpp"
#include "smoothred/poly_ring.hpp"

namespace smoothred {

// B = A[x_1..x_n]/(f_1..f_m).
class Presentation {
 public:
  Presentation(RingPtr base, std::vector<std::string> vars, std::vector<Poly> relators);

  const RingPtr& base() const { return base_; }
  const VarNames& vars() const { return vars_; }
  size_t nvars() const { return vars_->size(); }
  const std::vector<Poly>& relators() const { return relators_; }
  size_t nrelators() const { return relators_.size(); }

  Poly zero_poly() const { return Poly::zero(base_, vars_); }
  Poly var_poly(size_t i) const { return Poly::variable(base_, vars_, i); }

 private:
  RingPtr base_;
  VarNames vars_;
  std::vector<Poly> relators_;
};

// Witness triple (g, u, h) for a section of P/I^2 -> P/I:
//   (C1)  g_i = sum_j u_ij * f_j
//   (C2)  f_j(x_1+g_1, ..., x_n+g_n) = sum_{k,l} h_jkl * f_k * f_l
// Both are exact equalities in the polynomial ring P, not mod-I statements.
class SmoothnessCertificate {
 public:
  using HKey = std::array<size_t, 3>;  // (j, k, l), zero-based

  SmoothnessCertificate(size_t n, size_t m, std::vector<Poly> g,
                        std::vector<std::vector<Poly>> u, std::map<HKey, Poly> h);

  size_t nvars() const { return n_; }
  size_t nrelators() const { return m_; }
  const std::vector<Poly>& g() const { return g_; }
  const std::vector<std::vector<Poly>>& u() const { return u_; }
  const std::map<HKey, Poly>& h() const { return h_; }
  // h_{jkl}, defaulting to zero for absent entries.
  Poly h_entry(size_t j, size_t k, size_t l, const Poly& zero) const;

 private:
  size_t n_, m_;
  std::vector<Poly> g_;                 // n entries
  std::vector<std::vector<Poly>> u_;    // n x m
  std::map<HKey, Poly> h_;              // sparse, absent = 0
};

struct IdentityCheck {
  std::string name;  // e.g. "C1[2]"
  bool pass = false;
  Poly discrepancy;  // lhs - rhs when failing, zero otherwise
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  double elapsed_seconds = 0.0;
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Entry (j,i) is the first Hasse derivative of f_j in x_i (which equals the
// ordinary partial derivative).
std::vector<std::vector<Poly>> jacobian(const Presentation& pres);

// Pure expansion of C1 and C2; no Groebner machinery, so this works over
// every supported base ring.
VerificationReport verify_certificate(const Presentation& pres, const SmoothnessCertificate& cert);

struct Inconclusive {
  std::string reason;
};

using SynthesisResult = std::variant<SmoothnessCertificate, Inconclusive>;

// Builds a certificate from a Jacobian right inverse mod I plus
// divided-power Taylor assembly of h. Inconclusive is never a claim of
// non-smoothness. The returned certificate has passed verify_certificate.
SynthesisResult synthesize_certificate(const Presentation& pres, unsigned degree_cap);

}  // namespace smoothred
