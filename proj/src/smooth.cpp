#include "smoothred/smooth.hpp"

#include <chrono>
#include <set>

namespace smoothred {

Presentation::Presentation(RingPtr base, std::vector<std::string> vars,
                           std::vector<Poly> relators)
    : base_(std::move(base)), vars_(make_vars(std::move(vars))) {
  std::set<std::string> seen;
  for (auto& v : *vars_)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  for (auto& f : relators) {
    if (f.is_zero()) throw std::invalid_argument("presentation relators must be nonzero");
    if (f.nvars() != vars_->size()) throw std::invalid_argument("relator arity mismatch");
    Poly fb(base_, vars_);
    for (auto& [m, c] : f.terms()) fb.add_term(m, c);
    relators_.push_back(std::move(fb));
  }
}

SmoothnessCertificate::SmoothnessCertificate(size_t n, size_t m, std::vector<Poly> g,
                                             std::vector<std::vector<Poly>> u,
                                             std::map<HKey, Poly> h)
    : n_(n), m_(m), g_(std::move(g)), u_(std::move(u)) {
  if (g_.size() != n_) throw std::invalid_argument("certificate g has wrong length");
  if (u_.size() != n_) throw std::invalid_argument("certificate u has wrong row count");
  for (auto& row : u_)
    if (row.size() != m_) throw std::invalid_argument("certificate u has wrong column count");
  for (auto& [key, p] : h) {
    if (key[0] >= m_ || key[1] >= m_ || key[2] >= m_)
      throw std::invalid_argument("certificate h index out of bounds");
    if (!p.is_zero()) h_.emplace(key, p);
  }
}

Poly SmoothnessCertificate::h_entry(size_t j, size_t k, size_t l, const Poly& zero) const {
  auto it = h_.find({j, k, l});
  return it == h_.end() ? zero : it->second;
}

std::vector<std::vector<Poly>> jacobian(const Presentation& pres) {
  std::vector<std::vector<Poly>> J;
  size_t n = pres.nvars();
  for (auto& f : pres.relators()) {
    std::vector<Poly> row;
    for (size_t i = 0; i < n; ++i)
      row.push_back(hasse_derivative(f, Monomial::var(n, i)));
    J.push_back(std::move(row));
  }
  return J;
}

VerificationReport verify_certificate(const Presentation& pres,
                                      const SmoothnessCertificate& cert) {
  if (cert.nvars() != pres.nvars() || cert.nrelators() != pres.nrelators())
    throw std::invalid_argument("certificate shape does not match presentation");
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  const auto& f = pres.relators();
  const size_t n = pres.nvars();
  const size_t m = pres.nrelators();
  Poly zero = pres.zero_poly();

  for (size_t i = 0; i < n; ++i) {
    Poly rhs = zero;
    for (size_t j = 0; j < m; ++j) rhs = rhs + cert.u()[i][j] * f[j];
    Poly d = cert.g()[i] - rhs;
    rep.checks.push_back({"C1[" + std::to_string(i + 1) + "]", d.is_zero(), d});
  }

  std::vector<Poly> shifted;
  for (size_t i = 0; i < n; ++i) shifted.push_back(pres.var_poly(i) + cert.g()[i]);
  for (size_t j = 0; j < m; ++j) {
    Poly lhs = substitute(f[j], shifted);
    Poly rhs = zero;
    for (auto& [key, p] : cert.h())
      if (key[0] == j) rhs = rhs + p * f[key[1]] * f[key[2]];
    Poly d = lhs - rhs;
    rep.checks.push_back({"C2[" + std::to_string(j + 1) + "]", d.is_zero(), d});
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SynthesisResult synthesize_certificate(const Presentation& pres, unsigned degree_cap) {
  const size_t n = pres.nvars();
  const size_t m = pres.nrelators();
  Poly zero = pres.zero_poly();

  if (m == 0) {
    SmoothnessCertificate cert(n, 0, std::vector<Poly>(n, zero),
                               std::vector<std::vector<Poly>>(n), {});
    return cert;
  }

  auto J = jacobian(pres);
  IdealBasis basis(pres.relators());
  UnitSolveResult solve = solve_matrix_unit_mod_ideal(J, basis, degree_cap);
  if (solve.status == SolveStatus::CapExhausted)
    return Inconclusive{"no Jacobian right inverse found up to degree " +
                        std::to_string(degree_cap) + "; not a proof of non-smoothness"};
  if (solve.status == SolveStatus::IntegralSolveFailed)
    return Inconclusive{
        "IntegralSolveFailed: a rational right inverse exists within the degree cap "
        "but the integral solve found none"};

  const auto& f = pres.relators();
  std::vector<Poly> g(n, zero);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < m; ++k) g[i] = g[i] + solve.U[i][k] * f[k];

  // h accumulation with canonical k <= l slot ordering.
  std::map<SmoothnessCertificate::HKey, Poly> h;
  auto add_h = [&](size_t j, size_t k, size_t l, const Poly& p) {
    if (p.is_zero()) return;
    SmoothnessCertificate::HKey key{j, std::min(k, l), std::max(k, l)};
    auto it = h.find(key);
    if (it == h.end()) {
      h.emplace(key, p);
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) h.erase(it);
    }
  };

  // First-order Taylor part: f_j + sum_i D^{e_i}f_j * g_i
  //   = sum_k (delta_jk + (JU)_jk) f_k = sum_k sum_l W[j][k][l] f_l f_k.
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k)
      for (size_t l = 0; l < m; ++l) add_h(j, l, k, solve.W[j][k][l]);

  // Each higher contribution D^alpha f_j * g^alpha (|alpha| >= 2) is
  // rewritten through the first two g factors via C1.
  for (size_t j = 0; j < m; ++j) {
    for (auto& tc : taylor_shift(f[j], g)) {
      if (tc.alpha.degree() < 2) continue;
      Monomial rest_alpha = tc.alpha;
      size_t a = 0;
      while (rest_alpha.exps[a] == 0) ++a;
      --rest_alpha.exps[a];
      size_t b = 0;
      while (rest_alpha.exps[b] == 0) ++b;
      --rest_alpha.exps[b];
      Poly base = tc.derivative;
      for (size_t i = 0; i < n; ++i)
        if (rest_alpha.exps[i]) base = base * g[i].pow(rest_alpha.exps[i]);
      for (size_t k = 0; k < m; ++k) {
        if (solve.U[a][k].is_zero()) continue;
        for (size_t l = 0; l < m; ++l) {
          if (solve.U[b][l].is_zero()) continue;
          add_h(j, k, l, base * solve.U[a][k] * solve.U[b][l]);
        }
      }
    }
  }

  SmoothnessCertificate cert(n, m, std::move(g), solve.U, std::move(h));
  VerificationReport rep = verify_certificate(pres, cert);
  if (!rep.pass())
    throw std::logic_error("internal error: synthesized certificate failed verification");
  return cert;
}

}  // namespace smoothred
