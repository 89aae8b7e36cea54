#include "smoothred/noeth.hpp"

namespace smoothred {

std::vector<RingElement> extract_generators(const Presentation& pres,
                                            const SmoothnessCertificate& cert) {
  if (!verify_certificate(pres, cert).pass())
    throw InvalidCertificate("certificate does not verify; refusing to reduce");

  std::vector<RingElement> gens;
  auto add = [&](const RingElement& c) {
    for (auto& have : gens)
      if (have == c) return;
    gens.push_back(c);
  };
  for (auto& f : pres.relators())
    for (auto& c : f.coefficients()) add(c);
  for (auto& row : cert.u())
    for (auto& p : row)
      for (auto& c : p.coefficients()) add(c);
  for (auto& [key, p] : cert.h())
    for (auto& c : p.coefficients()) add(c);
  return gens;
}

namespace {

SubringPoly descend(const Poly& p, const SubringPtr& view) {
  return map_coefficients<SubringElement>(p, view, [&](const RingElement& c) {
    auto idx = view->index_of_generator(c);
    if (!idx) throw std::logic_error("descent: coefficient is not a recorded generator");
    return SubringElement::generator(view, *idx);
  });
}

Poly evaluate_up(const SubringPoly& p, const RingPtr& ambient) {
  return map_coefficients<RingElement>(p, ambient,
                                       [](const SubringElement& c) { return c.image(); });
}

}  // namespace

NoetherianReduction build_reduction(const Presentation& pres, const SmoothnessCertificate& cert) {
  std::vector<RingElement> gens = extract_generators(pres, cert);
  SubringPtr view = SubringView::generated(pres.base(), gens);

  NoetherianReduction red{pres, cert, view, pres.vars(), {}, {}, {}, {}};
  for (auto& f : pres.relators()) red.relators0.push_back(descend(f, view));
  for (auto& row : cert.u()) {
    std::vector<SubringPoly> r0;
    for (auto& p : row) r0.push_back(descend(p, view));
    red.u0.push_back(std::move(r0));
  }
  for (auto& [key, p] : cert.h()) red.h0.emplace(key, descend(p, view));

  // g descends through C1: g0_i = sum_j u0_ij f0_j.
  SubringPoly zero = SubringPoly::zero(view, pres.vars());
  for (size_t i = 0; i < pres.nvars(); ++i) {
    SubringPoly acc = zero;
    for (size_t j = 0; j < pres.nrelators(); ++j)
      acc = acc + red.u0[i][j] * red.relators0[j];
    red.g0.push_back(std::move(acc));
  }
  return red;
}

ReductionReport verify_reduction(const NoetherianReduction& red) {
  ReductionReport rep;
  rep.generator_count = red.coeff_subring->generator_count();
  const RingPtr& ambient = red.coeff_subring->ambient();
  const Presentation& pres = red.source;
  const SmoothnessCertificate& cert = red.source_cert;
  const size_t n = pres.nvars();
  const size_t m = pres.nrelators();

  // R1: coefficientwise evaluation recovers the source data, and every
  // cached image matches a fresh evaluation of its expression.
  {
    bool ok = true;
    std::string detail;
    auto check_poly = [&](const SubringPoly& p0, const Poly& src, const std::string& what) {
      for (auto& [mo, c] : p0.terms())
        if (!c.invariant_holds()) {
          ok = false;
          detail = what + ": cached image differs from expression value";
          return;
        }
      if (!(evaluate_up(p0, ambient) == src)) {
        ok = false;
        detail = what + ": evaluation does not recover the source polynomial";
      }
    };
    for (size_t j = 0; j < m && ok; ++j)
      check_poly(red.relators0[j], pres.relators()[j], "f" + std::to_string(j + 1));
    for (size_t i = 0; i < n && ok; ++i)
      check_poly(red.g0[i], cert.g()[i], "g" + std::to_string(i + 1));
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < m && ok; ++j)
        check_poly(red.u0[i][j], cert.u()[i][j],
                   "u" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    if (ok) {
      Poly zero = pres.zero_poly();
      for (auto& [key, p0] : red.h0) {
        check_poly(p0, cert.h_entry(key[0], key[1], key[2], zero),
                   "h" + std::to_string(key[0] + 1) + "," + std::to_string(key[1] + 1) + "," +
                       std::to_string(key[2] + 1));
        if (!ok) break;
      }
    }
    rep.checks.push_back({"R1 descent well-formed", ok, detail});
  }

  // R2: C1 over A0.
  bool r2 = true;
  {
    SubringPoly zero = SubringPoly::zero(red.coeff_subring, red.vars);
    for (size_t i = 0; i < n; ++i) {
      SubringPoly rhs = zero;
      for (size_t j = 0; j < m; ++j) rhs = rhs + red.u0[i][j] * red.relators0[j];
      if (!((red.g0[i] - rhs).is_zero())) r2 = false;
    }
    rep.checks.push_back({"R2 C1 over A0 (g_i = sum u_ij f_j in I0)", r2, ""});
  }

  // R3: C2 over A0, i.e. sigma(f0_j) in I0^2.
  {
    bool r3 = true;
    std::vector<SubringPoly> shifted;
    for (size_t i = 0; i < n; ++i)
      shifted.push_back(SubringPoly::variable(red.coeff_subring, red.vars, i) + red.g0[i]);
    SubringPoly zero = SubringPoly::zero(red.coeff_subring, red.vars);
    for (size_t j = 0; j < m; ++j) {
      SubringPoly lhs = substitute(red.relators0[j], shifted);
      SubringPoly rhs = zero;
      for (auto& [key, p0] : red.h0)
        if (key[0] == j) rhs = rhs + p0 * red.relators0[key[1]] * red.relators0[key[2]];
      if (!((lhs - rhs).is_zero())) r3 = false;
    }
    rep.checks.push_back({"R3 C2 over A0 (sigma(I0) in I0^2)", r3, ""});
  }

  // R4: q0 s0 p0(x_i) = p0(x_i). Discharged by the R2 witness: p0(g_i) = 0
  // because g_i = sum u_ij f_j lies in I0.
  rep.checks.push_back({"R4 section law q0 s0 p0 = p0 on variable classes", r2,
                        r2 ? "via the R2 membership witness g_i in I0" : "R2 witness missing"});

  // R5: base change recovers B: evaluated descended relators are
  // byte-identical to the source relators.
  {
    bool r5 = true;
    for (size_t j = 0; j < m; ++j)
      if (evaluate_up(red.relators0[j], ambient).to_string() != pres.relators()[j].to_string())
        r5 = false;
    rep.checks.push_back({"R5 base change A (x)_{A0} B0 = B on relators", r5, ""});
  }

  rep.corollary_line =
      "Conclusion: A -> B is flat, being the base change along A0 -> A of the smooth "
      "homomorphism A0 -> B0 of noetherian rings (A0 is a finite-type Z-algebra, "
      "noetherian by the Hilbert basis theorem; flatness cited, not computed).";
  return rep;
}

}  // namespace smoothred
