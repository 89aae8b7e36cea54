#pragma once

#include <map>
#include <string>
#include <vector>

#include "smoothred/smooth.hpp"
#include "smoothred/subring.hpp"

namespace smoothred {

struct InvalidCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The descended data: A0 generated by the coefficients of f, u, h;
// P0 = A0[x], I0 = (f0_j), B0 = P0/I0; certificate and embeddings.
struct NoetherianReduction {
  Presentation source;
  SmoothnessCertificate source_cert;

  SubringPtr coeff_subring;  // A0, injectively embedded in A
  VarNames vars;             // unchanged variables of P0

  std::vector<SubringPoly> relators0;                              // f0_j
  std::vector<SubringPoly> g0;                                     // n entries
  std::vector<std::vector<SubringPoly>> u0;                        // n x m
  std::map<SmoothnessCertificate::HKey, SubringPoly> h0;           // sparse

  // Embedding A0 -> A is generator image lookup; B0 -> B is the identity
  // on the variables, induced by P0 ⊂ P.
  const std::vector<RingElement>& generator_images() const {
    return coeff_subring->generators();
  }
};

struct ReductionCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReductionReport {
  size_t generator_count = 0;
  std::vector<ReductionCheck> checks;  // R1..R5 in order
  std::string corollary_line;
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// All nonzero coefficients of f_1..f_m, then u, then h, each polynomial in
// term order; deduplicated, first occurrence kept. The certificate is
// verified first and InvalidCertificate is thrown on failure.
std::vector<RingElement> extract_generators(const Presentation& pres,
                                            const SmoothnessCertificate& cert);

NoetherianReduction build_reduction(const Presentation& pres, const SmoothnessCertificate& cert);

// Runs the five descent checks:
//   R1 coefficientwise evaluation A0 -> A recovers f, g, u, h exactly
//   R2 C1 over A0
//   R3 C2 over A0 (sigma(I0) ⊆ I0^2)
//   R4 section law q0∘s0∘p0 = p0 on the variable classes, via the R2 witness
//   R5 base change: evaluated descended relators byte-identical to source
ReductionReport verify_reduction(const NoetherianReduction& red);

}  // namespace smoothred
