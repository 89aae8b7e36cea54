#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "smoothred/poly_ring.hpp"

namespace smoothred {

struct UnsupportedCoefficientRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Indexed relator list f_1..f_m; witness cofactor vectors refer to these
// indices, so zero relators are rejected to keep indexing stable.
struct IdealBasis {
  std::vector<Poly> relators;

  explicit IdealBasis(std::vector<Poly> rels);
  size_t size() const { return relators.size(); }
  const Poly& context_sample() const { return relators.at(0); }
};

// Buchberger-complete basis; each element carries a transformation row
// expressing it as a combination of the source relators.
struct GroebnerData {
  IdealBasis source;
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> rows;  // rows[k][j]: basis[k] = sum_j rows[k][j] * f_j
};

// target = sum_j cofactors[j] * f_j + remainder, exactly; re-verified by
// expansion before any witness is returned.
struct CofactorWitness {
  Poly target;
  std::vector<Poly> cofactors;
  Poly remainder;

  bool expands_exactly(const std::vector<Poly>& relators) const;
};

struct DivisionResult {
  std::vector<Poly> quotients;  // against the divisor list as given
  Poly remainder;
};

// Multivariate division: a term is reduced by a divisor when the divisor's
// leading monomial divides it and the leading coefficient divides exactly.
DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors);

GroebnerData groebner(const IdealBasis& basis);

CofactorWitness reduce_with_cofactors(const Poly& p, const GroebnerData& gb);

std::optional<std::vector<Poly>> membership(const Poly& p, const IdealBasis& basis);

enum class SolveStatus { Solved, CapExhausted, IntegralSolveFailed };

struct UnitSolveResult {
  SolveStatus status = SolveStatus::CapExhausted;
  // U: n x m with J*U + Id ≡ 0 mod the ideal (J is m x n).
  std::vector<std::vector<Poly>> U;
  // W[j][k]: cofactors with (J*U + Id)_{jk} = sum_l W[j][k][l] * f_l, exact.
  std::vector<std::vector<std::vector<Poly>>> W;
};

// Searches for a right inverse of J modulo the ideal, drawing U entries
// from normal-form monomials of degree <= cap (iterative deepening from 0).
UnitSolveResult solve_matrix_unit_mod_ideal(const std::vector<std::vector<Poly>>& J,
                                            const IdealBasis& basis, unsigned degree_cap);

}  // namespace smoothred
