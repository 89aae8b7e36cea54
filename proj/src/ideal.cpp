#include "smoothred/ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace smoothred {

namespace {

bool unit_leading(const Poly& p) {
  const RingElement& lc = p.leading().second;
  return lc.is_one() || (-lc).is_one();
}

void require_supported_ring(const std::vector<Poly>& relators) {
  if (relators.empty()) return;
  const RingPtr& ring = relators[0].ring();
  if (ring->is_field()) return;
  if (ring->kind() == RingKind::Integers) {
    for (auto& r : relators)
      if (!unit_leading(r))
        throw UnsupportedCoefficientRing(
            "over ZZ only relators with unit leading coefficient are supported");
    return;
  }
  throw UnsupportedCoefficientRing("coefficient ring must be QQ, ZZ/p or ZZ: " + ring->name());
}

Int coeff_lcm(const Int& a, const Int& b) {
  Int g = boost::multiprecision::gcd(a, b);
  Int l = a / g * b;
  return l < 0 ? Int(-l) : l;
}

}  // namespace

IdealBasis::IdealBasis(std::vector<Poly> rels) : relators(std::move(rels)) {
  for (size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].is_zero()) throw std::invalid_argument("zero relator rejected");
    if (i && !relators[i].same_context(relators[0]))
      throw std::invalid_argument("relator context mismatch");
  }
}

bool CofactorWitness::expands_exactly(const std::vector<Poly>& relators) const {
  Poly acc = remainder;
  for (size_t j = 0; j < relators.size(); ++j) acc = acc + cofactors[j] * relators[j];
  return acc == target;
}

DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors) {
  DivisionResult res;
  res.remainder = Poly::zero(p.ring(), p.vars());
  res.quotients.assign(divisors.size(), res.remainder);
  Poly work = p;
  while (!work.is_zero()) {
    const auto& [lm, lc] = work.leading();
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const auto& [dm, dc] = divisors[i].leading();
      if (!dm.divides(lm)) continue;
      auto q = ring_div_exact(lc, dc);
      if (!q) continue;
      Poly qterm = Poly::term(p.ring(), p.vars(), lm / dm, *q);
      res.quotients[i] = res.quotients[i] + qterm;
      work = work - qterm * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Poly lt = Poly::term(p.ring(), p.vars(), lm, lc);
      res.remainder = res.remainder + lt;
      work = work - lt;
    }
  }
  return res;
}

GroebnerData groebner(const IdealBasis& basis) {
  require_supported_ring(basis.relators);
  GroebnerData gd{basis, {}, {}};
  if (basis.relators.empty()) return gd;

  const Poly& sample = basis.relators[0];
  const RingPtr& ring = sample.ring();
  const bool field = ring->is_field();
  const size_t m = basis.relators.size();
  auto zero = Poly::zero(ring, sample.vars());

  std::vector<Poly>& G = gd.basis;
  std::vector<std::vector<Poly>>& rows = gd.rows;
  G = basis.relators;
  for (size_t i = 0; i < m; ++i) {
    std::vector<Poly> row(m, zero);
    row[i] = Poly::constant(ring, sample.vars(), RingElement::one(ring));
    rows.push_back(std::move(row));
  }

  // Normal strategy: S-pairs by lcm degree, then index order.
  using PairKey = std::tuple<uint64_t, size_t, size_t>;
  std::set<PairKey> pending;
  auto push_pairs = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      pending.insert({lcm(G[i].leading().first, G[upto].leading().first).degree(), i, upto});
  };
  for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    const auto& [mi, ci] = G[i].leading();
    const auto& [mj, cj] = G[j].leading();
    if (coprime(mi, mj)) continue;  // product criterion
    Monomial l = lcm(mi, mj);

    RingElement ai = RingElement::one(ring), aj = RingElement::one(ring);
    if (field) {
      ai = *ring_inverse(ci).value;
      aj = *ring_inverse(cj).value;
    } else {
      Int c = coeff_lcm(ci.int_value(), cj.int_value());
      ai = RingElement::from_int(ring, c / ci.int_value());
      aj = RingElement::from_int(ring, c / cj.int_value());
    }
    Poly ti = Poly::term(ring, sample.vars(), l / mi, ai);
    Poly tj = Poly::term(ring, sample.vars(), l / mj, aj);
    Poly s = ti * G[i] - tj * G[j];
    if (s.is_zero()) continue;

    DivisionResult dr = divide(s, G);
    if (dr.remainder.is_zero()) continue;

    std::vector<Poly> row(m, zero);
    for (size_t k = 0; k < m; ++k) row[k] = ti * rows[i][k] - tj * rows[j][k];
    for (size_t k = 0; k < G.size(); ++k)
      if (!dr.quotients[k].is_zero())
        for (size_t t = 0; t < m; ++t) row[t] = row[t] - dr.quotients[k] * rows[k][t];
    G.push_back(dr.remainder);
    rows.push_back(std::move(row));
    push_pairs(G.size() - 1);
  }

  if (field) {
    // Inter-reduce to the reduced basis, keeping rows in sync.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < G.size(); ++i) {
        std::vector<Poly> others;
        std::vector<size_t> idx;
        for (size_t k = 0; k < G.size(); ++k)
          if (k != i) {
            others.push_back(G[k]);
            idx.push_back(k);
          }
        DivisionResult dr = divide(G[i], others);
        if (dr.remainder == G[i]) continue;
        changed = true;
        if (dr.remainder.is_zero()) {
          G.erase(G.begin() + i);
          rows.erase(rows.begin() + i);
          --i;
          continue;
        }
        for (size_t k = 0; k < others.size(); ++k)
          if (!dr.quotients[k].is_zero())
            for (size_t t = 0; t < m; ++t)
              rows[i][t] = rows[i][t] - dr.quotients[k] * rows[idx[k]][t];
        G[i] = dr.remainder;
      }
    }
    for (size_t i = 0; i < G.size(); ++i) {
      RingElement inv = *ring_inverse(G[i].leading().second).value;
      G[i] = G[i].scaled(inv);
      Poly scale = Poly::constant(ring, sample.vars(), inv);
      for (size_t t = 0; t < m; ++t) rows[i][t] = scale * rows[i][t];
    }
    // Deterministic order: ascending leading monomial.
    std::vector<size_t> perm(G.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      return grevlex_greater(G[b].leading().first, G[a].leading().first);
    });
    std::vector<Poly> G2;
    std::vector<std::vector<Poly>> R2;
    for (size_t i : perm) {
      G2.push_back(G[i]);
      R2.push_back(rows[i]);
    }
    G = std::move(G2);
    rows = std::move(R2);
  }

  for (size_t i = 0; i < G.size(); ++i) {
    Poly acc = zero;
    for (size_t k = 0; k < m; ++k) acc = acc + rows[i][k] * basis.relators[k];
    if (!(acc == G[i])) throw std::logic_error("groebner: transformation row expansion mismatch");
  }
  return gd;
}

CofactorWitness reduce_with_cofactors(const Poly& p, const GroebnerData& gb) {
  CofactorWitness w;
  w.target = p;
  Poly zero = Poly::zero(p.ring(), p.vars());
  w.cofactors.assign(gb.source.relators.size(), zero);
  if (gb.basis.empty()) {
    w.remainder = p;
    return w;
  }
  if (!p.same_context(gb.basis[0])) throw std::invalid_argument("reduce: context mismatch");
  DivisionResult dr = divide(p, gb.basis);
  w.remainder = dr.remainder;
  for (size_t k = 0; k < gb.basis.size(); ++k)
    if (!dr.quotients[k].is_zero())
      for (size_t j = 0; j < w.cofactors.size(); ++j)
        w.cofactors[j] = w.cofactors[j] + dr.quotients[k] * gb.rows[k][j];
  if (!w.expands_exactly(gb.source.relators))
    throw std::logic_error("reduce_with_cofactors: witness expansion mismatch");
  return w;
}

std::optional<std::vector<Poly>> membership(const Poly& p, const IdealBasis& basis) {
  GroebnerData gb = groebner(basis);
  CofactorWitness w = reduce_with_cofactors(p, gb);
  if (w.remainder.is_zero()) return w.cofactors;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Linear solve for a right inverse of J modulo the ideal.

namespace {

// Monomials of degree <= cap in nvars variables, none divisible by a
// leading monomial of the basis; ascending degree, grevlex-ascending within.
std::vector<Monomial> normal_form_monomials(size_t nvars, unsigned cap,
                                            const std::vector<Monomial>& lms) {
  std::vector<Monomial> out;
  std::vector<uint32_t> e(nvars, 0);
  auto emit = [&](auto&& self, size_t pos, unsigned left) -> void {
    if (pos == nvars) {
      Monomial m(e);
      for (auto& lm : lms)
        if (lm.divides(m)) return;
      out.push_back(std::move(m));
      return;
    }
    for (uint32_t v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
    e[pos] = 0;
  };
  emit(emit, 0, cap);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_greater(b, a);
  });
  return out;
}

// Gaussian elimination over a field; returns a particular solution with
// free unknowns set to zero, or nullopt when inconsistent.
std::optional<std::vector<RingElement>> field_solve(std::vector<std::vector<RingElement>> M,
                                                    size_t ncols, const RingPtr& ring) {
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < ncols && rank < M.size(); ++col) {
    size_t sel = M.size();
    for (size_t r = rank; r < M.size(); ++r)
      if (!M[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == M.size()) continue;
    std::swap(M[rank], M[sel]);
    RingElement inv = *ring_inverse(M[rank][col]).value;
    for (auto& v : M[rank]) v = v * inv;
    for (size_t r = 0; r < M.size(); ++r) {
      if (r == rank || M[r][col].is_zero()) continue;
      RingElement f = M[r][col];
      for (size_t c = col; c <= ncols; ++c) M[r][c] = M[r][c] - f * M[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < M.size(); ++r)
    if (!M[r][ncols].is_zero()) return std::nullopt;
  std::vector<RingElement> x(ncols, RingElement::zero(ring));
  for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = M[r][ncols];
  return x;
}

// Smith normal form solver for A x = b over ZZ (A given as dense rows).
// Returns nullopt when no integer solution exists.
std::optional<std::vector<Int>> integer_solve(std::vector<std::vector<Int>> A,
                                              std::vector<Int> b, size_t ncols) {
  size_t nrows = A.size();
  // Column operations are tracked in V so x = V * y can be recovered.
  std::vector<std::vector<Int>> V(ncols, std::vector<Int>(ncols, 0));
  for (size_t i = 0; i < ncols; ++i) V[i][i] = 1;

  size_t t = 0;
  while (t < nrows && t < ncols) {
    // Find a nonzero pivot in the remaining block.
    size_t pr = nrows, pc = ncols;
    for (size_t r = t; r < nrows && pr == nrows; ++r)
      for (size_t c = t; c < ncols; ++c)
        if (A[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == nrows) break;
    std::swap(A[t], A[pr]);
    std::swap(b[t], b[pr]);
    for (size_t r = 0; r < nrows; ++r) std::swap(A[r][t], A[r][pc]);
    std::swap(V[t], V[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t r = t + 1; r < nrows; ++r) {
        if (A[r][t] == 0) continue;
        Int q = A[r][t] / A[t][t];
        for (size_t c = t; c < ncols; ++c) A[r][c] -= q * A[t][c];
        b[r] -= q * b[t];
        if (A[r][t] != 0) {
          std::swap(A[t], A[r]);
          std::swap(b[t], b[r]);
          clean = false;
        }
      }
      for (size_t c = t + 1; c < ncols; ++c) {
        if (A[t][c] == 0) continue;
        Int q = A[t][c] / A[t][t];
        for (size_t r = 0; r < nrows; ++r) A[r][c] -= q * A[r][t];
        for (size_t r = 0; r < ncols; ++r) V[c][r] -= q * V[t][r];
        if (A[t][c] != 0) {
          for (size_t r = 0; r < nrows; ++r) std::swap(A[r][t], A[r][c]);
          std::swap(V[t], V[c]);
          clean = false;
        }
      }
    }
    ++t;
  }
  // A is now diagonal in the leading t x t block (up to stray zero rows).
  std::vector<Int> y(ncols, 0);
  for (size_t r = 0; r < nrows; ++r) {
    Int diag = (r < ncols) ? A[r][r] : Int(0);
    if (diag == 0) {
      if (b[r] != 0) return std::nullopt;
      continue;
    }
    if (b[r] % diag != 0) return std::nullopt;
    y[r] = b[r] / diag;
  }
  std::vector<Int> x(ncols, 0);
  for (size_t c = 0; c < ncols; ++c)
    for (size_t k = 0; k < ncols; ++k) x[k] += V[c][k] * y[c];
  return x;
}

}  // namespace

UnitSolveResult solve_matrix_unit_mod_ideal(const std::vector<std::vector<Poly>>& J,
                                            const IdealBasis& basis, unsigned degree_cap) {
  UnitSolveResult res;
  const size_t m = J.size();
  const size_t n = m ? J[0].size() : 0;
  if (m == 0) {
    res.status = SolveStatus::Solved;
    return res;
  }
  const Poly& sample = basis.relators.empty() ? J[0][0] : basis.relators[0];
  const RingPtr& ring = sample.ring();
  const VarNames& vars = sample.vars();
  const bool field = ring->is_field();
  if (!field && ring->kind() != RingKind::Integers)
    throw UnsupportedCoefficientRing("solve requires QQ, ZZ/p or ZZ: " + ring->name());

  GroebnerData gb = groebner(basis);
  std::vector<Monomial> lms;
  for (auto& g : gb.basis) lms.push_back(g.leading().first);
  Poly one = Poly::constant(ring, vars, RingElement::one(ring));
  Poly nf_one = divide(one, gb.basis).remainder;

  bool rational_hit = false;
  for (unsigned cap = 0; cap <= degree_cap; ++cap) {
    std::vector<Monomial> cand = normal_form_monomials(vars->size(), cap, lms);
    if (cand.empty()) continue;
    const size_t per_entry = cand.size();
    const size_t nunknowns = n * m * per_entry;

    // nf[j][i][c] = NF(J[j][i] * cand[c]).
    std::vector<std::vector<std::vector<Poly>>> nf(m);
    for (size_t j = 0; j < m; ++j) {
      nf[j].resize(n);
      for (size_t i = 0; i < n; ++i)
        for (auto& c : cand)
          nf[j][i].push_back(divide(J[j][i].shifted_by_monomial(c), gb.basis).remainder);
    }

    auto unknown_index = [&](size_t i, size_t k, size_t c) {
      return (i * m + k) * per_entry + c;
    };

    // One equation per (j, k, monomial of the residual).
    struct Eq {
      std::map<size_t, RingElement> lhs;
      RingElement rhs;
      explicit Eq(const RingPtr& r) : rhs(RingElement::zero(r)) {}
    };
    std::vector<Eq> eqs;
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        std::map<Monomial, Eq, GrevlexDesc> roweqs;
        auto eq_for = [&](const Monomial& mo) -> Eq& {
          auto it = roweqs.find(mo);
          if (it == roweqs.end()) it = roweqs.emplace(mo, Eq(ring)).first;
          return it->second;
        };
        for (size_t i = 0; i < n; ++i)
          for (size_t c = 0; c < per_entry; ++c)
            for (auto& [mo, co] : nf[j][i][c].terms()) {
              Eq& e = eq_for(mo);
              size_t u = unknown_index(i, k, c);
              auto it = e.lhs.find(u);
              if (it == e.lhs.end())
                e.lhs.emplace(u, co);
              else
                it->second = it->second + co;
            }
        if (j == k)
          for (auto& [mo, co] : nf_one.terms()) {
            Eq& e = eq_for(mo);
            e.rhs = e.rhs - co;
          }
        for (auto& [mo, e] : roweqs) eqs.push_back(std::move(e));
      }

    std::optional<std::vector<RingElement>> sol;
    if (field) {
      std::vector<std::vector<RingElement>> M;
      for (auto& e : eqs) {
        std::vector<RingElement> row(nunknowns + 1, RingElement::zero(ring));
        for (auto& [u, co] : e.lhs) row[u] = co;
        row[nunknowns] = e.rhs;
        M.push_back(std::move(row));
      }
      sol = field_solve(std::move(M), nunknowns, ring);
    } else {
      std::vector<std::vector<Int>> A;
      std::vector<Int> b;
      for (auto& e : eqs) {
        std::vector<Int> row(nunknowns, 0);
        for (auto& [u, co] : e.lhs) row[u] = co.int_value();
        A.push_back(std::move(row));
        b.push_back(e.rhs.int_value());
      }
      auto zi = integer_solve(A, b, nunknowns);
      if (zi) {
        std::vector<RingElement> x;
        for (auto& v : *zi) x.push_back(RingElement::from_int(ring, v));
        sol = std::move(x);
      } else {
        // Distinguish "no solution at this degree" from an integrality
        // obstruction: check the rational relaxation.
        std::vector<std::vector<RingElement>> M;
        RingPtr qq = RingDescriptor::rationals();
        for (auto& e : eqs) {
          std::vector<RingElement> row(nunknowns + 1, RingElement::zero(qq));
          for (auto& [u, co] : e.lhs) row[u] = RingElement::from_int(qq, co.int_value());
          row[nunknowns] = RingElement::from_int(qq, e.rhs.int_value());
          M.push_back(std::move(row));
        }
        if (field_solve(std::move(M), nunknowns, qq)) rational_hit = true;
      }
    }

    if (!sol) continue;

    res.U.assign(n, std::vector<Poly>(m, Poly::zero(ring, vars)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < m; ++k) {
        Poly entry = Poly::zero(ring, vars);
        for (size_t c = 0; c < per_entry; ++c)
          entry.add_term(cand[c], (*sol)[unknown_index(i, k, c)]);
        res.U[i][k] = std::move(entry);
      }

    res.W.assign(m, std::vector<std::vector<Poly>>(m));
    bool ok = true;
    for (size_t j = 0; j < m && ok; ++j)
      for (size_t k = 0; k < m && ok; ++k) {
        Poly e = (j == k) ? one : Poly::zero(ring, vars);
        for (size_t i = 0; i < n; ++i) e = e + J[j][i] * res.U[i][k];
        CofactorWitness w = reduce_with_cofactors(e, gb);
        if (!w.remainder.is_zero()) {
          ok = false;
          break;
        }
        res.W[j][k] = w.cofactors;
      }
    if (!ok) throw std::logic_error("unit solve: residual failed to reduce to zero");
    res.status = SolveStatus::Solved;
    return res;
  }

  res.status = rational_hit ? SolveStatus::IntegralSolveFailed : SolveStatus::CapExhausted;
  return res;
}

}  // namespace smoothred
