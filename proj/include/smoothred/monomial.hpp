#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace smoothred {

// Exponent vector of a power product; the variable count is fixed by context.
struct Monomial {
  std::vector<uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::vector<uint32_t> e) : exps(std::move(e)) {}
  static Monomial unit(size_t nvars) { return Monomial(std::vector<uint32_t>(nvars, 0)); }
  static Monomial var(size_t nvars, size_t i, uint32_t e = 1) {
    Monomial m = unit(nvars);
    m.exps[i] = e;
    return m;
  }

  size_t nvars() const { return exps.size(); }
  uint64_t degree() const {
    uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_unit() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }
  // Componentwise difference; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
    return r;
  }
  bool operator==(const Monomial& o) const = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.exps.size(); ++i)
    if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

// a > b in graded reverse lexicographic order.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // Same degree: the one whose last differing exponent is smaller wins.
  for (size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  }
  return false;
}

// Comparator placing the grevlex-leading monomial first in a map.
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

}  // namespace smoothred
