#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glc/cyclotomic.hpp"

namespace glc {

using bigrat = boost::multiprecision::cpp_rational;

// Element of Z[sigma,tau]/(sigma^d - 1, tau^r - 1) (or its rational version).
// The coefficient of sigma^i tau^j lives at index j*d + i.
template <class T>
struct GRElem {
  int d = 0, r = 0;
  std::vector<T> c;

  GRElem() = default;
  GRElem(int d_, int r_) : d(d_), r(r_), c(static_cast<size_t>(d_) * r_) {
    if (d_ < 1 || r_ < 1) throw std::invalid_argument("group ring needs d, r >= 1");
  }
  GRElem(int d_, int r_, std::vector<T> coeffs) : d(d_), r(r_), c(std::move(coeffs)) {
    if (c.size() != static_cast<size_t>(d) * r) throw std::invalid_argument("coefficient length mismatch");
  }

  static GRElem monomial(int d, int r, long long i, long long j, T coeff = T(1)) {
    GRElem e(d, r);
    e.at(i, j) = coeff;
    return e;
  }

  T& at(long long i, long long j) { return c[idx(i, j)]; }
  const T& at(long long i, long long j) const { return c[idx(i, j)]; }

  size_t idx(long long i, long long j) const {
    long long im = ((i % d) + d) % d, jm = ((j % r) + r) % r;
    return static_cast<size_t>(jm) * d + im;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  GRElem& operator+=(const GRElem& o) {
    check(o);
    for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  GRElem& operator-=(const GRElem& o) {
    check(o);
    for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    return *this;
  }
  friend GRElem operator+(GRElem a, const GRElem& b) { return a += b; }
  friend GRElem operator-(GRElem a, const GRElem& b) { return a -= b; }
  friend GRElem operator*(const T& s, GRElem a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  friend GRElem operator*(const GRElem& a, const GRElem& b) {
    a.check(b);
    GRElem p(a.d, a.r);
    for (int j1 = 0; j1 < a.r; ++j1)
      for (int i1 = 0; i1 < a.d; ++i1) {
        const T& x = a.c[static_cast<size_t>(j1) * a.d + i1];
        if (x == 0) continue;
        for (int j2 = 0; j2 < a.r; ++j2)
          for (int i2 = 0; i2 < a.d; ++i2) {
            const T& y = b.c[static_cast<size_t>(j2) * a.d + i2];
            if (y == 0) continue;
            p.at(i1 + i2, j1 + j2) += x * y;
          }
      }
    return p;
  }
  friend bool operator==(const GRElem& a, const GRElem& b) { return a.d == b.d && a.r == b.r && a.c == b.c; }
  friend bool operator!=(const GRElem& a, const GRElem& b) { return !(a == b); }

 private:
  void check(const GRElem& o) const {
    if (d != o.d || r != o.r) throw std::invalid_argument("mixed group rings");
  }
};

using GroupRingElem = GRElem<bigint>;
using QGroupRingElem = GRElem<bigrat>;

QGroupRingElem to_rational(const GroupRingElem& x);

// The Z-basis f_0..f_{d-1}, d_1..d_{r-1}, e_1..e_{r-1} of the relation ideal I.
struct IdealBasis {
  int d = 0, r = 0;
  std::vector<GroupRingElem> rows;
  std::vector<std::vector<bigint>> matrix() const;
};

IdealBasis ideal_basis(int d, int r);

// U * M * V = diag(s_1, s_2, ...) with s_1 | s_2 | ...; U, V unimodular, V * V_inv = 1.
struct SmithNormalForm {
  std::vector<bigint> diag;
  std::vector<std::vector<bigint>> U, V, V_inv;
};

SmithNormalForm smith_normal_form(std::vector<std::vector<bigint>> M);

// R/I as an abelian group: invariant factors plus a basis of the free quotient
// (rows of V_inv past the ideal rank, as monomial coordinate vectors).
struct ModuleStructure {
  int d = 0, r = 0;
  SmithNormalForm snf;
  std::vector<bigint> torsion;
  int unit_factor_count = 0;
  std::vector<std::vector<bigint>> free_basis;
};

ModuleStructure module_structure(int d, int r);
std::vector<bigint> torsion_structure(int d, int r);

// The idempotent implementing the unique G-equivariant splitting rho(x) = x * pi.
QGroupRingElem splitting_pi(int d, int r);
QGroupRingElem splitting_rho(const QGroupRingElem& x);

// <sigma^i tau^j, 1> on R^0/I^0; closed form cross-checked against the coefficient
// of the identity monomial in rho(sigma^i tau^j).
bigrat group_pairing(int d, int r, long long i, long long j);
bigrat group_pairing_elems(const QGroupRingElem& x, const QGroupRingElem& y);

bool check_torsion_identities(int d, int r);

bigint det_bareiss(std::vector<std::vector<bigint>> M);

// Rational y with sum_t y_t * rows[t] = target, or nullopt when target is not in the span.
std::optional<std::vector<bigrat>> solve_row_combination(const std::vector<std::vector<bigint>>& rows,
                                                         const std::vector<bigrat>& target);

}  // namespace glc
