#pragma once
// Exact arithmetic in Z[zeta_m]: length-m power-basis working form, canonical
// form = remainder mod the m-th cyclotomic polynomial (degree phi(m)).

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace glc {

using bigint = boost::multiprecision::cpp_int;
using BPoly = std::vector<bigint>;  // little-endian integer coefficients

int euler_phi(int m);

// Monic, degree phi(m), computed by exact division of x^m - 1 by the proper
// cyclotomic factors.  Cached; thread-safe.
const BPoly& cyclotomic_poly(int m);

// Exact division helpers over Z (divisor monic); remainder asserted zero in
// poly_div_exact.
BPoly poly_rem_monic(BPoly a, const BPoly& f);
BPoly poly_div_exact(const BPoly& a, const BPoly& f);

struct CycInt {
  int m = 1;
  std::vector<bigint> c;  // canonical, size phi(m)

  CycInt() : c(1) {}
  explicit CycInt(int order) : m(order), c(euler_phi(order)) {}

  static CycInt integer(int m, const bigint& v);
  static CycInt root_power(int m, int64_t e);  // zeta_m^e
  // sum_e h[e] * zeta_m^e for a length-m histogram
  static CycInt from_histogram(int m, const std::vector<bigint>& h);

  bool operator==(const CycInt& o) const { return m == o.m && c == o.c; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(const bigint& s) const;
  CycInt operator-() const;

  bool is_zero() const;

  // Galois action zeta -> zeta^t, gcd(t, m) = 1.
  CycInt galois(int64_t t) const;
  // complex conjugation zeta -> zeta^(-1)
  CycInt conjugate() const { return galois(m - 1 == 0 ? 1 : m - 1); }

  std::optional<bigint> as_rational_integer() const;
};

}  // namespace glc
