#pragma once
// Multiplicative characters, Jacobi sums, local traces a_{beta,q^n}, and the
// naive point-count oracle.

#include "glc/cyclotomic.hpp"
#include "glc/ffield.hpp"

namespace glc {

// chi_i of order dividing d and rho_j of order dividing r on F.gen^k:
// chi_i(g^k) = zeta_d^{ik}, rho_j(g^k) = zeta_r^{jk}, values in Z[zeta_m],
// m = lcm(d, r).
struct CharPair {
  const FieldTable* field;
  int d, r;
  int64_t i, j;
  int m;  // lcm(d, r)
};

CharPair make_char_pair(const FieldTable& F, int d, int r, int64_t i, int64_t j);

// J(chi_i, rho_j) = sum over u+v+1=0 of chi_i(u) rho_j(v), exact in Z[zeta_m].
CycInt jacobi_sum(const CharPair& pair);

// A point of P^1(F): finite with a field code, or the point at infinity.
struct P1Point {
  bool infinite = false;
  int64_t value = 0;
  static P1Point at_infinity() { return {true, 0}; }
  static P1Point finite(int64_t v) { return {false, v}; }
};

// Trace of q^n-Frobenius on the inertia invariants at the place under beta:
// finite beta: -sum_{j=1}^{s-1} sum_gamma phi^j(gamma^{r-1}(gamma+1)(gamma+alpha)),
// alpha = beta^d, s = gcd(r, q^n-1), computed in Z[zeta_s] and certified to be a
// rational integer; beta = infinity: gcd(d, r, q^n-1) - 1.
int64_t local_trace(const FieldTable& F, int r, int d, P1Point beta);

// 1 + sum_x #{y : y^r = x^{r-1}(x+1)(x+alpha)}; #{y : y^r = c} decided by the
// power-residue test c^((q-1)/gcd(r,q-1)) = 1.
int64_t naive_point_count(const FieldTable& F, int r, int64_t alpha);

}  // namespace glc
