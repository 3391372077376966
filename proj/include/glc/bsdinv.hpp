#pragma once
// Local invariants of the Neron model (conductor exponents, component groups,
// connected-component dimensions), the Tamagawa number, the Sha/index ratio,
// and the assembled BSD consistency report.  Also the Cartier-Manin data
// certifying ordinarity.

#include "glc/heights.hpp"
#include "glc/lfunction.hpp"

#include <vector>

namespace glc {

enum class PlaceClass { u_zero, u_unity, u_infinity, good };

struct LocalData {
  PlaceClass place;
  int c_v = 0;             // conductor exponent
  bigint d_v;              // order of the component group of the special fibre
  int a_v = 0, m_v = 0, g_v = 0;  // unipotent / toric / abelian dimensions
};

// Case table for one place of F_q(u) lying over t = 0, t = 1, t = infinity, or
// a place of good reduction.  Component-group orders at u = 0 and u = infinity
// are only available when r | d.
LocalData local_data(int d, int r, PlaceClass place);

// deg L = -4(r-1) + sum_v c_v, certified against (d-1)(r-1) - (gcd(d,r)-1)
// and returned.
int conductor_degree_check(int d, int r);

// prod_v d_v = d^(2r-2) r^(d+2), accumulated from local_data and certified
// against the closed form.
bigint component_group_product(int d, int r);

// tau(J / F_q(u)) = q^(-(d-2)(r-1)/2) d^(2r-2) r^(d+2).
bigrat tamagawa(int64_t q, int d, int r);

// (prod_v d_v) * det(V/tor) / |V_tor|^2 = (d-1)^((r-1)(d-2)), certified to be
// that integer and returned.  NS torsion is 1 for this family (taken as input).
bigint integrality_quantity(int d, int r);

// |Sha| / [J : V]^2 = (q / p^(2 nu))^((r-1)(d-2)/2); equals 1 over K_d itself.
bigrat sha_index_ratio(int64_t p, int nu, int64_t q, int d, int r);

struct BsdReport {
  int64_t p = 0;
  int nu = 0;
  int64_t q = 0;
  int d = 0, r = 0;
  int rho = 0;        // ord_{T=1/q} L
  bigrat m_value;     // M(1/q) with L = (1-qT)^rho M;  L*(1) = m_value (log q)^rho
  bigrat tau;
  bigrat det_v;       // det(V / V_tor)
  bigint tor_order;   // |V_tor| = r^3
  bigrat ratio;       // |Sha| / [J : V]^2 forced by the BSD identity
  bool ok = false;    // ratio agrees with sha_index_ratio
};

// Assembles L*, the regulator contribution det(V/tor)/[index]^2, tau and
// |tor| = r^3 into the BSD leading-term identity; the (log q)^rho factors
// cancel symbolically, leaving a pure rational identity that pins
// |Sha|/[index]^2.  Throws if it disagrees with sha_index_ratio.
BsdReport bsd_consistency(int64_t p, int nu, int64_t q, int d, int r);

struct CartierRow {
  int i = 0;                // index of the basis differential, 1..r-1
  int a = 0;                // row position hit by the Cartier operator
  int64_t b = 0;            // ap - br = i with 0 <= b < p
  std::vector<int64_t> c;   // c(t) = sum_j binom(b,j)^2 t^j over F_p, ascending
};

// One row per i = 1..r-1; certifies c != 0 throughout and that i -> a is a
// permutation of {1,...,r-1}, which makes the Jacobian ordinary.
std::vector<CartierRow> cartier_matrix(int64_t p, int r);

}  // namespace glc
