#pragma once

#include <cstdint>
#include <vector>

#include "glc/lfunction.hpp"

namespace glc {

// Polynomial in u over F_q, coefficient codes in ascending degree.
using UPoly = std::vector<int64_t>;

// d = p^nu + 1, r | d, ambient field F_q with q = p^(2 nu) so that mu_d lives inside.
struct DescentInstance {
  int64_t p = 0;
  int nu = 0;
  int d = 0;
  int r = 0;
  const FieldTable* F = nullptr;
  int64_t zeta_d = 0;  // fixed primitive d-th root
  int64_t zeta_r = 0;  // zeta_d^(d/r)
};

DescentInstance make_descent_instance(FieldRegistry& reg, int64_t p, int nu, int r);

struct CurvePoint {
  UPoly x, y;
};

// P_{i,j} = (zeta_d^i u, zeta_r^j zeta_d^i u (zeta_d^i u + 1)^(d/r)); verified on-curve.
CurvePoint explicit_point(const DescentInstance& inst, long long i, long long j);
bool on_curve(const DescentInstance& inst, const CurvePoint& pt);

// A class in prod_{Q in Delta} K_d^x / K_d^(x r), one rational function per coordinate.
struct KdClassTriple {
  UPoly num[3], den[3];  // order (v_0, v_1, v_t)
};

KdClassTriple xT_point(const DescentInstance& inst, long long i, long long j);
KdClassTriple xT_q1(const DescentInstance& inst);

// Valuations of v_1 at the places u + zeta_d^(-k), k = 0..d-1, reduced mod r.
std::vector<int> pr_projection(const DescentInstance& inst, const KdClassTriple& v);
std::vector<int> pr_q2(const DescentInstance& inst);

// val(v_1 v_t / v_0) = 0 mod r at each of the d linear places.
bool norm_relation_ok(const DescentInstance& inst, const KdClassTriple& v);

struct DescentRank {
  int zeta_rank = 0;            // rank over Z[zeta_r]: d - 2
  int z_rank = 0;               // rank over Z: (r-1)(d-2)
  bool pr_identity = false;     // pr matrix of the P_{i,0} is the d x d identity
  bool torsion_independent = false;  // pr(Q_1), pr(Q_2) independent over F_r
  bool conditional = true;           // assumes dim (M/N)[phi] = 0, not certified here
};

DescentRank descent_rank_bound(const DescentInstance& inst);

// Zero sets of x - zeta_d^i u, Delta_j, Gamma_j across all P_{i',j'}.
bool vanishing_checks(const DescentInstance& inst);

// Descent-side torsion shape agrees with the Smith form of R/I.
bool torsion_consistency(const DescentInstance& inst);

}  // namespace glc
