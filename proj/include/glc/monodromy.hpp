#pragma once
// Lambda = F_ell[z]/Psi_r and its totally-real counterpart: prime levels,
// splitting, predicted monodromy-group orders, torsion-vanishing assertions,
// and new-part dimensions.

#include "glc/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace glc {

enum class SplitType { inert, split };

struct LambdaPrime {
  int64_t ell = 0;
  int r = 0;
  int level = 0;                // divisor s of r, s > 1
  int count = 0;                // primes of Lambda at this level: phi(s)/residue_degree
  int residue_degree = 0;       // ord of ell in (Z/s)^x
  int plus_residue_degree = 0;  // ord of ell in (Z/s)^x / {+-1}
  int plus_count = 0;           // primes of Lambda^+ at this level
  SplitType split_type = SplitType::inert;
};

// One entry per level 1 < s | r, ascending.
std::vector<LambdaPrime> lambda_decomposition(int r, int64_t ell);

// Number of primes lambda^+ of Lambda^+ with residue field F_3:
// 0 / 1 / 2 according to r odd / r = 2 mod 4 / r = 0 mod 4.  Requires 3 not
// dividing r; cross-checked against lambda_decomposition(r, 3).
int flambda_f3_count(int r);

struct MonodromyPrediction {
  std::string structure;        // "D_2r" or "SL_2(Lambda^+)"
  bigint order;
  std::vector<bigint> factors;  // one per prime of Lambda^+, by ascending level
};

// ell = 2: dihedral of order 2r.  ell > 2: product of |SL_2(F_{lambda^+})| =
// N(N^2-1) over the primes of Lambda^+, with the level-10 factor replaced by
// |A~_5| = 120 when ell = 3.
MonodromyPrediction predicted_monodromy(int r, int64_t ell);

enum class ExtensionClass { abelian, solvable };

// Abelian extensions: J[ell](L) = 0 always.  Solvable: asserted iff ell > 3
// or r is odd.
bool torsion_vanishing(int r, int64_t ell, ExtensionClass ext);

// Refined solvable-extension criterion: r not in {2, 4} or ell > 3.
bool new_torsion_refinement(int r, int64_t ell);

// s | r -> dim J_s^new = phi(s) (s > 1), 0 at s = 1; dimensions sum to the
// genus r - 1.
std::map<int, int> new_part_dimensions(int r);

}  // namespace glc
