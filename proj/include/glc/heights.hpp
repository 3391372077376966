#pragma once

#include <cstdint>
#include <vector>

#include "glc/groupring.hpp"

namespace glc {

// The height table is proved for d = p^nu + 1; callers can surface this flag.
bool height_regime(int64_t p, int d);

struct HeightTable {
  int d = 0, r = 0;
  std::vector<bigrat> h;  // <P_ij, P_00> at index j*d + i

  const bigrat& at(long long i, long long j) const {
    long long im = ((i % d) + d) % d, jm = ((j % r) + r) % r;
    return h[static_cast<size_t>(jm) * d + im];
  }
};

HeightTable height_table(int d, int r);
bigrat height_pair(int d, int r, long long i, long long j);

// Full rd x rd Gram matrix <P_ij, P_i'j'> = <P_{i-i', j-j'}, P_00>.
std::vector<std::vector<bigrat>> gram_matrix(int d, int r);

// height = (d-1) * group pairing, entrywise over the whole table.
bool proportionality_check(int d, int r);

// det of the lattice I under the Euclidean pairing on R: r^(d+2) d^(2r-2),
// cross-checked against the Gram determinant of the alpha/beta/gamma basis.
bigint disc_ideal(int d, int r);

// Gram of the (R/I)/tor basis embedded by rho and scaled by rd (integer entries).
std::vector<std::vector<bigint>> free_lattice_gram(const ModuleStructure& ms);

// det(W/tor) = r^(4-d) d^(2-2r) under the group pairing; lattice cross-check.
bigrat disc_W_mod_torsion(int d, int r);

// det(V/tor) = (d-1)^((r-1)(d-2)) r^(4-d) d^(2-2r) under the height pairing.
bigrat disc_V_mod_torsion(int d, int r);

int rational_rank(std::vector<std::vector<bigrat>> m);

}  // namespace glc
