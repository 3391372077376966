#pragma once
// Orbit combinatorics on S, the closed-form and brute-force L-functions,
// analytic rank, and the combinatorial rank formula.

#include "glc/charsums.hpp"
#include "glc/cyclotomic.hpp"
#include "glc/ffield.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace glc {

using bigrat = boost::multiprecision::cpp_rational;

struct OrbitSet {
  int64_t q = 0;
  int d = 1, r = 1;
  int m = 1;  // lcm(d, r)
  std::vector<std::pair<int, int>> S;                  // sorted lexicographically
  std::vector<std::vector<std::pair<int, int>>> orbits;  // each sorted; list sorted by least element
};

// Partition of S = {(i,j) : i != 0, j != 0, <i/d> + <j/r> not integral} under
// (i,j) -> (qi, qj).  Requires char(q) coprime to d*r.
OrbitSet orbit_decomposition(int64_t q, int d, int r);

// <p>-saturated balance test: the orbit's closure under (i,j) -> (pi, pj)
// meets A = {<i/d>+<j/r> > 1} and B = {< 1} equally in every unit translate.
bool is_balanced(const std::vector<std::pair<int, int>>& orbit, const OrbitSet& os, int p);
int count_balanced_orbits(const OrbitSet& os, int p);

struct LPoly {
  int64_t q = 0;
  std::vector<bigint> coeffs;  // ascending powers of T = q^{-s}
  int degree() const;
};

// Cache of built field tables keyed by (p, extension degree); optionally
// persisted to a directory of binary table files.
class FieldRegistry {
 public:
  explicit FieldRegistry(int64_t cap = int64_t(1) << 22, std::string cache_dir = "")
      : cap_(cap), cache_dir_(std::move(cache_dir)) {}
  const FieldTable& get(int p, int k);
  void put(int p, int k, FieldTable table);  // injection point (tests)
  int64_t cap() const { return cap_; }

 private:
  int64_t cap_;
  std::string cache_dir_;
  std::map<std::pair<int, int>, std::unique_ptr<FieldTable>> tables_;
  std::mutex mu_;
};

// L(J/K, T) = prod_o (1 - J_o^2 T^{|o|}), coefficients certified integers.
LPoly closed_form_L(FieldRegistry& reg, int64_t q, int d, int r);

// Sum of a_{beta,q^n} over beta in P^1(F_{q^n}), aggregated in O(q^n) via the
// Zech-log count table.
int64_t trace_sum(const FieldTable& F, int d, int r);

// exp(sum_{n<=N} A_n T^n / n) truncated at N with exact rational series
// arithmetic; every coefficient certified integral.
LPoly brute_force_L(FieldRegistry& reg, int64_t q, int d, int r, int N);

struct RankInfo {
  int rho = 0;        // ord_{T=1/q} L
  LPoly quotient;     // M with L = (1-qT)^rho * M
  bigrat leading;     // M(1/q), nonzero; L*(1) = leading * (log q)^rho
};
RankInfo analytic_rank(const LPoly& L);

// Cor. of the invariant-dimension count: rank of J over F_q(t^{1/d}) when r
// and d divide p^nu + 1 for some nu (searched up to nu_bound).
int64_t rank_formula(int64_t q, int d, int r, int nu_bound = 64);

// |S| = (d-1)(r-1) - (gcd(d,r)-1)
int64_t l_degree(int d, int r);

// q = p^a with p prime; returns {p, a}.
std::pair<int, int> split_prime_power(int64_t q);

}  // namespace glc
