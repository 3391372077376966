#include "glc/charsums.hpp"

#include <numeric>
#include <stdexcept>

namespace glc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("charsums: " + msg); }

}  // namespace

CharPair make_char_pair(const FieldTable& F, int d, int r, int64_t i, int64_t j) {
  if (d < 1 || r < 1) fail("character orders must be >= 1");
  int64_t M = F.order();
  i = ((i % d) + d) % d;
  j = ((j % r) + r) % r;
  // chi_i must be well defined on the cyclic group of order M: zeta_d^{iM} = 1.
  if ((i * M) % d != 0 || (j * M) % r != 0) fail("character order incompatible with q^n - 1");
  return CharPair{&F, d, r, i, j, std::lcm(d, r)};
}

CycInt jacobi_sum(const CharPair& pair) {
  const FieldTable& F = *pair.field;
  const int m = pair.m;
  const int64_t M = F.order();
  // exponent steps per unit of dlog, as elements of Z/m
  const int64_t step_u = ((pair.i * (m / pair.d)) % m);
  const int64_t step_v = ((pair.j * (m / pair.r)) % m);

  std::vector<bigint> hist(m, 0);
  const bool chi_trivial = (pair.i == 0);
  const bool rho_trivial = (pair.j == 0);

  // u + v + 1 = 0, i.e. v = -1 - u.  chi(0) = 0 for nontrivial chi, 1 for the
  // trivial character.
  auto char_exp = [&](int64_t lg, int64_t step) { return (lg % m) * step % m; };

  for (int64_t u = 0; u < F.q; ++u) {
    int64_t v = F.neg(F.add_one(u));
    int64_t e = 0;
    if (u == 0) {
      if (!chi_trivial) continue;
    } else {
      e += char_exp(F.dlog(u), step_u);
    }
    if (v == 0) {
      if (!rho_trivial) continue;
    } else {
      e += char_exp(F.dlog(v), step_v);
    }
    hist[e % m] += 1;
  }
  return CycInt::from_histogram(m, hist);
}

int64_t local_trace(const FieldTable& F, int r, int d, P1Point beta) {
  const int64_t M = F.order();
  const int s = static_cast<int>(std::gcd(static_cast<int64_t>(r), M));
  if (r % F.p == 0) fail("p divides r");

  if (beta.infinite) return std::gcd(static_cast<int64_t>(d), static_cast<int64_t>(s)) - 1;

  if (s == 1) return 0;

  const int64_t alpha = F.pow(beta.value, d);
  std::vector<bigint> h(s, 0);
  const int64_t la = (alpha == 0) ? -1 : F.dlog(alpha);
  for (int64_t k = 0; k < M; ++k) {
    int64_t z = F.zech[k];
    if (z == F.zech_sentinel()) continue;  // gamma = -1
    int64_t lw;
    if (alpha == 0) {
      lw = (static_cast<int64_t>(r) % M * (k % M) + z) % M;  // gamma^r (gamma+1)
    } else {
      int64_t t = F.dlog_add(k, la);
      if (t < 0) continue;  // gamma = -alpha
      lw = ((static_cast<int64_t>(r) - 1) % M * (k % M) + z + t) % M;
    }
    h[lw % s] += 1;
  }

  // -sum_{j=1}^{s-1} sum_e h[e] zeta_s^{je}, certified to collapse to Z.
  std::vector<bigint> hist(s, 0);
  for (int j = 1; j < s; ++j)
    for (int e = 0; e < s; ++e) hist[(static_cast<int64_t>(j) * e) % s] -= h[e];
  CycInt val = CycInt::from_histogram(s, hist);
  auto n = val.as_rational_integer();
  if (!n) fail("local trace did not reduce to a rational integer");
  if (abs(*n) > bigint(F.q) * s) fail("local trace out of range");
  return static_cast<int64_t>(*n);
}

int64_t naive_point_count(const FieldTable& F, int r, int64_t alpha) {
  const int64_t M = F.order();
  const int64_t g = std::gcd(static_cast<int64_t>(r), M);
  const int64_t e = M / g;
  int64_t count = 1;  // the point at infinity of the smooth model
  for (int64_t x = 0; x < F.q; ++x) {
    int64_t c = F.mul(F.mul(F.pow(x, r - 1), F.add_one(x)), F.add(x, alpha));
    if (c == 0)
      count += 1;
    else if (F.pow(c, e) == 1)
      count += g;
  }
  return count;
}

}  // namespace glc
