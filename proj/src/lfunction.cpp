#include "glc/lfunction.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <stdexcept>

namespace glc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("lfunction: " + msg); }

int64_t mod_pow(int64_t base, int64_t e, int64_t mod) {
  int64_t r = 1 % mod;
  base %= mod;
  while (e > 0) {
    if (e & 1) r = r * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return r;
}

int64_t mult_order(int64_t q, int64_t n) {
  if (n == 1) return 1;
  if (std::gcd(q % n, n) != 1) fail("order undefined: gcd(q, n) != 1");
  int64_t t = 1, v = q % n;
  while (v != 1) {
    v = v * (q % n) % n;
    ++t;
    if (t > n) fail("order search overran");
  }
  return t;
}

}  // namespace

std::pair<int, int> split_prime_power(int64_t q) {
  if (q < 2) fail("q must be a prime power >= 2");
  int64_t p = q;
  for (int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  int a = 0;
  int64_t v = q;
  while (v > 1) {
    if (v % p != 0) fail("q is not a prime power");
    v /= p;
    ++a;
  }
  return {static_cast<int>(p), a};
}

int64_t l_degree(int d, int r) {
  return static_cast<int64_t>(d - 1) * (r - 1) - (std::gcd(d, r) - 1);
}

OrbitSet orbit_decomposition(int64_t q, int d, int r) {
  auto [p, a] = split_prime_power(q);
  (void)a;
  if (d % p == 0 || r % p == 0) fail("characteristic divides dr");

  OrbitSet os;
  os.q = q;
  os.d = d;
  os.r = r;
  os.m = std::lcm(d, r);

  for (int i = 1; i < d; ++i)
    for (int j = 1; j < r; ++j)
      if ((static_cast<int64_t>(i) * os.m / d + static_cast<int64_t>(j) * os.m / r) % os.m != 0)
        os.S.emplace_back(i, j);

  if (static_cast<int64_t>(os.S.size()) != l_degree(d, r)) fail("|S| does not match the degree law");

  std::set<std::pair<int, int>> seen;
  for (auto start : os.S) {
    if (seen.count(start)) continue;
    std::vector<std::pair<int, int>> orbit;
    auto cur = start;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = {static_cast<int>((q % d) * cur.first % d), static_cast<int>((q % r) * cur.second % r)};
    } while (cur != start);
    std::sort(orbit.begin(), orbit.end());
    os.orbits.push_back(std::move(orbit));
  }
  std::sort(os.orbits.begin(), os.orbits.end());
  return os;
}

bool is_balanced(const std::vector<std::pair<int, int>>& orbit, const OrbitSet& os, int p) {
  // saturate under (i,j) -> (pi, pj)
  std::set<std::pair<int, int>> sat(orbit.begin(), orbit.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto e : std::vector<std::pair<int, int>>(sat.begin(), sat.end())) {
      std::pair<int, int> nxt{static_cast<int>(static_cast<int64_t>(p) % os.d * e.first % os.d),
                              static_cast<int>(static_cast<int64_t>(p) % os.r * e.second % os.r)};
      if (sat.insert(nxt).second) grew = true;
    }
  }

  auto region = [&](int i, int j) {
    // sign of <i/d> + <j/r> - 1: positive -> A, negative -> B
    int64_t v = static_cast<int64_t>(i % os.d) * os.m / os.d + static_cast<int64_t>(j % os.r) * os.m / os.r;
    return v > os.m ? 1 : (v < os.m ? -1 : 0);
  };

  for (int t = 1; t < os.m; ++t) {
    if (std::gcd(t, os.m) != 1) continue;
    int in_a = 0, in_b = 0;
    for (auto e : sat) {
      int sign = region(static_cast<int>(static_cast<int64_t>(t) * e.first % os.d),
                        static_cast<int>(static_cast<int64_t>(t) * e.second % os.r));
      if (sign > 0) ++in_a;
      if (sign < 0) ++in_b;
    }
    if (in_a != in_b) return false;
  }
  return true;
}

int count_balanced_orbits(const OrbitSet& os, int p) {
  int n = 0;
  for (const auto& o : os.orbits)
    if (is_balanced(o, os, p)) ++n;
  return n;
}

int LPoly::degree() const {
  for (size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<int>(i);
  return 0;
}

const FieldTable& FieldRegistry::get(int p, int k) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, k);
  auto it = tables_.find(key);
  if (it != tables_.end()) return *it->second;

  if (!cache_dir_.empty()) {
    auto path = std::filesystem::path(cache_dir_) / ("field_" + std::to_string(p) + "_" + std::to_string(k) + ".tab");
    if (std::filesystem::exists(path)) {
      auto loaded = std::make_unique<FieldTable>(load_field(path.string()));
      if (loaded->p == p && loaded->k == k) {
        auto& ref = *loaded;
        tables_[key] = std::move(loaded);
        return ref;
      }
    }
    auto built = std::make_unique<FieldTable>(build_field(p, k, cap_));
    std::filesystem::create_directories(cache_dir_);
    save_field(*built, path.string());
    auto& ref = *built;
    tables_[key] = std::move(built);
    return ref;
  }

  auto built = std::make_unique<FieldTable>(build_field(p, k, cap_));
  auto& ref = *built;
  tables_[key] = std::move(built);
  return ref;
}

void FieldRegistry::put(int p, int k, FieldTable table) {
  std::lock_guard<std::mutex> lock(mu_);
  tables_[std::make_pair(p, k)] = std::make_unique<FieldTable>(std::move(table));
}

LPoly closed_form_L(FieldRegistry& reg, int64_t q, int d, int r) {
  auto [p, a] = split_prime_power(q);
  OrbitSet os = orbit_decomposition(q, d, r);
  const int m = os.m;
  const int64_t deg = l_degree(d, r);

  std::vector<CycInt> lc(static_cast<size_t>(deg) + 1, CycInt(m));
  lc[0] = CycInt::integer(m, 1);

  for (const auto& orbit : os.orbits) {
    const int n = static_cast<int>(orbit.size());
    const auto [i, j] = orbit.front();
    const FieldTable& F = reg.get(p, a * n);
    CycInt J = jacobi_sum(make_char_pair(F, d, r, i, j));
    CycInt weil = J * J.conjugate();
    if (weil != CycInt::integer(m, bigint(F.q))) fail("Jacobi sum fails the Weil size check");
    CycInt J2 = J * J;
    for (int64_t t = deg; t >= n; --t) lc[t] = lc[t] - J2 * lc[t - n];
  }

  LPoly L;
  L.q = q;
  L.coeffs.resize(lc.size());
  for (size_t t = 0; t < lc.size(); ++t) {
    auto v = lc[t].as_rational_integer();
    if (!v) fail("L coefficient is not a rational integer");
    L.coeffs[t] = *v;
  }
  if (L.degree() != deg) fail("closed-form L has wrong degree");
  return L;
}

int64_t trace_sum(const FieldTable& F, int d, int r) {
  const int64_t M = F.order();
  const int64_t s = std::gcd(static_cast<int64_t>(r), M);
  const int64_t dp = std::gcd(static_cast<int64_t>(d), M);
  const int64_t a_inf = std::gcd(static_cast<int64_t>(d), s) - 1;
  const int64_t a_zero = s - 1;
  if (s == 1) return a_inf;  // every finite trace vanishes

  const int64_t m0 = F.m_zero;

  // T2[u][v] = #{m != m0 : m = u (mod d'), (Z[m] - m) = v (mod s)}
  std::vector<int64_t> t2(static_cast<size_t>(dp) * s, 0);
  for (int64_t m = 0; m < M; ++m) {
    if (m == m0) continue;
    int64_t v = (F.zech[m] - m) % s;
    if (v < 0) v += s;
    t2[static_cast<size_t>(m % dp) * s + v] += 1;
  }

  // sum over alpha in H of N1(alpha), where N1 counts gamma with
  // gamma^{r-1}(gamma+1)(gamma+alpha) an s-th power residue
  int64_t n1_sum = 0;
  for (int64_t k = 0; k < M; ++k) {
    if (k == m0) continue;
    int64_t want = (-(static_cast<int64_t>(r) % s) * (k % s) - F.zech[k]) % s;
    if (want < 0) want += s;
    n1_sum += t2[static_cast<size_t>(k % dp) * s + want];
  }

  // sum over alpha in H of N0(alpha): M-2 per alpha, +1 extra at alpha = 1
  const int64_t n0_sum = (M / dp) * (M - 2) + 1;
  return a_inf + a_zero + dp * (n0_sum - s * n1_sum);
}

LPoly brute_force_L(FieldRegistry& reg, int64_t q, int d, int r, int N) {
  auto [p, a] = split_prime_power(q);
  if (N < 0) fail("negative truncation");
  if (static_cast<int64_t>(N) < l_degree(d, r)) fail("truncation below the degree bound");

  std::vector<int64_t> A(static_cast<size_t>(N) + 1, 0);
  for (int n = 1; n <= N; ++n) A[n] = trace_sum(reg.get(p, a * n), d, r);

  std::vector<bigrat> c(static_cast<size_t>(N) + 1);
  c[0] = 1;
  for (int k = 1; k <= N; ++k) {
    bigrat acc = 0;
    for (int n = 1; n <= k; ++n) acc += bigrat(A[n]) * c[k - n];
    c[k] = acc / k;
  }

  LPoly L;
  L.q = q;
  L.coeffs.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (denominator(c[i]) != 1) fail("brute-force L coefficient is not integral");
    L.coeffs[i] = numerator(c[i]);
  }
  return L;
}

RankInfo analytic_rank(const LPoly& L) {
  RankInfo info;
  info.quotient = L;
  auto value_at = [](const LPoly& P) {
    // P(1/q) as an exact rational
    bigrat acc = 0;
    bigrat t = 1;
    for (const auto& coef : P.coeffs) {
      acc += bigrat(coef) * t;
      t /= P.q;
    }
    return acc;
  };
  while (true) {
    bigrat v = value_at(info.quotient);
    if (v != 0) {
      info.leading = v;
      return info;
    }
    // exact division by (1 - qT): b_i = a_i + q b_{i-1}, remainder must vanish
    auto& cs = info.quotient.coeffs;
    if (cs.size() < 2) fail("cannot divide a constant by (1-qT)");
    std::vector<bigint> b(cs.size() - 1);
    bigint prev = 0;
    for (size_t i = 0; i + 1 < cs.size(); ++i) {
      b[i] = cs[i] + L.q * prev;
      prev = b[i];
    }
    if (cs.back() + L.q * prev != 0) fail("inexact division by (1-qT)");
    cs = std::move(b);
    info.rho += 1;
  }
}

int64_t rank_formula(int64_t q, int d, int r, int nu_bound) {
  auto [p, a] = split_prime_power(q);
  (void)a;
  bool ok = false;
  const int64_t l = std::lcm(d, r);
  int64_t pn = 1 % l;
  for (int nu = 1; nu <= nu_bound; ++nu) {
    pn = pn * (p % l) % l;
    if ((pn + 1) % d == 0 && (pn + 1) % r == 0) {
      ok = true;
      break;
    }
  }
  if (!ok) fail("no nu <= bound with r, d | p^nu + 1");

  auto divisors = [](int n) {
    std::vector<int> ds;
    for (int e = 1; e <= n; ++e)
      if (n % e == 0) ds.push_back(e);
    return ds;
  };

  int64_t total = 0;
  for (int e : divisors(d)) {
    for (int s : divisors(r)) {
      if (s == 1) continue;
      int64_t num = static_cast<int64_t>(euler_phi(e)) * euler_phi(s);
      int64_t o = mult_order(q, std::lcm(e, s));
      if (num % o != 0) fail("orbit count is not integral");
      total += num / o;
    }
  }
  for (int s : divisors(r)) {
    if (s == 1) continue;
    int64_t num = euler_phi(s);
    int64_t o = mult_order(q, s);
    if (num % o != 0) fail("orbit count is not integral");
    total -= 2 * (num / o);
  }
  return total;
}

}  // namespace glc
