#include "glc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace glc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("cyclotomic: " + msg); }

void trim(BPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

int euler_phi(int m) {
  int result = m, n = m;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      result -= result / f;
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

BPoly poly_rem_monic(BPoly a, const BPoly& f) {
  const int df = static_cast<int>(f.size()) - 1;
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= df) {
    int da = static_cast<int>(a.size()) - 1;
    bigint c = a.back();
    if (c != 0)
      for (int i = 0; i <= df; ++i) a[da - df + i] -= c * f[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

BPoly poly_div_exact(const BPoly& a, const BPoly& f) {
  BPoly rem = a;
  trim(rem);
  const int df = static_cast<int>(f.size()) - 1;
  if (static_cast<int>(rem.size()) - 1 < df) {
    if (!rem.empty()) fail("inexact polynomial division");
    return {};
  }
  BPoly quot(rem.size() - df, 0);
  while (static_cast<int>(rem.size()) - 1 >= df) {
    int da = static_cast<int>(rem.size()) - 1;
    bigint c = rem.back();
    quot[da - df] = c;
    if (c != 0)
      for (int i = 0; i <= df; ++i) rem[da - df + i] -= c * f[i];
    rem.pop_back();
    trim(rem);
  }
  if (!rem.empty()) fail("inexact polynomial division");
  return quot;
}

const BPoly& cyclotomic_poly(int m) {
  static std::map<int, BPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) fail("order < 1");
  // Phi_m = (x^m - 1) / prod_{e | m, e < m} Phi_e; fill the cache bottom-up.
  for (int e = 1; e <= m; ++e) {
    if (m % e != 0 || cache.count(e)) continue;
    BPoly num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (int f = 1; f < e; ++f)
      if (e % f == 0) num = poly_div_exact(num, cache.at(f));
    cache[e] = num;
  }
  return cache.at(m);
}

CycInt CycInt::integer(int m, const bigint& v) {
  CycInt r(m);
  if (euler_phi(m) >= 1)
    r.c[0] = v;
  else if (v != 0)
    fail("nonzero integer in rank-0 ring");
  return r;
}

CycInt CycInt::root_power(int m, int64_t e) {
  std::vector<bigint> h(m, 0);
  int64_t r = e % m;
  if (r < 0) r += m;
  h[static_cast<size_t>(r)] = 1;
  return from_histogram(m, h);
}

CycInt CycInt::from_histogram(int m, const std::vector<bigint>& h) {
  if (static_cast<int>(h.size()) != m) fail("histogram length != m");
  BPoly rem = poly_rem_monic(BPoly(h.begin(), h.end()), cyclotomic_poly(m));
  CycInt r(m);
  for (size_t i = 0; i < rem.size(); ++i) r.c[i] = rem[i];
  return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
  if (m != o.m) fail("mismatched orders");
  CycInt r(m);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  if (m != o.m) fail("mismatched orders");
  CycInt r(m);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(m);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (m != o.m) fail("mismatched orders");
  if (c.empty() || o.c.empty()) return CycInt(m);
  BPoly prod(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j) prod[i + j] += c[i] * o.c[j];
  }
  BPoly rem = poly_rem_monic(std::move(prod), cyclotomic_poly(m));
  CycInt r(m);
  for (size_t i = 0; i < rem.size(); ++i) r.c[i] = rem[i];
  return r;
}

CycInt CycInt::operator*(const bigint& s) const {
  CycInt r(m);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * s;
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

CycInt CycInt::galois(int64_t t) const {
  int64_t tm = ((t % m) + m) % m;
  if (std::gcd(static_cast<int64_t>(m), tm) != 1) fail("galois exponent not coprime to m");
  std::vector<bigint> h(m, 0);
  for (size_t i = 0; i < c.size(); ++i) h[static_cast<size_t>((i * tm) % m)] += c[i];
  return from_histogram(m, h);
}

std::optional<bigint> CycInt::as_rational_integer() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? bigint(0) : c[0];
}

}  // namespace glc
