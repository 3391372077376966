#include "glc/ffield.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace glc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("ffield: " + msg); }

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Dense polynomials over F_p, little-endian coefficients, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = static_cast<int>((c[i + j] + int64_t(a[i]) * b[j]) % p);
  }
  trim(c);
  return c;
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= df) {
    int da = static_cast<int>(a.size()) - 1;
    int c = a[da];
    if (c != 0) {
      for (int i = 0; i <= df; ++i) {
        int64_t v = a[da - df + i] - int64_t(c) * f[i];
        a[da - df + i] = static_cast<int>(((v % p) + p) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  // inverse of a nonzero scalar mod p
  auto inv_mod = [p](int c) {
    int r = 1, e = p - 2, base = c;
    while (e) {
      if (e & 1) r = static_cast<int>(int64_t(r) * base % p);
      base = static_cast<int>(int64_t(base) * base % p);
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod applies
    Poly bm = b;
    int lead = bm.back();
    if (lead != 1) {
      int il = inv_mod(lead);
      for (auto& c : bm) c = static_cast<int>(int64_t(c) * il % p);
    }
    Poly r = poly_mod(a, bm, p);
    a = b;
    b = r;
  }
  return a;
}

Poly poly_pow_mod(const Poly& base, int64_t e, const Poly& f, int p) {
  Poly result{1};
  Poly b = poly_mod(base, f, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, b, p), f, p);
    b = poly_mod(poly_mul(b, b, p), f, p);
    e >>= 1;
  }
  return result;
}

Poly code_to_poly(int64_t code, int p) {
  Poly a;
  while (code > 0) {
    a.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return a;
}

int64_t poly_to_code(const Poly& a, int p) {
  int64_t code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// f monic of degree k with coefficient codes "lo"; irreducibility per the
// gcd(x^(p^j) - x, f) filter for j <= k/2 plus x^(p^k) = x.
bool is_irreducible(const Poly& f, int p, int k) {
  if (k == 1) return true;
  Poly x{0, 1};
  Poly h = x;
  for (int j = 1; j <= k; ++j) {
    h = poly_pow_mod(h, p, f, p);
    if (j <= k / 2) {
      Poly g = poly_gcd(f, poly_sub(h, x, p), p);
      if (g.size() != 1) return false;
    }
  }
  return poly_sub(h, x, p).empty();
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int64_t FieldTable::add(int64_t a, int64_t b) const {
  if (p == 2) return a ^ b;
  int64_t r = 0, place = 1;
  while (a > 0 || b > 0) {
    int64_t da = a % p, db = b % p;
    r += ((da + db) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

int64_t FieldTable::neg(int64_t a) const {
  if (p == 2) return a;
  int64_t r = 0, place = 1;
  while (a > 0) {
    int64_t da = a % p;
    r += (da ? p - da : 0) * place;
    a /= p;
    place *= p;
  }
  return r;
}

int64_t FieldTable::mul(int64_t a, int64_t b) const {
  if (a == 0 || b == 0) return 0;
  int64_t e = log_tab[a] + log_tab[b];
  if (e >= order()) e -= order();
  return exp_tab[e];
}

int64_t FieldTable::inv(int64_t a) const {
  if (a == 0) fail("inverse of zero");
  int64_t e = log_tab[a];
  return exp_tab[e == 0 ? 0 : order() - e];
}

int64_t FieldTable::pow(int64_t a, int64_t e) const {
  if (a == 0) {
    if (e < 0) fail("zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  int64_t m = order();
  int64_t r = ((log_tab[a] * (e % m)) % m + m) % m;
  return exp_tab[r];
}

int64_t FieldTable::dlog(int64_t a) const {
  if (a == 0) fail("dlog of zero");
  return log_tab[a];
}

int64_t FieldTable::exp(int64_t e) const {
  int64_t m = order();
  return exp_tab[((e % m) + m) % m];
}

int64_t FieldTable::from_prime_field(int64_t c) const {
  int64_t r = c % p;
  return r < 0 ? r + p : r;
}

int64_t FieldTable::add_one(int64_t a) const {
  int64_t d = a % p;
  return a - d + (d + 1) % p;
}

int64_t FieldTable::dlog_add(int64_t la, int64_t lb) const {
  // gen^la + gen^lb = gen^lb (1 + gen^(la-lb))
  int64_t m = order();
  int64_t dd = la - lb;
  dd %= m;
  if (dd < 0) dd += m;
  int32_t z = zech[dd];
  if (z == zech_sentinel()) return -1;
  int64_t r = lb + z;
  if (r >= m) r -= m;
  return r;
}

FieldTable build_field(int p, int k, int64_t cap) {
  if (!is_prime(p)) fail("p is not prime");
  if (k < 1) fail("k < 1");
  int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > cap) fail("field cardinality exceeds cap");
  }

  FieldTable F;
  F.p = p;
  F.k = k;
  F.q = q;

  // Lexicographically smallest monic irreducible: scan the low-coefficient
  // block as a big-endian base-p integer.
  for (int64_t lo = 0; lo < q; ++lo) {
    Poly f = code_to_poly(lo, p);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (is_irreducible(f, p, k)) {
      F.modulus = f;
      break;
    }
  }
  if (F.modulus.empty()) fail("no irreducible modulus found");

  // Smallest generator, order certified against the factored group order.
  int64_t M = q - 1;
  auto factors = prime_factors(M);
  F.gen = 0;
  for (int64_t c = 1; c < q; ++c) {
    Poly base = code_to_poly(c, p);
    bool ok = true;
    for (int64_t ell : factors) {
      Poly h = poly_pow_mod(base, M / ell, F.modulus, p);
      if (h.size() == 1 && h[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      F.gen = c;
      break;
    }
  }
  if (F.gen == 0) fail("no generator found");

  // exp table in one multiplicative sweep, then invert for logs.
  F.exp_tab.assign(M, 0);
  F.log_tab.assign(q, -1);
  Poly gpoly = code_to_poly(F.gen, p);
  Poly cur{1};
  for (int64_t e = 0; e < M; ++e) {
    int64_t code = poly_to_code(cur, p);
    F.exp_tab[e] = static_cast<int32_t>(code);
    if (F.log_tab[code] != -1) fail("generator order check failed during sweep");
    F.log_tab[code] = static_cast<int32_t>(e);
    cur = poly_mod(poly_mul(cur, gpoly, p), F.modulus, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1)) fail("generator does not have order q-1");

  F.minus_one = F.from_prime_field(p - 1);
  F.m_zero = F.log_tab[F.minus_one];

  F.zech.assign(M, 0);
  for (int64_t m = 0; m < M; ++m) {
    int64_t t = F.add_one(F.exp_tab[m]);
    F.zech[m] = (t == 0) ? F.zech_sentinel() : F.log_tab[t];
  }
  return F;
}

void save_field(const FieldTable& F, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open cache file for writing: " + path);
  const char magic[8] = {'G', 'L', 'C', 'F', 'F', 'v', '1', 0};
  out.write(magic, 8);
  auto w64 = [&out](int64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); };
  w64(F.p);
  w64(F.k);
  w64(F.q);
  w64(F.gen);
  for (int i = 0; i <= F.k; ++i) w64(F.modulus[i]);
  out.write(reinterpret_cast<const char*>(F.exp_tab.data()),
            static_cast<std::streamsize>(F.exp_tab.size() * sizeof(int32_t)));
  if (!out) fail("short write to cache file: " + path);
}

FieldTable load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open cache file: " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::string(magic, 7) != "GLCFFv1") fail("bad cache file magic: " + path);
  auto r64 = [&in]() {
    int64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
  };
  FieldTable F;
  F.p = static_cast<int>(r64());
  F.k = static_cast<int>(r64());
  F.q = r64();
  F.gen = r64();
  F.modulus.resize(F.k + 1);
  for (int i = 0; i <= F.k; ++i) F.modulus[i] = static_cast<int>(r64());
  int64_t M = F.q - 1;
  F.exp_tab.assign(M, 0);
  in.read(reinterpret_cast<char*>(F.exp_tab.data()), static_cast<std::streamsize>(M * sizeof(int32_t)));
  if (!in) fail("truncated cache file: " + path);
  F.log_tab.assign(F.q, -1);
  for (int64_t e = 0; e < M; ++e) F.log_tab[F.exp_tab[e]] = static_cast<int32_t>(e);
  F.minus_one = F.from_prime_field(F.p - 1);
  F.m_zero = F.log_tab[F.minus_one];
  F.zech.assign(M, 0);
  for (int64_t m = 0; m < M; ++m) {
    int64_t t = F.add_one(F.exp_tab[m]);
    F.zech[m] = (t == 0) ? F.zech_sentinel() : F.log_tab[t];
  }
  return F;
}

}  // namespace glc
