#pragma once
// Explicit finite fields F_{p^k} as dense exp/log/Zech tables.
//
// Elements are encoded as integers in [0, p^k): the code of
// c_0 + c_1 x + ... + c_{k-1} x^{k-1}  is  sum c_i p^i  (0 <= c_i < p).
// The modulus is the lexicographically smallest monic irreducible of degree k
// (smallest big-endian coefficient tuple), the generator the smallest code of
// multiplicative order q-1, so tables are reproducible across runs.

#include <cstdint>
#include <string>
#include <vector>

namespace glc {

struct FieldTable {
  int p = 0;
  int k = 0;
  int64_t q = 0;                  // p^k
  std::vector<int> modulus;       // length k+1, modulus[k] == 1
  int64_t gen = 0;                // element code, multiplicative order q-1
  std::vector<int32_t> exp_tab;   // size q-1, exp_tab[e] = code of gen^e
  std::vector<int32_t> log_tab;   // size q, log_tab[code]; log_tab[0] = -1
  std::vector<int32_t> zech;      // size q-1, zech[m] = dlog(1+gen^m), or q-1 if 1+gen^m = 0
  int64_t minus_one = 0;          // code of -1
  int64_t m_zero = 0;             // dlog(-1), the unique m with zech[m] sentinel

  int64_t order() const { return q - 1; }
  int32_t zech_sentinel() const { return static_cast<int32_t>(q - 1); }

  bool is_element(int64_t a) const { return a >= 0 && a < q; }

  int64_t add(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t sub(int64_t a, int64_t b) const { return add(a, neg(b)); }
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;                // throws on 0
  int64_t pow(int64_t a, int64_t e) const;     // throws on 0^(e<0)
  int64_t dlog(int64_t a) const;               // throws on 0
  int64_t exp(int64_t e) const;                // gen^e, e reduced mod q-1
  int64_t from_prime_field(int64_t c) const;   // Z -> F_p subfield
  int64_t add_one(int64_t a) const;            // a + 1 without table lookups

  // a + b via Zech logs given dlogs only; returns dlog or -1 when the sum is 0.
  int64_t dlog_add(int64_t la, int64_t lb) const;
};

// Builds the full table set.  Throws std::runtime_error if p is not prime,
// k < 1, or p^k exceeds the cap.
FieldTable build_field(int p, int k, int64_t cap = int64_t(1) << 22);

// Binary (de)serialization of a table set, used by the CLI field cache.
void save_field(const FieldTable& F, const std::string& path);
FieldTable load_field(const std::string& path);

}  // namespace glc
