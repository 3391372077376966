#include "glc/bsdinv.hpp"

#include "glc/groupring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace glc {

namespace {

bigint bpow(bigint base, int64_t e) {
  bigint out = 1;
  while (e-- > 0) out *= base;
  return out;
}

void check_dims(const LocalData& L, int r) {
  if (L.a_v + L.m_v + L.g_v != r - 1)
    throw std::logic_error("local dimensions do not sum to r-1");
  if (L.c_v != 2 * (r - 1) - 2 * L.g_v - L.m_v)
    throw std::logic_error("conductor exponent inconsistent with (a,m,g)");
}

}  // namespace

LocalData local_data(int d, int r, PlaceClass place) {
  if (d < 1 || r < 2) throw std::invalid_argument("local_data: need d >= 1, r >= 2");
  LocalData L;
  L.place = place;
  const int g = std::gcd(d, r);
  switch (place) {
    case PlaceClass::u_zero:
      if (d % r != 0) throw std::domain_error("local_data: component group at u=0 needs r | d");
      L.c_v = r - 1;
      L.a_v = 0;
      L.m_v = r - 1;
      L.g_v = 0;
      L.d_v = bigint(r) * bpow(d, r - 1);  // (Z/rd) x (Z/d)^(r-2)
      break;
    case PlaceClass::u_unity:
      L.c_v = r - 1;
      if (r % 2 == 1) {
        L.a_v = (r - 1) / 2;
        L.m_v = 0;
        L.g_v = (r - 1) / 2;
      } else {
        L.a_v = (r - 2) / 2;
        L.m_v = 1;
        L.g_v = (r - 2) / 2;
      }
      L.d_v = r;
      break;
    case PlaceClass::u_infinity:
      if (d % r != 0) throw std::domain_error("local_data: component group at u=inf needs r | d");
      L.c_v = 2 * r - g - 1;
      L.a_v = r - g;
      L.m_v = g - 1;
      L.g_v = 0;
      L.d_v = bigint(r) * bpow(d, r - 1);
      break;
    case PlaceClass::good:
      L.c_v = 0;
      L.a_v = 0;
      L.m_v = 0;
      L.g_v = r - 1;
      L.d_v = 1;
      break;
  }
  check_dims(L, r);
  return L;
}

int conductor_degree_check(int d, int r) {
  if (d < 1 || r < 2) throw std::invalid_argument("conductor_degree_check: need d >= 1, r >= 2");
  const int g = std::gcd(d, r);
  // One place over t=0, the d places over t=1, one place over t=infinity; the
  // conductor exponents there do not need r | d.
  const int sum_c = (r - 1) + d * (r - 1) + (2 * r - g - 1);
  const int deg = -4 * (r - 1) + sum_c;
  if (deg != (d - 1) * (r - 1) - (g - 1))
    throw std::logic_error("conductor degree identity failed");
  if (d % r == 0) {
    int again = local_data(d, r, PlaceClass::u_zero).c_v +
                d * local_data(d, r, PlaceClass::u_unity).c_v +
                local_data(d, r, PlaceClass::u_infinity).c_v;
    if (again != sum_c) throw std::logic_error("conductor degree: case table mismatch");
  }
  return deg;
}

bigint component_group_product(int d, int r) {
  if (d % r != 0) throw std::domain_error("component_group_product: needs r | d");
  bigint prod = local_data(d, r, PlaceClass::u_zero).d_v *
                local_data(d, r, PlaceClass::u_infinity).d_v;
  for (int k = 0; k < d; ++k) prod *= local_data(d, r, PlaceClass::u_unity).d_v;
  bigint closed = bpow(d, 2 * r - 2) * bpow(r, d + 2);
  if (prod != closed) throw std::logic_error("component group product mismatch");
  return prod;
}

bigrat tamagawa(int64_t q, int d, int r) {
  if (d % r != 0) throw std::domain_error("tamagawa: needs r | d");
  if ((q - 1) % d != 0) throw std::domain_error("tamagawa: needs d | q-1");
  const int64_t e2 = int64_t(d - 2) * (r - 1);
  if (e2 % 2 != 0) throw std::logic_error("tamagawa: (d-2)(r-1) must be even");
  bigint num = component_group_product(d, r);
  bigint den = bpow(q, e2 / 2);
  return bigrat(num, den);
}

bigint integrality_quantity(int d, int r) {
  bigint pdv = component_group_product(d, r);
  bigrat detv = disc_V_mod_torsion(d, r);
  bigint tor = 1;
  for (const bigint& t : torsion_structure(d, r)) tor *= t;
  if (tor != bpow(r, 3)) throw std::logic_error("integrality: torsion order is not r^3");
  bigrat val = bigrat(pdv) * detv / bigrat(tor * tor);
  if (denominator(val) != 1) throw std::logic_error("integrality quantity is not an integer");
  const int n = (r - 1) * (d - 2);
  if (numerator(val) != bpow(d - 1, n))
    throw std::logic_error("integrality quantity != (d-1)^((r-1)(d-2))");
  return numerator(val);
}

bigrat sha_index_ratio(int64_t p, int nu, int64_t q, int d, int r) {
  if (nu < 1) throw std::invalid_argument("sha_index_ratio: need nu >= 1");
  bigint pn = bpow(p, nu);
  if (bigint(d) != pn + 1) throw std::domain_error("sha_index_ratio: needs d = p^nu + 1");
  if (d % r != 0) throw std::domain_error("sha_index_ratio: needs r | d");
  if ((q - 1) % d != 0) throw std::domain_error("sha_index_ratio: needs d | q-1");
  const int64_t e2 = int64_t(r - 1) * (d - 2);
  if (e2 % 2 != 0) throw std::logic_error("sha_index_ratio: (r-1)(d-2) must be even");
  bigrat base(bigint(q), pn * pn);
  bigrat out = 1;
  for (int64_t k = 0; k < e2 / 2; ++k) out *= base;
  return out;
}

BsdReport bsd_consistency(int64_t p, int nu, int64_t q, int d, int r) {
  BsdReport rep;
  rep.p = p;
  rep.nu = nu;
  rep.q = q;
  rep.d = d;
  rep.r = r;
  rep.ratio = sha_index_ratio(p, nu, q, d, r);  // also validates the regime

  FieldRegistry reg;
  LPoly L = closed_form_L(reg, q, d, r);
  RankInfo ri = analytic_rank(L);
  rep.rho = ri.rho;
  rep.m_value = ri.leading;

  rep.tau = tamagawa(q, d, r);
  rep.det_v = disc_V_mod_torsion(d, r);
  rep.tor_order = bpow(r, 3);

  // L*(1) = |Sha| R tau / |tor|^2 with L*(1) = m_value (log q)^rho and
  // R = (det_v / [J:V]^2) (log q)^rho: the transcendental factors cancel and
  //   |Sha| / [J:V]^2 = m_value |tor|^2 / (det_v tau).
  bigrat forced = rep.m_value * bigrat(rep.tor_order * rep.tor_order) / (rep.det_v * rep.tau);
  rep.ok = (forced == rep.ratio);
  if (!rep.ok) throw std::logic_error("BSD identity does not force the Sha/index ratio");
  return rep;
}

std::vector<CartierRow> cartier_matrix(int64_t p, int r) {
  if (r < 2) throw std::invalid_argument("cartier_matrix: need r >= 2");
  if (p < 2) throw std::invalid_argument("cartier_matrix: need p >= 2");
  if (r % p == 0) throw std::domain_error("cartier_matrix: needs p coprime to r");

  // p^{-1} mod r
  int64_t pinv = 0;
  for (int64_t a = 1; a < r; ++a)
    if ((a * (p % r)) % r == 1) {
      pinv = a;
      break;
    }
  if (pinv == 0) throw std::domain_error("cartier_matrix: p not invertible mod r");

  std::vector<CartierRow> rows;
  std::vector<char> hit(r, 0);
  for (int i = 1; i < r; ++i) {
    CartierRow row;
    row.i = i;
    row.a = int((int64_t(i) * pinv) % r);
    if (row.a <= 0 || row.a >= r) throw std::logic_error("cartier: a out of range");
    row.b = (int64_t(row.a) * p - i) / r;
    if (int64_t(row.a) * p - row.b * r != i) throw std::logic_error("cartier: ap - br != i");
    if (row.b < 0 || row.b >= p) throw std::logic_error("cartier: b out of range");
    row.c.resize(row.b + 1);
    bigint binom = 1;
    for (int64_t j = 0; j <= row.b; ++j) {
      row.c[j] = int64_t((binom * binom) % p);
      binom = binom * (row.b - j) / (j + 1);
    }
    bool nonzero = false;
    for (int64_t cj : row.c) nonzero = nonzero || cj != 0;
    if (!nonzero) throw std::logic_error("cartier: c(t) vanished");
    if (hit[row.a]) throw std::logic_error("cartier: i -> a not injective");
    hit[row.a] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace glc
