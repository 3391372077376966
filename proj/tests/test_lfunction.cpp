#include "doctest.h"
#include "glc/lfunction.hpp"

#include <filesystem>
#include <numeric>

using namespace glc;

namespace {

// Re-derive the table set from a different group generator gen^a.
FieldTable twist_generator(const FieldTable& F, int64_t a) {
  REQUIRE(std::gcd(a, F.order()) == 1);
  FieldTable G = F;
  G.gen = F.exp(a);
  for (int64_t e = 0; e < F.order(); ++e) G.exp_tab[e] = static_cast<int32_t>(F.exp(a * e % F.order()));
  for (int64_t e = 0; e < F.order(); ++e) G.log_tab[G.exp_tab[e]] = static_cast<int32_t>(e);
  G.m_zero = G.log_tab[G.minus_one];
  for (int64_t m = 0; m < F.order(); ++m) {
    int64_t t = G.add_one(G.exp_tab[m]);
    G.zech[m] = (t == 0) ? G.zech_sentinel() : G.log_tab[t];
  }
  return G;
}

int64_t p1_trace_sum(const FieldTable& F, int d, int r) {
  int64_t total = local_trace(F, r, d, P1Point::at_infinity());
  for (int64_t b = 0; b < F.q; ++b) total += local_trace(F, r, d, P1Point::finite(b));
  return total;
}

}  // namespace

TEST_SUITE("lfunction") {

TEST_CASE("orbit decomposition examples") {
  OrbitSet a = orbit_decomposition(4, 3, 3);
  CHECK(a.S == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
  CHECK(a.orbits.size() == 2);
  CHECK(a.orbits[0].size() == 1);

  OrbitSet b = orbit_decomposition(2, 3, 3);
  CHECK(b.orbits.size() == 1);
  CHECK(b.orbits[0] == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});

  OrbitSet c = orbit_decomposition(5, 4, 2);
  CHECK(c.S == std::vector<std::pair<int, int>>{{1, 1}, {3, 1}});
  CHECK(c.orbits.size() == 2);

  CHECK_THROWS(orbit_decomposition(3, 4, 3));  // p | r
}

TEST_CASE("degree law on a small grid") {
  for (int d = 1; d <= 8; ++d)
    for (int r = 2; r <= 5; ++r)
      for (int64_t q : {2, 3, 5, 7}) {
        auto [p, k] = split_prime_power(q);
        (void)k;
        if ((d * r) % p == 0) continue;
        CHECK(static_cast<int64_t>(orbit_decomposition(q, d, r).S.size()) == l_degree(d, r));
      }
}

TEST_CASE("balanced orbits") {
  OrbitSet os = orbit_decomposition(4, 3, 3);
  CHECK(is_balanced(os.orbits[0], os, 2));  // needs the <2>-saturation
  CHECK(count_balanced_orbits(os, 2) == 2);

  OrbitSet os2 = orbit_decomposition(2, 3, 3);  // r | d, d | 2^1 + 1
  CHECK(count_balanced_orbits(os2, 2) == static_cast<int>(os2.orbits.size()));

  // 3 never divides 7^nu + 1, and <7>-saturation of {(1,1)} stays inside B
  OrbitSet os3 = orbit_decomposition(7, 3, 3);
  CHECK(count_balanced_orbits(os3, 7) == 0);
}

TEST_CASE("closed form L for (q=4, d=3, r=3) is (1-4T)^2") {
  FieldRegistry reg;
  LPoly L = closed_form_L(reg, 4, 3, 3);
  CHECK(L.coeffs == std::vector<bigint>{1, -8, 16});
}

TEST_CASE("d = 1 gives L = 1") {
  FieldRegistry reg;
  LPoly L = closed_form_L(reg, 5, 1, 2);
  CHECK(L.degree() == 0);
  CHECK(L.coeffs[0] == 1);
}

TEST_CASE("aggregated trace sum equals the P^1 sum of local traces") {
  FieldRegistry reg;
  struct Inst {
    int p, k, d, r;
  };
  for (auto inst : {Inst{2, 2, 3, 3}, Inst{5, 1, 4, 2}, Inst{3, 2, 4, 2}, Inst{2, 4, 3, 3}, Inst{5, 2, 3, 2}, Inst{2, 4, 5, 3}}) {
    const FieldTable& F = reg.get(inst.p, inst.k);
    CHECK(trace_sum(F, inst.d, inst.r) == p1_trace_sum(F, inst.d, inst.r));
  }
}

TEST_CASE("dual path L on small instances") {
  FieldRegistry reg;
  struct Inst {
    int64_t q;
    int d, r;
  };
  for (auto inst : {Inst{2, 3, 3}, Inst{5, 4, 2}, Inst{3, 4, 2}, Inst{3, 8, 2}, Inst{2, 5, 3}}) {
    LPoly closed = closed_form_L(reg, inst.q, inst.d, inst.r);
    LPoly brute = brute_force_L(reg, inst.q, inst.d, inst.r, static_cast<int>(l_degree(inst.d, inst.r)));
    CHECK(closed.coeffs == brute.coeffs);
  }
}

TEST_CASE("brute force truncation guard") {
  FieldRegistry reg;
  CHECK_THROWS(brute_force_L(reg, 2, 3, 3, 1));  // below degree bound 2
}

TEST_CASE("analytic rank") {
  LPoly L;
  L.q = 4;
  L.coeffs = {1, -8, 16};
  RankInfo ri = analytic_rank(L);
  CHECK(ri.rho == 2);
  CHECK(ri.leading == bigrat(1));

  LPoly one;
  one.q = 4;
  one.coeffs = {1};
  CHECK(analytic_rank(one).rho == 0);
  CHECK(analytic_rank(one).leading == bigrat(1));

  // (1 - qT)(1 - aT), a != q
  LPoly mixed;
  mixed.q = 5;
  int64_t a = 3;
  mixed.coeffs = {1, -(5 + a), 5 * a};
  RankInfo rm = analytic_rank(mixed);
  CHECK(rm.rho == 1);
  CHECK(rm.leading == bigrat(1) - bigrat(a, 5));
}

TEST_CASE("ord is bounded by the balanced orbit count") {
  FieldRegistry reg;
  struct Inst {
    int64_t q;
    int d, r;
  };
  for (auto inst : {Inst{7, 3, 3}, Inst{2, 3, 3}, Inst{4, 3, 3}, Inst{5, 4, 2}, Inst{3, 4, 2}}) {
    auto [p, k] = split_prime_power(inst.q);
    (void)k;
    OrbitSet os = orbit_decomposition(inst.q, inst.d, inst.r);
    RankInfo ri = analytic_rank(closed_form_L(reg, inst.q, inst.d, inst.r));
    CHECK(ri.rho <= count_balanced_orbits(os, p));
  }
}

TEST_CASE("rank formula") {
  CHECK(rank_formula(2, 3, 3) == 1);
  CHECK(rank_formula(4, 3, 3) == 2);  // = (r-1)(d-2): all inverse roots equal q here
  CHECK(rank_formula(9, 4, 4) == 6);
  CHECK(rank_formula(16, 3, 3) == 2);
  CHECK_THROWS(rank_formula(7, 3, 3));  // 3 never divides 7^nu + 1
}

TEST_CASE("closed form L is generator independent") {
  FieldRegistry base;
  LPoly expect = closed_form_L(base, 4, 3, 3);
  for (int64_t a : {2}) {  // units mod 3
    FieldRegistry reg;
    reg.put(2, 2, twist_generator(base.get(2, 2), a));
    CHECK(closed_form_L(reg, 4, 3, 3).coeffs == expect.coeffs);
  }
  // q = 9, d = 4, r = 2: twist by several units mod 8
  FieldRegistry base9;
  LPoly expect9 = closed_form_L(base9, 9, 4, 2);
  for (int64_t a : {3, 5, 7}) {
    FieldRegistry reg;
    reg.put(3, 2, twist_generator(base9.get(3, 2), a));
    CHECK(closed_form_L(reg, 9, 4, 2).coeffs == expect9.coeffs);
  }
}

TEST_CASE("field registry disk cache") {
  auto dir = std::filesystem::temp_directory_path() / "glc_reg_cache_test";
  std::filesystem::remove_all(dir);
  {
    FieldRegistry reg(int64_t(1) << 22, dir.string());
    const FieldTable& F = reg.get(3, 3);
    CHECK(F.q == 27);
  }
  CHECK(std::filesystem::exists(dir / "field_3_3.tab"));
  {
    FieldRegistry reg(int64_t(1) << 22, dir.string());
    const FieldTable& F = reg.get(3, 3);  // loaded from disk
    CHECK(F.q == 27);
    CHECK(F.pow(F.gen, 26) == 1);
  }
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
