#include "doctest.h"
#include "glc/ffield.hpp"

#include <cstdio>
#include <filesystem>
#include <vector>

using namespace glc;

namespace {

// independent oracle: schoolbook polynomial arithmetic mod (modulus, p)
int64_t slow_mul(const FieldTable& F, int64_t a, int64_t b) {
  std::vector<int> pa, pb;
  for (int64_t t = a; t > 0; t /= F.p) pa.push_back(static_cast<int>(t % F.p));
  for (int64_t t = b; t > 0; t /= F.p) pb.push_back(static_cast<int>(t % F.p));
  if (pa.empty() || pb.empty()) return 0;
  std::vector<int> c(pa.size() + pb.size() - 1, 0);
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j) c[i + j] = (c[i + j] + pa[i] * pb[j]) % F.p;
  // reduce mod modulus
  for (int deg = static_cast<int>(c.size()) - 1; deg >= F.k; --deg) {
    int lead = c[deg];
    if (lead) {
      for (int i = 0; i <= F.k; ++i) {
        int idx = deg - F.k + i;
        c[idx] = ((c[idx] - lead * F.modulus[i]) % F.p + F.p) % F.p;
      }
    }
  }
  int64_t code = 0;
  for (int i = std::min<int>(F.k, static_cast<int>(c.size())) - 1; i >= 0; --i) code = code * F.p + c[i];
  return code;
}

}  // namespace

TEST_SUITE("ffield") {

TEST_CASE("forced small fields") {
  FieldTable f4 = build_field(2, 2);
  CHECK(f4.q == 4);
  CHECK(f4.modulus == std::vector<int>{1, 1, 1});  // x^2+x+1 is the only choice
  CHECK(f4.order() == 3);
  CHECK(f4.pow(f4.gen, 3) == 1);
  CHECK(f4.pow(f4.gen, 1) != 1);

  FieldTable f5 = build_field(5, 1);
  CHECK(f5.gen == 2);  // smallest generator of F_5^x

  FieldTable f9 = build_field(3, 2);
  CHECK(f9.q == 9);
  CHECK(f9.modulus == std::vector<int>{1, 0, 1});  // x^2+1, lex-least irreducible
  CHECK(f9.pow(f9.gen, 8) == 1);
  CHECK(f9.pow(f9.gen, 4) != 1);

  FieldTable f16 = build_field(2, 4);
  CHECK(f16.modulus == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
}

TEST_CASE("dlog basics") {
  FieldTable F = build_field(2, 2);
  CHECK(F.dlog(F.gen) == 1);
  CHECK(F.dlog(1) == 0);
  int64_t w = F.gen;
  CHECK(F.mul(w, F.mul(w, w)) == 1);  // w * w^2 = 1
}

TEST_CASE("mul agrees with schoolbook polynomial arithmetic") {
  for (auto [p, k] : {std::pair<int, int>{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    FieldTable F = build_field(p, k);
    for (int64_t a = 0; a < F.q; ++a)
      for (int64_t b = 0; b < F.q; ++b) CHECK(F.mul(a, b) == slow_mul(F, a, b));
  }
}

TEST_CASE("exp/log/zech tables are mutually consistent") {
  for (auto [p, k] : {std::pair<int, int>{2, 5}, {3, 3}, {7, 2}, {13, 1}}) {
    FieldTable F = build_field(p, k);
    for (int64_t e = 0; e < F.order(); ++e) CHECK(F.dlog(F.exp(e)) == e);
    for (int64_t x = 1; x < F.q; ++x) CHECK(F.exp(F.dlog(x)) == x);
    // zech[m] = dlog(1 + g^m)
    int sentinels = 0;
    for (int64_t m = 0; m < F.order(); ++m) {
      int64_t t = F.add(1, F.exp(m));
      if (t == 0) {
        ++sentinels;
        CHECK(F.zech[m] == F.zech_sentinel());
        CHECK(m == F.m_zero);
      } else {
        CHECK(F.exp(F.zech[m]) == t);
      }
    }
    CHECK(sentinels == 1);
    // dlog_add covers the generic addition path
    for (int64_t a = 1; a < F.q; ++a)
      for (int64_t b = 1; b < F.q; ++b) {
        int64_t s = F.add(a, b);
        int64_t got = F.dlog_add(F.dlog(a), F.dlog(b));
        if (s == 0)
          CHECK(got == -1);
        else
          CHECK(got == F.dlog(s));
      }
  }
}

TEST_CASE("log is a homomorphism") {
  FieldTable F = build_field(3, 3);
  for (int64_t a = 1; a < F.q; ++a)
    for (int64_t b = 1; b < F.q; ++b)
      CHECK((F.dlog(a) + F.dlog(b)) % F.order() == F.dlog(F.mul(a, b)));
}

TEST_CASE("frobenius is a field homomorphism fixing exactly F_p") {
  for (auto [p, k] : {std::pair<int, int>{2, 6}, {3, 4}, {5, 3}}) {
    FieldTable F = build_field(p, k);
    for (int64_t a = 0; a < F.q; ++a) {
      for (int64_t b = 0; b < F.q; ++b) {
        CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        if (a && b) CHECK(F.pow(F.mul(a, b), p) == F.mul(F.pow(a, p), F.pow(b, p)));
      }
      bool fixed = F.pow(a, p) == a;
      CHECK(fixed == (a < p));  // constants are exactly the prime field
    }
  }
}

TEST_CASE("field axioms spot checks") {
  FieldTable F = build_field(5, 2);
  for (int64_t a = 0; a < F.q; ++a) {
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.sub(a, a) == 0);
    CHECK(F.pow(a, 1) == a);
  }
  CHECK(F.pow(0, 0) == 1);
  CHECK(F.from_prime_field(-1) == F.minus_one);
}

TEST_CASE("errors") {
  CHECK_THROWS(build_field(4, 1));   // not prime
  CHECK_THROWS(build_field(2, 0));   // bad degree
  CHECK_THROWS(build_field(2, 23));  // default cap is 2^22
  FieldTable F = build_field(2, 2);
  CHECK_THROWS(F.inv(0));
  CHECK_THROWS(F.dlog(0));
  CHECK_THROWS(F.pow(0, -1));
}

TEST_CASE("binary cache round trip") {
  FieldTable F = build_field(3, 4);
  auto path = std::filesystem::temp_directory_path() / "glc_ffield_cache_test.tab";
  save_field(F, path.string());
  FieldTable G = load_field(path.string());
  CHECK(G.p == F.p);
  CHECK(G.k == F.k);
  CHECK(G.q == F.q);
  CHECK(G.gen == F.gen);
  CHECK(G.modulus == F.modulus);
  CHECK(G.exp_tab == F.exp_tab);
  CHECK(G.log_tab == F.log_tab);
  CHECK(G.zech == F.zech);
  CHECK(G.m_zero == F.m_zero);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
