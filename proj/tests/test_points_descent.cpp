#include "doctest.h"
#include "glc/points_descent.hpp"

using namespace glc;

TEST_SUITE("points_descent") {

TEST_CASE("instance construction") {
  FieldRegistry reg;
  DescentInstance a = make_descent_instance(reg, 2, 1, 3);
  CHECK(a.d == 3);
  CHECK(a.F->q == 4);
  CHECK(a.F->pow(a.zeta_d, 3) == 1);
  CHECK(a.zeta_d != 1);
  CHECK(a.zeta_r == a.zeta_d);

  DescentInstance b = make_descent_instance(reg, 2, 2, 5);
  CHECK(b.d == 5);
  CHECK(b.F->q == 16);
  CHECK(b.F->pow(b.zeta_d, 5) == 1);

  CHECK_THROWS(make_descent_instance(reg, 2, 1, 2));  // 2 does not divide 3
  CHECK_THROWS(make_descent_instance(reg, 3, 1, 3));  // 3 does not divide 4
  CHECK_THROWS(make_descent_instance(reg, 2, 0, 3));
}

TEST_CASE("explicit points lie on the curve") {
  FieldRegistry reg;
  for (auto [p, nu, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 5}, {3, 1, 4}, {5, 1, 3}, {5, 1, 6}}) {
    DescentInstance inst = make_descent_instance(reg, p, nu, r);
    for (int j = 0; j < inst.r; ++j)
      for (int i = 0; i < inst.d; ++i) {
        CurvePoint pt = explicit_point(inst, i, j);
        CHECK(on_curve(inst, pt));
      }
  }
}

TEST_CASE("P_00 for (p=2, d=3, r=3) is (u, u(u+1))") {
  FieldRegistry reg;
  DescentInstance inst = make_descent_instance(reg, 2, 1, 3);
  CurvePoint pt = explicit_point(inst, 0, 0);
  CHECK(pt.x == UPoly{0, 1});
  CHECK(pt.y == UPoly{0, 1, 1});  // u + u^2 = u(u+1)
}

TEST_CASE("index periodicity") {
  FieldRegistry reg;
  DescentInstance inst = make_descent_instance(reg, 2, 2, 5);
  CurvePoint a = explicit_point(inst, 1, 2);
  CurvePoint b = explicit_point(inst, 1 + 5, 2 + 5);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
}

TEST_CASE("xT images") {
  FieldRegistry reg;
  DescentInstance inst = make_descent_instance(reg, 2, 1, 3);
  KdClassTriple v = xT_point(inst, 1, 0);
  const int64_t z = inst.zeta_d;
  CHECK(v.num[0] == UPoly{0, z});
  CHECK(v.num[1] == UPoly{1, z});
  CHECK(v.num[2] == UPoly{0, z, 0, 1});

  KdClassTriple q1 = xT_q1(inst);
  CHECK(q1.num[0] == UPoly{inst.F->minus_one});
  CHECK(q1.den[1].size() == 4);  // 1 - u^3
}

TEST_CASE("pr projections") {
  FieldRegistry reg;
  for (auto [p, nu, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 5}, {5, 1, 3}}) {
    DescentInstance inst = make_descent_instance(reg, p, nu, r);
    for (int i = 0; i < inst.d; ++i) {
      std::vector<int> row = pr_projection(inst, xT_point(inst, i, 4));
      for (int k = 0; k < inst.d; ++k) CHECK(row[k] == (k == i ? 1 : 0));
    }
    std::vector<int> q1 = pr_projection(inst, xT_q1(inst));
    for (int k = 0; k < inst.d; ++k) CHECK(q1[k] == inst.r - 1);  // -1 mod r

    std::vector<int> q2 = pr_q2(inst);
    for (int k = 0; k < inst.d; ++k) CHECK(q2[k] == ((-k) % inst.r + inst.r) % inst.r);
  }
}

TEST_CASE("norm relation at the linear places") {
  FieldRegistry reg;
  for (auto [p, nu, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 5}, {3, 1, 2}, {3, 1, 4}}) {
    DescentInstance inst = make_descent_instance(reg, p, nu, r);
    for (int i = 0; i < inst.d; ++i) CHECK(norm_relation_ok(inst, xT_point(inst, i, 0)));
    CHECK(norm_relation_ok(inst, xT_q1(inst)));
  }
}

TEST_CASE("descent rank bound") {
  FieldRegistry reg;
  DescentInstance a = make_descent_instance(reg, 2, 1, 3);
  DescentRank ra = descent_rank_bound(a);
  CHECK(ra.zeta_rank == 1);
  CHECK(ra.z_rank == 2);
  CHECK(ra.pr_identity);
  CHECK(ra.torsion_independent);
  CHECK(ra.conditional);

  DescentRank rb = descent_rank_bound(make_descent_instance(reg, 2, 2, 5));
  CHECK(rb.zeta_rank == 3);
  CHECK(rb.z_rank == 12);

  DescentRank rc = descent_rank_bound(make_descent_instance(reg, 5, 1, 3));
  CHECK(rc.z_rank == 8);

  CHECK_THROWS(descent_rank_bound(make_descent_instance(reg, 3, 1, 2)));  // r = 2 not odd
  CHECK_THROWS(descent_rank_bound(make_descent_instance(reg, 3, 1, 4)));  // r = 4 not prime
}

TEST_CASE("vanishing checks") {
  FieldRegistry reg;
  for (auto [p, nu, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 5}, {3, 1, 4}, {5, 1, 2}, {5, 1, 6}})
    CHECK(vanishing_checks(make_descent_instance(reg, p, nu, r)));
}

TEST_CASE("descent torsion shape matches the module computation") {
  FieldRegistry reg;
  for (auto [p, nu, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 5}, {3, 1, 2}, {3, 1, 4}, {5, 1, 6}})
    CHECK(torsion_consistency(make_descent_instance(reg, p, nu, r)));
}

}  // TEST_SUITE
