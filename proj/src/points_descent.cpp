#include "glc/points_descent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "glc/groupring.hpp"

namespace glc {

namespace {

void fp_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool fp_is_zero(UPoly a) {
  fp_trim(a);
  return a.empty();
}

UPoly fp_add(const FieldTable& F, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t k = 0; k < b.size(); ++k) a[k] = F.add(a[k], b[k]);
  return a;
}

UPoly fp_scale(const FieldTable& F, UPoly a, int64_t s) {
  for (auto& c : a) c = F.mul(c, s);
  return a;
}

UPoly fp_sub(const FieldTable& F, UPoly a, const UPoly& b) { return fp_add(F, std::move(a), fp_scale(F, b, F.minus_one)); }

UPoly fp_mul(const FieldTable& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly p(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) p[i + j] = F.add(p[i + j], F.mul(a[i], b[j]));
  }
  return p;
}

UPoly fp_pow(const FieldTable& F, UPoly a, int e) {
  UPoly out{1};
  while (e > 0) {
    if (e & 1) out = fp_mul(F, out, a);
    a = fp_mul(F, a, a);
    e >>= 1;
  }
  return out;
}

int64_t fp_eval(const FieldTable& F, const UPoly& a, int64_t x) {
  int64_t acc = 0;
  for (size_t k = a.size(); k-- > 0;) acc = F.add(F.mul(acc, x), a[k]);
  return acc;
}

// Multiplicity of the root `root` (the polynomial must be nonzero).
int fp_root_multiplicity(const FieldTable& F, UPoly f, int64_t root) {
  fp_trim(f);
  if (f.empty()) throw std::invalid_argument("valuation of the zero polynomial");
  int m = 0;
  while (f.size() > 1 && fp_eval(F, f, root) == 0) {
    UPoly q(f.size() - 1);
    int64_t acc = 0;
    for (size_t k = f.size(); k-- > 1;) {
      acc = F.add(f[k], F.mul(root, acc));
      q[k - 1] = acc;
    }
    f = std::move(q);
    ++m;
  }
  return m;
}

int64_t place_root(const DescentInstance& inst, int k) {
  // the place u + zeta_d^(-k) has root u = -zeta_d^(-k)
  const FieldTable& F = *inst.F;
  return F.neg(F.pow(inst.zeta_d, (inst.d - k % inst.d) % inst.d));
}

bool small_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

int mod_r_rank(std::vector<std::vector<int>> m, int r) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  auto inv_mod = [&](int a) {
    int out = 1, b = a % r, e = r - 2;  // r prime
    for (; e > 0; e >>= 1, b = b * b % r)
      if (e & 1) out = out * b % r;
    return out;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] % r != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const int inv = inv_mod(((m[rank][col] % r) + r) % r);
    for (int c = col; c < cols; ++c) m[rank][c] = ((m[rank][c] % r) + r) % r * inv % r;
    for (int i = 0; i < rows; ++i)
      if (i != rank && m[i][col] % r != 0) {
        const int q = ((m[i][col] % r) + r) % r;
        for (int c = col; c < cols; ++c) m[i][c] = ((m[i][c] - q * m[rank][c]) % r + r) % r;
      }
    ++rank;
  }
  return rank;
}

}  // namespace

DescentInstance make_descent_instance(FieldRegistry& reg, int64_t p, int nu, int r) {
  if (nu < 1) throw std::invalid_argument("descent instance needs nu >= 1");
  int64_t dq = 1;
  for (int k = 0; k < nu; ++k) dq *= p;
  if (dq + 1 > (int64_t(1) << 30)) throw std::invalid_argument("d too large");
  const int d = static_cast<int>(dq + 1);
  if (r < 2 || d % r != 0) throw std::invalid_argument("descent instance needs r | d = p^nu + 1");

  DescentInstance inst;
  inst.p = p;
  inst.nu = nu;
  inst.d = d;
  inst.r = r;
  inst.F = &reg.get(static_cast<int>(p), 2 * nu);
  const int64_t m = inst.F->order();
  if (m % d != 0) throw std::logic_error("mu_d not contained in the ambient field");
  inst.zeta_d = inst.F->exp(m / d);
  for (int q = 2; q <= d; ++q)
    if (d % q == 0 && small_prime(q) && inst.F->pow(inst.zeta_d, d / q) == 1)
      throw std::logic_error("zeta_d does not have exact order d");
  if (inst.F->pow(inst.zeta_d, d) != 1) throw std::logic_error("zeta_d^d != 1");
  inst.zeta_r = inst.F->pow(inst.zeta_d, d / r);
  return inst;
}

CurvePoint explicit_point(const DescentInstance& inst, long long i, long long j) {
  const FieldTable& F = *inst.F;
  const int64_t zi = F.pow(inst.zeta_d, static_cast<int64_t>(((i % inst.d) + inst.d) % inst.d));
  const int64_t zj = F.pow(inst.zeta_r, static_cast<int64_t>(((j % inst.r) + inst.r) % inst.r));

  CurvePoint pt;
  pt.x = {0, zi};
  UPoly base = {1, zi};  // zeta_d^i u + 1
  pt.y = fp_mul(F, {0, F.mul(zj, zi)}, fp_pow(F, base, inst.d / inst.r));
  if (!on_curve(inst, pt)) throw std::runtime_error("explicit point is not on the curve");
  return pt;
}

bool on_curve(const DescentInstance& inst, const CurvePoint& pt) {
  const FieldTable& F = *inst.F;
  UPoly t(inst.d + 1, 0);
  t[inst.d] = 1;  // u^d
  UPoly rhs = fp_mul(F, fp_pow(F, pt.x, inst.r - 1), fp_mul(F, fp_add(F, pt.x, {1}), fp_add(F, pt.x, t)));
  return fp_is_zero(fp_sub(F, fp_pow(F, pt.y, inst.r), rhs));
}

KdClassTriple xT_point(const DescentInstance& inst, long long i, long long j) {
  const FieldTable& F = *inst.F;
  (void)j;  // the image only depends on i
  const int64_t zi = F.pow(inst.zeta_d, static_cast<int64_t>(((i % inst.d) + inst.d) % inst.d));
  KdClassTriple v;
  v.num[0] = {0, zi};
  v.num[1] = {1, zi};
  v.num[2] = UPoly(inst.d + 1, 0);
  v.num[2][1] = zi;
  v.num[2][inst.d] = 1;  // zeta_d^i u + u^d
  for (auto& den : v.den) den = {1};
  return v;
}

KdClassTriple xT_q1(const DescentInstance& inst) {
  const FieldTable& F = *inst.F;
  KdClassTriple v;
  v.num[0] = {F.minus_one};
  v.den[0] = {1};
  UPoly one_minus_t(inst.d + 1, 0);
  one_minus_t[0] = 1;
  one_minus_t[inst.d] = F.minus_one;  // 1 - u^d
  v.num[1] = {1};
  v.den[1] = one_minus_t;
  UPoly t_minus_one(inst.d + 1, 0);
  t_minus_one[0] = F.minus_one;
  t_minus_one[inst.d] = 1;
  v.num[2] = t_minus_one;
  v.den[2] = {1};
  return v;
}

std::vector<int> pr_projection(const DescentInstance& inst, const KdClassTriple& v) {
  const FieldTable& F = *inst.F;
  std::vector<int> out(inst.d);
  for (int k = 0; k < inst.d; ++k) {
    const int64_t root = place_root(inst, k);
    int val = fp_root_multiplicity(F, v.num[1], root) - fp_root_multiplicity(F, v.den[1], root);
    out[k] = ((val % inst.r) + inst.r) % inst.r;
  }
  return out;
}

std::vector<int> pr_q2(const DescentInstance& inst) {
  std::vector<int> out(inst.d, 0);
  for (int i = 0; i < inst.d; ++i) {
    const std::vector<int> row = pr_projection(inst, xT_point(inst, i, 0));
    for (int k = 0; k < inst.d; ++k) out[k] = (out[k] + (inst.d - i) * row[k]) % inst.r;
  }
  return out;
}

bool norm_relation_ok(const DescentInstance& inst, const KdClassTriple& v) {
  const FieldTable& F = *inst.F;
  for (int k = 0; k < inst.d; ++k) {
    const int64_t root = place_root(inst, k);
    auto val = [&](int c) {
      return fp_root_multiplicity(F, v.num[c], root) - fp_root_multiplicity(F, v.den[c], root);
    };
    if ((val(1) + val(2) - val(0)) % inst.r != 0) return false;
  }
  return true;
}

DescentRank descent_rank_bound(const DescentInstance& inst) {
  if (inst.r == 2 || !small_prime(inst.r)) throw std::invalid_argument("descent needs r an odd prime");

  DescentRank out;
  out.zeta_rank = inst.d - 2;
  out.z_rank = (inst.r - 1) * (inst.d - 2);

  out.pr_identity = true;
  for (int i = 0; i < inst.d && out.pr_identity; ++i) {
    const std::vector<int> row = pr_projection(inst, xT_point(inst, i, 0));
    for (int k = 0; k < inst.d; ++k)
      if (row[k] != (k == i ? 1 : 0)) out.pr_identity = false;
  }
  if (!out.pr_identity) throw std::runtime_error("pr matrix of the P_{i,0} is not the identity");

  std::vector<std::vector<int>> tors = {pr_projection(inst, xT_q1(inst)), pr_q2(inst)};
  out.torsion_independent = mod_r_rank(tors, inst.r) == 2;
  if (!out.torsion_independent) throw std::runtime_error("pr(Q_1), pr(Q_2) are dependent");
  return out;
}

bool vanishing_checks(const DescentInstance& inst) {
  const FieldTable& F = *inst.F;
  const int d = inst.d, r = inst.r;

  std::vector<CurvePoint> pts;
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) pts.push_back(explicit_point(inst, i, j));
  auto pt = [&](int i, int j) -> const CurvePoint& { return pts[static_cast<size_t>(j) * d + i]; };

  for (int jp = 0; jp < r; ++jp)
    for (int ip = 0; ip < d; ++ip) {
      const CurvePoint& P = pt(ip, jp);
      const UPoly xp1 = fp_add(F, P.x, {1});

      // x - zeta_d^i u vanishes exactly at i = i'
      for (int i = 0; i < d; ++i) {
        UPoly diff = fp_sub(F, P.x, {0, F.pow(inst.zeta_d, i)});
        if (fp_is_zero(diff) != (i == ip)) return false;
      }

      // Delta_j = zeta_r^(-j) y - x (x+1)^(d/r) vanishes exactly at j = j'
      const UPoly delta_rhs = fp_mul(F, P.x, fp_pow(F, xp1, d / r));
      for (int j = 0; j < r; ++j) {
        UPoly lhs = fp_scale(F, P.y, F.pow(inst.zeta_r, (r - j) % r));
        if (fp_is_zero(fp_sub(F, lhs, delta_rhs)) != (j == jp)) return false;
      }

      // Gamma_j = zeta_r^(-j) y x^(d/r - 1) - u^(d/r) (x+1)^(d/r) vanishes iff i' + j' = j mod r
      UPoly u_pow(d / r + 1, 0);
      u_pow[d / r] = 1;
      const UPoly gamma_rhs = fp_mul(F, u_pow, fp_pow(F, xp1, d / r));
      const UPoly yx = fp_mul(F, P.y, fp_pow(F, P.x, d / r - 1));
      for (int j = 0; j < r; ++j) {
        UPoly lhs = fp_scale(F, yx, F.pow(inst.zeta_r, (r - j) % r));
        if (fp_is_zero(fp_sub(F, lhs, gamma_rhs)) != ((ip + jp) % r == j)) return false;
      }
    }
  return true;
}

bool torsion_consistency(const DescentInstance& inst) {
  std::vector<bigint> expect;
  if (inst.r % 2 == 1)
    expect = {bigint(inst.r), bigint(inst.r), bigint(inst.r)};
  else if (inst.r == 2)
    expect = {bigint(2), bigint(4)};
  else
    expect = {bigint(inst.r / 2), bigint(inst.r), bigint(2 * inst.r)};
  return torsion_structure(inst.d, inst.r) == expect;
}

}  // namespace glc
