#include "glc/monodromy.hpp"

#include <numeric>
#include <stdexcept>

namespace glc {

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

int mult_order(int64_t a, int s) {
  a %= s;
  if (a < 0) a += s;
  if (std::gcd(a, int64_t(s)) != 1) throw std::domain_error("mult_order: not a unit");
  int64_t x = a % s;
  int ord = 1;
  while (x != 1 % s) {
    x = (x * a) % s;
    ++ord;
  }
  return ord;
}

bool minus_one_in_cyclic(int64_t ell, int s) {
  if (s <= 2) return true;
  int64_t x = ell % s;
  int64_t target = s - 1;
  for (int k = 0; k < s; ++k) {
    if (x == target) return true;
    if (x == 1) return false;
    x = (x * (ell % s)) % s;
  }
  return false;
}

void require_ell(int r, int64_t ell) {
  if (r < 2) throw std::invalid_argument("need r >= 2");
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
  if (r % ell == 0) throw std::domain_error("ell must not divide r");
}

}  // namespace

std::vector<LambdaPrime> lambda_decomposition(int r, int64_t ell) {
  require_ell(r, ell);
  std::vector<LambdaPrime> out;
  int total = 0;
  for (int s = 2; s <= r; ++s) {
    if (r % s != 0) continue;
    LambdaPrime P;
    P.ell = ell;
    P.r = r;
    P.level = s;
    P.residue_degree = mult_order(ell, s);
    if (euler_phi(s) % P.residue_degree != 0) throw std::logic_error("order does not divide phi");
    P.count = euler_phi(s) / P.residue_degree;
    bool inert = minus_one_in_cyclic(ell, s);
    P.split_type = inert ? SplitType::inert : SplitType::split;
    if (s <= 2) {
      P.plus_residue_degree = 1;
      P.plus_count = 1;
    } else if (inert) {
      // -1 lies in <ell>, an element of order 2, so the order is even and
      // exactly halves in the quotient by {+-1}
      if (P.residue_degree % 2 != 0) throw std::logic_error("inert level with odd order");
      P.plus_residue_degree = P.residue_degree / 2;
      P.plus_count = (euler_phi(s) / 2) / P.plus_residue_degree;
    } else {
      P.plus_residue_degree = P.residue_degree;
      P.plus_count = (euler_phi(s) / 2) / P.plus_residue_degree;
    }
    if (P.residue_degree != P.plus_residue_degree &&
        P.residue_degree != 2 * P.plus_residue_degree)
      throw std::logic_error("plus residue degree inconsistent");
    total += P.count * P.residue_degree;
    out.push_back(P);
  }
  if (total != r - 1) throw std::logic_error("levels do not account for deg Psi_r");
  return out;
}

int flambda_f3_count(int r) {
  if (r < 2) throw std::invalid_argument("need r >= 2");
  int expected;
  if (r % 2 == 1)
    expected = 0;
  else if (r % 4 == 2)
    expected = 1;
  else
    expected = 2;

  if (r % 3 != 0) {  // the Lambda decomposition at ell = 3 exists; certify
    int found = 0;
    for (const LambdaPrime& P : lambda_decomposition(r, 3))
      if (P.plus_residue_degree == 1) found += P.plus_count;
    if (found != expected) throw std::logic_error("F_3 prime count disagrees with the case table");
  }
  return expected;
}

MonodromyPrediction predicted_monodromy(int r, int64_t ell) {
  require_ell(r, ell);
  MonodromyPrediction M;
  if (ell == 2) {
    M.structure = "D_2r";
    M.order = 2 * r;
    return M;
  }
  M.structure = "SL_2(Lambda^+)";
  M.order = 1;
  for (const LambdaPrime& P : lambda_decomposition(r, ell)) {
    for (int k = 0; k < P.plus_count; ++k) {
      bigint f;
      if (ell == 3 && P.level == 10) {
        f = 120;  // A~_5, a double cover of A_5, in place of SL_2(F_9)
      } else {
        bigint N = 1;
        for (int e = 0; e < P.plus_residue_degree; ++e) N *= ell;
        f = N * (N - 1) * (N + 1);
      }
      M.factors.push_back(f);
      M.order *= f;
    }
  }
  return M;
}

bool torsion_vanishing(int r, int64_t ell, ExtensionClass ext) {
  require_ell(r, ell);
  if (ext == ExtensionClass::abelian) return true;
  return ell > 3 || r % 2 == 1;
}

bool new_torsion_refinement(int r, int64_t ell) {
  require_ell(r, ell);
  return (r != 2 && r != 4) || ell > 3;
}

std::map<int, int> new_part_dimensions(int r) {
  if (r < 2) throw std::invalid_argument("need r >= 2");
  std::map<int, int> dims;
  int sum = 0;
  for (int s = 1; s <= r; ++s) {
    if (r % s != 0) continue;
    dims[s] = s == 1 ? 0 : euler_phi(s);
    sum += dims[s];
  }
  if (sum != r - 1) throw std::logic_error("new-part dimensions do not sum to the genus");
  return dims;
}

}  // namespace glc
