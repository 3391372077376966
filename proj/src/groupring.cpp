#include "glc/groupring.hpp"

#include <algorithm>
#include <cstdlib>

namespace glc {

QGroupRingElem to_rational(const GroupRingElem& x) {
  QGroupRingElem q(x.d, x.r);
  for (size_t k = 0; k < x.c.size(); ++k) q.c[k] = bigrat(x.c[k]);
  return q;
}

IdealBasis ideal_basis(int d, int r) {
  if (d < 3 || r < 2) throw std::invalid_argument("ideal_basis needs d >= 3, r >= 2");
  IdealBasis ib;
  ib.d = d;
  ib.r = r;
  for (int i = 0; i < d; ++i) {
    GroupRingElem f(d, r);
    for (int j = 0; j < r; ++j) f.at(i, j) = 1;
    ib.rows.push_back(std::move(f));
  }
  for (int j = 1; j < r; ++j) {
    GroupRingElem dj(d, r);
    for (int i = 0; i < d; ++i) {
      dj.at(i, j) += 1;
      dj.at(i, j - 1) -= 1;
    }
    ib.rows.push_back(std::move(dj));
  }
  for (int j = 1; j < r; ++j) {
    GroupRingElem ej(d, r);
    for (int i = 0; i < d; ++i) {
      ej.at(i, j + d - i) += 1;
      ej.at(i, j - 1 + d - i) -= 1;
    }
    ib.rows.push_back(std::move(ej));
  }
  return ib;
}

std::vector<std::vector<bigint>> IdealBasis::matrix() const {
  std::vector<std::vector<bigint>> m;
  m.reserve(rows.size());
  for (const auto& e : rows) m.push_back(e.c);
  return m;
}

namespace {

std::vector<std::vector<bigint>> identity_matrix(int n) {
  std::vector<std::vector<bigint>> m(n, std::vector<bigint>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithNormalForm smith_normal_form(std::vector<std::vector<bigint>> a) {
  const int k = static_cast<int>(a.size());
  const int n = k ? static_cast<int>(a[0].size()) : 0;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged matrix");

  SmithNormalForm s;
  s.U = identity_matrix(k);
  s.V = identity_matrix(n);
  s.V_inv = identity_matrix(n);

  auto row_swap = [&](int x, int y) {
    std::swap(a[x], a[y]);
    std::swap(s.U[x], s.U[y]);
  };
  auto row_sub = [&](int dst, int src, const bigint& q) {  // row dst -= q * row src
    for (int c = 0; c < n; ++c) a[dst][c] -= q * a[src][c];
    for (int c = 0; c < k; ++c) s.U[dst][c] -= q * s.U[src][c];
  };
  auto row_neg = [&](int x) {
    for (int c = 0; c < n; ++c) a[x][c] = -a[x][c];
    for (int c = 0; c < k; ++c) s.U[x][c] = -s.U[x][c];
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < k; ++i) std::swap(a[i][x], a[i][y]);
    for (int i = 0; i < n; ++i) std::swap(s.V[i][x], s.V[i][y]);
    std::swap(s.V_inv[x], s.V_inv[y]);
  };
  auto col_sub = [&](int dst, int src, const bigint& q) {  // col dst -= q * col src
    for (int i = 0; i < k; ++i) a[i][dst] -= q * a[i][src];
    for (int i = 0; i < n; ++i) s.V[i][dst] -= q * s.V[i][src];
    for (int c = 0; c < n; ++c) s.V_inv[src][c] += q * s.V_inv[dst][c];
  };

  const int mn = std::min(k, n);
  for (int t = 0; t < mn; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < k; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        t = mn;  // remaining block is zero
        break;
      }
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < k; ++i)
        if (a[i][t] != 0) {
          row_sub(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) dirty = true;
        }
      for (int j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          col_sub(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) dirty = true;
        }
      if (dirty) continue;  // smaller residues appeared; re-pivot

      int bi = -1, bj = -1;
      for (int i = t + 1; i < k && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) {
        if (a[t][t] < 0) row_neg(t);
        break;
      }
      row_sub(t, bi, bigint(-1));  // fold row bi in and redo the pivot
      (void)bj;
    }
    if (t >= mn) break;
  }

  s.diag.resize(mn);
  for (int t = 0; t < mn; ++t) s.diag[t] = a[t][t];
  return s;
}

ModuleStructure module_structure(int d, int r) {
  IdealBasis ib = ideal_basis(d, r);
  ModuleStructure ms;
  ms.d = d;
  ms.r = r;
  auto m = ib.matrix();
  const int k = static_cast<int>(m.size());
  const int n = d * r;
  ms.snf = smith_normal_form(std::move(m));
  for (const auto& s : ms.snf.diag) {
    if (s == 0) throw std::runtime_error("ideal basis rows are dependent");
    if (s == 1)
      ms.unit_factor_count += 1;
    else
      ms.torsion.push_back(s);
  }
  for (int t = k; t < n; ++t) ms.free_basis.push_back(ms.snf.V_inv[t]);
  return ms;
}

std::vector<bigint> torsion_structure(int d, int r) {
  if (r < 2 || d % r != 0) throw std::invalid_argument("torsion_structure needs r | d");
  return module_structure(d, r).torsion;
}

QGroupRingElem splitting_pi(int d, int r) {
  if (r < 2 || d % r != 0) throw std::invalid_argument("splitting needs r | d");
  QGroupRingElem pi(d, r);
  pi.at(0, 0) += 1;
  const bigrat two_rd(2, static_cast<long long>(r) * d);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) pi.at(i, j) += two_rd;
  const bigrat inv_d(1, d);
  for (int i = 0; i < d; ++i) pi.at(i, 0) -= inv_d;
  for (int i = 0; i < d; ++i) pi.at(i, d - i) -= inv_d;
  const bigrat inv_r(1, r);
  for (int j = 0; j < r; ++j) pi.at(0, j) -= inv_r;
  return pi;
}

QGroupRingElem splitting_rho(const QGroupRingElem& x) { return x * splitting_pi(x.d, x.r); }

bigrat group_pairing(int d, int r, long long i, long long j) {
  if (r < 2 || d % r != 0) throw std::invalid_argument("group_pairing needs r | d");
  const long long im = ((i % d) + d) % d;
  const long long jm = ((j % r) + r) % r;
  const long long ir = im % r;

  long long num;
  if (im == 0 && jm == 0)
    num = static_cast<long long>(r - 1) * (d - 2);
  else if (jm == 0 && ir != 0)
    num = 2 - r;
  else if (jm == 0)
    num = 2 - 2 * r;  // i = 0 mod r but not mod d
  else if (im == 0)
    num = 2 - d;
  else if (ir != 0 && (ir + jm) % r == 0)
    num = 2 - r;
  else
    num = 2;
  bigrat closed(num, static_cast<long long>(r) * d);

  // Dual path: read the identity coefficient off rho(sigma^i tau^j) = sigma^i tau^j * pi.
  bigrat direct = splitting_pi(d, r).at(-im, -jm);
  if (closed != direct) throw std::runtime_error("group pairing table disagrees with the splitting");
  return closed;
}

bigrat group_pairing_elems(const QGroupRingElem& x, const QGroupRingElem& y) {
  QGroupRingElem rx = splitting_rho(x), ry = splitting_rho(y);
  bigrat acc;
  for (size_t k = 0; k < rx.c.size(); ++k) acc += rx.c[k] * ry.c[k];
  return acc;
}

namespace {

// sum_{j=0}^{r-1} sum_{k=0}^{r-1-j} sum_{i == k mod r} sigma^i tau^j
GroupRingElem staircase_sum(int d, int r) {
  GroupRingElem ts(d, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k + j <= r - 1; ++k)
      for (int i = k; i < d; i += r) ts.at(i, j) += 1;
  return ts;
}

}  // namespace

bool check_torsion_identities(int d, int r) {
  if (r < 2 || d % r != 0) throw std::invalid_argument("torsion identities need r | d");
  IdealBasis ib = ideal_basis(d, r);
  const auto f = [&](int i) -> const GroupRingElem& { return ib.rows[i]; };
  const auto dj = [&](int j) -> const GroupRingElem& { return ib.rows[d + (j - 1)]; };
  const auto ej = [&](int j) -> const GroupRingElem& { return ib.rows[d + (r - 1) + (j - 1)]; };
  const GroupRingElem ts = staircase_sum(d, r);

  if (r % 2 == 1) {
    GroupRingElem rho_odd(d, r);
    for (int j = 1; j < r; ++j) rho_odd += (bigint(j) * (j - r) / 2) * (dj(j) - ej(j));
    for (int j = 0; j < r; ++j)
      for (int i = j; i < d; i += r) rho_odd += bigint(r - j) * f(i);
    return rho_odd == bigint(r) * ts;
  }

  GroupRingElem rho_even(d, r);
  for (int j = 1; j < r; ++j) rho_even += (bigint(j) * (j - r)) * (dj(j) - ej(j));
  for (int j = 0; j < r; ++j)
    for (int i = j; i < d; i += r) rho_even += bigint(2) * (r - j) * f(i);
  if (rho_even != bigint(2) * r * ts) return false;

  GroupRingElem rho_even2(d, r);
  for (int j = 1; j < r; ++j) rho_even2 += (bigint(1 - j) * (j - r) / 2) * (dj(j) - ej(j));
  for (int j = 0; j < r; ++j)
    for (int i = j; i < d; i += r) rho_even2 -= bigint(r - j) * f(i);
  GroupRingElem rhs(d, r);
  for (int i = 0; i < d; ++i) {
    rhs.at(i, 0) += 1;
    rhs.at(i, -i) -= 1;
  }
  rhs -= bigint(2) * ts;
  return rho_even2 == bigint(r / 2) * rhs;
}

bigint det_bareiss(std::vector<std::vector<bigint>> m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return 1;
  int sign = 1;
  bigint prev = 1;
  for (int t = 0; t + 1 < n; ++t) {
    if (m[t][t] == 0) {
      int piv = -1;
      for (int i = t + 1; i < n; ++i)
        if (m[i][t] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[t], m[piv]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) m[i][j] = (m[t][t] * m[i][j] - m[i][t] * m[t][j]) / prev;
    prev = m[t][t];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::optional<std::vector<bigrat>> solve_row_combination(const std::vector<std::vector<bigint>>& rows,
                                                         const std::vector<bigrat>& target) {
  const int k = static_cast<int>(rows.size());
  const int n = static_cast<int>(target.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("row length mismatch");

  // Augmented system A y = target with A[c][t] = rows[t][c].
  std::vector<std::vector<bigrat>> a(n, std::vector<bigrat>(k + 1));
  for (int c = 0; c < n; ++c) {
    for (int t = 0; t < k; ++t) a[c][t] = bigrat(rows[t][c]);
    a[c][k] = target[c];
  }

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const bigrat lead = a[row][col];
    for (int c = col; c <= k; ++c) a[row][c] /= lead;
    for (int i = 0; i < n; ++i)
      if (i != row && a[i][col] != 0) {
        const bigrat q = a[i][col];
        for (int c = col; c <= k; ++c) a[i][c] -= q * a[row][c];
      }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;

  std::vector<bigrat> y(k);
  for (int i = 0; i < row; ++i) y[pivot_col[i]] = a[i][k];
  return y;
}

}  // namespace glc
