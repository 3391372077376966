#include "glc/heights.hpp"

namespace glc {

namespace {

bigint int_pow(bigint b, int e) {
  bigint out(1);
  for (; e > 0; --e) out *= b;
  return out;
}

bigrat signed_pow(int64_t base, int e) {
  if (e >= 0) return bigrat(int_pow(bigint(base), e));
  return bigrat(1, int_pow(bigint(base), -e));
}

}  // namespace

bool height_regime(int64_t p, int d) {
  if (d < 3) return false;
  int64_t m = d - 1;
  while (m % p == 0) m /= p;
  return m == 1;
}

bigrat height_pair(int d, int r, long long i, long long j) {
  if (r < 2 || d < 3 || d % r != 0) throw std::invalid_argument("height_pair needs r | d, d >= 3");
  const long long im = ((i % d) + d) % d;
  const long long jm = ((j % r) + r) % r;

  long long num;
  if (im == 0 && jm == 0)
    num = -static_cast<long long>(r - 1) * (d - 2);
  else if (jm == 0 && im % r != 0)
    num = r - 2;
  else if (jm == 0)
    num = 2 * r - 2;
  else if (im == 0)
    num = d - 2;
  else if ((im + jm) % r == 0)
    num = r - 2;
  else
    num = -2;
  return bigrat(-(d - 1) * num, static_cast<long long>(r) * d);
}

HeightTable height_table(int d, int r) {
  HeightTable t;
  t.d = d;
  t.r = r;
  t.h.reserve(static_cast<size_t>(d) * r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) t.h.push_back(height_pair(d, r, i, j));
  return t;
}

std::vector<std::vector<bigrat>> gram_matrix(int d, int r) {
  HeightTable t = height_table(d, r);
  const int n = d * r;
  std::vector<std::vector<bigrat>> g(n, std::vector<bigrat>(n));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i)
      for (int j2 = 0; j2 < r; ++j2)
        for (int i2 = 0; i2 < d; ++i2) g[j * d + i][j2 * d + i2] = t.at(i - i2, j - j2);
  return g;
}

bool proportionality_check(int d, int r) {
  const bigrat scale(d - 1);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i)
      if (height_pair(d, r, i, j) != scale * group_pairing(d, r, i, j)) return false;
  return true;
}

bigint disc_ideal(int d, int r) {
  if (r < 2 || d < 3 || d % r != 0) throw std::invalid_argument("disc_ideal needs r | d, d >= 3");

  std::vector<GroupRingElem> basis;
  for (int i = 0; i < d; ++i) {  // alpha_i = sigma^i sum tau^j
    GroupRingElem a(d, r);
    for (int j = 0; j < r; ++j) a.at(i, j) = 1;
    basis.push_back(std::move(a));
  }
  for (int j = 1; j < r; ++j) {  // beta_j = (tau^j - 1) sum sigma^i
    GroupRingElem b(d, r);
    for (int i = 0; i < d; ++i) {
      b.at(i, j) += 1;
      b.at(i, 0) -= 1;
    }
    basis.push_back(std::move(b));
  }
  for (int j = 1; j < r; ++j) {  // gamma_j = (tau^j - 1) sum sigma^i tau^(d-i)
    GroupRingElem g(d, r);
    for (int i = 0; i < d; ++i) {
      g.at(i, j + d - i) += 1;
      g.at(i, d - i) -= 1;
    }
    basis.push_back(std::move(g));
  }

  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<bigint>> gram(n, std::vector<bigint>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      bigint acc(0);
      for (size_t c = 0; c < basis[s].c.size(); ++c) acc += basis[s].c[c] * basis[t].c[c];
      gram[s][t] = acc;
    }

  const bigint computed = det_bareiss(std::move(gram));
  const bigint closed = int_pow(bigint(r), d + 2) * int_pow(bigint(d), 2 * r - 2);
  if (computed != closed) throw std::runtime_error("disc_ideal: Gram determinant disagrees with the closed form");
  return closed;
}

std::vector<std::vector<bigint>> free_lattice_gram(const ModuleStructure& ms) {
  const int d = ms.d, r = ms.r;
  const QGroupRingElem pi = splitting_pi(d, r);
  const bigint rd(static_cast<long long>(r) * d);

  std::vector<std::vector<bigint>> emb;
  for (const auto& row : ms.free_basis) {
    QGroupRingElem x(d, r);
    for (size_t c = 0; c < row.size(); ++c) x.c[c] = bigrat(row[c]);
    QGroupRingElem rx = x * pi;
    std::vector<bigint> z(rx.c.size());
    for (size_t c = 0; c < rx.c.size(); ++c) {
      bigrat v = rx.c[c] * rd;
      if (denominator(v) != 1) throw std::runtime_error("rho embedding not integral after rd scaling");
      z[c] = numerator(v);
    }
    emb.push_back(std::move(z));
  }

  const int n = static_cast<int>(emb.size());
  std::vector<std::vector<bigint>> gram(n, std::vector<bigint>(n));
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; ++t) {
      bigint acc(0);
      for (size_t c = 0; c < emb[s].size(); ++c) acc += emb[s][c] * emb[t][c];
      gram[s][t] = acc;
      gram[t][s] = acc;
    }
  return gram;
}

bigrat disc_W_mod_torsion(int d, int r) {
  if (r < 2 || d < 3 || d % r != 0) throw std::invalid_argument("disc needs r | d, d >= 3");
  ModuleStructure ms = module_structure(d, r);
  const int n = static_cast<int>(ms.free_basis.size());

  const bigint detz = det_bareiss(free_lattice_gram(ms));
  const bigrat computed = bigrat(detz) / bigrat(int_pow(bigint(static_cast<long long>(r) * d), 2 * n));
  const bigrat closed = signed_pow(r, 4 - d) * signed_pow(d, 2 - 2 * r);
  if (computed != closed) throw std::runtime_error("det(W/tor): lattice value disagrees with the closed form");

  bigint tor(1);
  for (const auto& s : ms.torsion) tor *= s;
  if (computed != bigrat(tor * tor) / bigrat(disc_ideal(d, r)))
    throw std::runtime_error("det(W/tor) != |W_tor|^2 / det(I)");
  return closed;
}

bigrat disc_V_mod_torsion(int d, int r) {
  const bigrat det_w = disc_W_mod_torsion(d, r);  // lattice + reciprocal checks

  // Independent pass with the (d-1)-scaled Euclidean Gram.
  ModuleStructure ms = module_structure(d, r);
  const int n = static_cast<int>(ms.free_basis.size());
  const bigint detz = det_bareiss(free_lattice_gram(ms));
  const bigrat computed =
      bigrat(int_pow(bigint(d - 1), n) * detz) / bigrat(int_pow(bigint(static_cast<long long>(r) * d), 2 * n));
  const bigrat closed =
      bigrat(int_pow(bigint(d - 1), (r - 1) * (d - 2))) * signed_pow(r, 4 - d) * signed_pow(d, 2 - 2 * r);
  if (computed != closed) throw std::runtime_error("det(V/tor): lattice value disagrees with the closed form");
  if (computed != bigrat(int_pow(bigint(d - 1), n)) * det_w)
    throw std::runtime_error("det(V/tor) inconsistent with det(W/tor)");
  return closed;
}

int rational_rank(std::vector<std::vector<bigrat>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const bigrat lead = m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] /= lead;
    for (int i = rank + 1; i < rows; ++i)
      if (m[i][col] != 0) {
        const bigrat q = m[i][col];
        for (int c = col; c < cols; ++c) m[i][c] -= q * m[rank][c];
      }
    ++rank;
  }
  return rank;
}

}  // namespace glc
