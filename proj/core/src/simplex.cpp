#include "toric/simplex.hpp"

namespace toric {

LPSolution maximize(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw DomainError("maximize: row count mismatch");
  for (const auto& row : lp.a)
    if (row.size() != n) throw DomainError("maximize: column count mismatch");
  for (const auto& bi : lp.b)
    if (bi < 0) throw DomainError("maximize: the origin must be feasible");

  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = lp.b[i];
  }
  // Objective row holds reduced costs −c.
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -lp.c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return LPSolution{false, 0, {}};

    Rational piv = t[leave][enter];
    for (auto& v : t[leave])
      if (v != 0) v /= piv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols; ++j)
      if (t[leave][j] != 0) nz.push_back(j);
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (auto j : nz) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LPSolution sol;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t[i][cols - 1];
  sol.value = t[m][cols - 1];
  return sol;
}

}  // namespace toric
