#include "polysum/feasibility.hpp"

#include <algorithm>

#include "polysum/linalg.hpp"

namespace polysum {

namespace {

int deduce_var_count(const QMat& eqs, const QMat& strict, const QMat& weak) {
  for (const QMat* m : {&eqs, &strict, &weak}) {
    if (!m->empty()) return static_cast<int>((*m)[0].size()) - 1;
  }
  throw Error("solve_strict_feasibility: no constraints given");
}

// Any solution of A x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<QVec> particular_solution(const QMat& a, const QVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  QMat m(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    const Rat inv = Rat(1) / m[r][c];
    for (int j = c; j <= cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }
  QVec x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

}  // namespace

std::optional<QVec> solve_strict_feasibility(const QMat& eqs, const QMat& strict_ineqs,
                                             const QMat& weak_ineqs) {
  const int n = deduce_var_count(eqs, strict_ineqs, weak_ineqs);
  for (const QMat* m : {&eqs, &strict_ineqs, &weak_ineqs}) {
    for (const QVec& row : *m) {
      if (static_cast<int>(row.size()) != n + 1) {
        throw Error("solve_strict_feasibility: ragged constraint rows");
      }
    }
  }

  if (strict_ineqs.empty() && weak_ineqs.empty()) {
    QMat a(eqs.size(), QVec(n));
    QVec b(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = eqs[i][j];
      b[i] = eqs[i][n];
    }
    return particular_solution(a, b);
  }

  // Lifted space (x, s): equalities keep s free, strict rows become
  // c.x - s >= b, weak rows keep their coefficients, plus the cap s <= 1.
  const int nvars = n + 1;
  QMat ecoef(eqs.size(), QVec(nvars));
  QVec erhs(eqs.size());
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (int j = 0; j < n; ++j) ecoef[i][j] = eqs[i][j];
    erhs[i] = eqs[i][n];
  }
  QMat gcoef;
  QVec grhs;
  for (const QVec& row : strict_ineqs) {
    QVec c(nvars);
    for (int j = 0; j < n; ++j) c[j] = row[j];
    c[n] = -1;
    gcoef.push_back(std::move(c));
    grhs.push_back(row[n]);
  }
  for (const QVec& row : weak_ineqs) {
    QVec c(nvars);
    for (int j = 0; j < n; ++j) c[j] = row[j];
    gcoef.push_back(std::move(c));
    grhs.push_back(row[n]);
  }
  {
    QVec cap(nvars);
    cap[n] = -1;
    gcoef.push_back(std::move(cap));
    grhs.push_back(Rat(-1));
  }

  {
    QMat all = ecoef;
    all.insert(all.end(), gcoef.begin(), gcoef.end());
    if (rank(all) < nvars) {
      throw Error("solve_strict_feasibility: constraint polyhedron is not pointed");
    }
  }

  const int re = ecoef.empty() ? 0 : rank(ecoef);
  const int m_needed = nvars - re;
  const int g = static_cast<int>(gcoef.size());
  if (m_needed > g) return std::nullopt;

  // Guard against combinatorial blowup; this solver is for desk-scale systems.
  {
    double c = 1;
    for (int i = 0; i < m_needed; ++i) c = c * (g - i) / (i + 1);
    if (c > 2e6) throw Error("solve_strict_feasibility: too many constraints for vertex enumeration");
  }

  std::optional<QVec> best;
  Rat best_s;
  std::vector<int> idx(m_needed);
  for (int i = 0; i < m_needed; ++i) idx[i] = i;
  const auto advance = [&]() -> bool {
    int i = m_needed - 1;
    while (i >= 0 && idx[i] == g - m_needed + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m_needed; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  bool more = m_needed >= 0;
  while (more) {
    QMat a = ecoef;
    QVec b = erhs;
    for (int i : idx) {
      a.push_back(gcoef[i]);
      b.push_back(grhs[i]);
    }
    if (auto z = solve_linear(a, b)) {
      bool feasible = true;
      for (int i = 0; i < g && feasible; ++i) {
        if (dot(gcoef[i], *z) < grhs[i]) feasible = false;
      }
      if (feasible) {
        const Rat s = (*z)[n];
        if (!best || s > best_s) {
          best_s = s;
          best = z;
          if (best_s == 1) break;  // cap reached, cannot improve
        }
      }
    }
    more = advance();
  }

  if (!best || best_s <= 0) return std::nullopt;
  QVec x(best->begin(), best->begin() + n);
  // Exact re-substitution of the original constraints.
  for (const QVec& row : eqs) {
    Rat v = 0;
    for (int j = 0; j < n; ++j) v += row[j] * x[j];
    if (v != row[n]) throw Error("solve_strict_feasibility: witness violates an equality");
  }
  for (const QVec& row : strict_ineqs) {
    Rat v = 0;
    for (int j = 0; j < n; ++j) v += row[j] * x[j];
    if (v <= row[n]) throw Error("solve_strict_feasibility: witness violates a strict row");
  }
  for (const QVec& row : weak_ineqs) {
    Rat v = 0;
    for (int j = 0; j < n; ++j) v += row[j] * x[j];
    if (v < row[n]) throw Error("solve_strict_feasibility: witness violates a weak row");
  }
  return x;
}

}  // namespace polysum
