#include "polysum/linalg.hpp"

#include <algorithm>

namespace polysum {

IVec primitive_integer_vector(const QVec& v) {
  BigInt lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x)));
  IVec out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = BigInt(numerator(v[i])) * (lcm / BigInt(denominator(v[i])));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g > 1) {
    for (BigInt& x : out) x /= g;
  }
  return out;
}

IMat clear_row_denominators(const QMat& m) {
  IMat out;
  out.reserve(m.size());
  for (const QVec& row : m) out.push_back(primitive_integer_vector(row));
  return out;
}

// Bareiss: division-free pivots, all intermediate divisions exact.
int rank(const IMat& m_in) {
  IMat m = m_in;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  BigInt prev = 1;
  int r = 0;
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
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int rank(const QMat& m) { return rank(clear_row_denominators(m)); }

BigInt determinant(const IMat& m_in) {
  IMat m = m_in;
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (static_cast<int>(m[0].size()) != n) throw Error("determinant: matrix not square");
  BigInt prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int affine_dim(const std::vector<QVec>& points) {
  if (points.empty()) throw Error("affine_dim: empty point list");
  QMat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(diffs);
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(b.size())) throw Error("solve_linear: shape mismatch");
  if (rows == 0) return std::nullopt;
  const int cols = static_cast<int>(a[0].size());
  QMat m(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  // Gauss-Jordan on the augmented matrix.
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
  if (r < cols) return std::nullopt;  // underdetermined or singular
  for (int i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;  // inconsistent
  }
  QVec x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

std::optional<QMat> inverse(const QMat& m_in) {
  const int n = static_cast<int>(m_in.size());
  QMat m(n, QVec(2 * n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m_in[i].size()) != n) throw Error("inverse: matrix not square");
    for (int j = 0; j < n; ++j) m[i][j] = m_in[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[c], m[pivot]);
    const Rat inv = Rat(1) / m[c][c];
    for (int j = c; j < 2 * n; ++j) m[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  QMat out(n, QVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  }
  return out;
}

std::vector<QVec> nullspace(const QMat& m_in) {
  QMat m = m_in;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
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
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<QVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    QVec v(cols);
    v[c] = 1;
    for (int j = 0; j < cols; ++j) {
      if (pivot_of_col[j] >= 0) v[j] = -m[pivot_of_col[j]][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat out(m[0].size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  QMat out(a.size(), QVec(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

QVec mat_vec(const QMat& a, const QVec& x) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

QMat identity_matrix(int n) {
  QMat m(n, QVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace polysum
