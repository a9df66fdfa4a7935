#include "hopf/linalg.hpp"

#include <stdexcept>

namespace hopf {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size())
      throw std::invalid_argument("mat_vec: size mismatch");
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat out(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("mat_mul: size mismatch");
    for (size_t s = 0; s < k; ++s) {
      if (a[i][s] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][s] * b[s][j];
    }
  }
  return out;
}

RatMat mat_transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat out(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  RatMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
  RatMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

RatMat mat_scale(const RatMat& m, const Rational& c) {
  RatMat out = m;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMat identity_mat(int n) {
  RatMat out(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero_mat(const RatMat& m) {
  for (const auto& row : m)
    if (!is_zero_vec(row)) return false;
  return true;
}

namespace {

// Row echelon form in place; returns rank. Exact arithmetic, so plain
// Gaussian elimination with first-nonzero pivoting is already stable.
int echelon(RatMat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank(RatMat m) { return echelon(m); }

Rational det(RatMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
  Rational result = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      result = -result;
    }
    result *= m[c][c];
    Rational inv = 1 / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return result;
}

std::vector<RatVec> nullspace(const RatMat& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  RatMat red = m;
  echelon(red);
  // Identify pivot columns of the reduced matrix.
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < red.size(); ++c) {
    if (red[r][c] != 0) {
      pivot_of_col[c] = static_cast<int>(r);
      ++r;
    }
  }
  std::vector<RatVec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (pivot_of_col[free_c] != -1) continue;
    RatVec v(cols, Rational(0));
    v[free_c] = 1;
    // Back-substitute: rows are already fully reduced (RREF), so each pivot
    // variable is determined directly by the free column's entry.
    for (size_t c = 0; c < cols; ++c) {
      int pr = pivot_of_col[c];
      if (pr >= 0) v[c] = -red[pr][free_c];
    }
    basis.push_back(v);
  }
  return basis;
}

int span_dim(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  return rank(RatMat(vecs.begin(), vecs.end()));
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  RatMat stacked(basis.begin(), basis.end());
  int r0 = stacked.empty() ? 0 : rank(stacked);
  stacked.push_back(v);
  return rank(stacked) == r0;
}

bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  RatMat stacked(a.begin(), a.end());
  for (const auto& v : b) stacked.push_back(v);
  int ra = span_dim(a), rb = span_dim(b);
  int rab = stacked.empty() ? 0 : rank(stacked);
  return ra == rb && rb == rab;
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vecs,
                                          int ambient) {
  if (vecs.empty()) {
    std::vector<RatVec> all;
    for (int i = 0; i < ambient; ++i) {
      RatVec e(ambient, Rational(0));
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  return nullspace(RatMat(vecs.begin(), vecs.end()));
}

}  // namespace hopf
