#include "hopf/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > 8)
    throw std::invalid_argument("polynomial variable count must be 1..8");
}

void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("polynomial variable-count mismatch");
}

int exponent(Monomial m, int var) {
  return static_cast<int>((m >> (8 * var)) & 0xff);
}

Monomial with_exponent(Monomial m, int var, int e) {
  Monomial cleared = m & ~(Monomial(0xff) << (8 * var));
  return cleared | (Monomial(static_cast<unsigned>(e)) << (8 * var));
}

// Canonicalize a term list that may be unsorted / contain duplicates/zeros.
MultiPoly normalize(int nvars, std::vector<std::pair<Monomial, Rational>> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  MultiPoly out;
  out.nvars = nvars;
  out.terms.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.terms.empty() && out.terms.back().first == t.first) {
      out.terms.back().second += t.second;
      if (out.terms.back().second == 0) out.terms.pop_back();
    } else if (t.second != 0) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

MultiPoly mp_zero(int nvars) {
  check_nvars(nvars);
  return MultiPoly{nvars, {}};
}

MultiPoly mp_const(int nvars, const Rational& c) {
  check_nvars(nvars);
  MultiPoly p{nvars, {}};
  if (c != 0) p.terms.emplace_back(0, c);
  return p;
}

MultiPoly mp_var(int nvars, int i) {
  check_nvars(nvars);
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  MultiPoly p{nvars, {}};
  p.terms.emplace_back(with_exponent(0, i, 1), Rational(1));
  return p;
}

MultiPoly mp_monomial(int nvars, const std::vector<int>& exps,
                      const Rational& c) {
  check_nvars(nvars);
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  Monomial m = 0;
  for (int i = 0; i < nvars; ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::out_of_range("exponent");
    m = with_exponent(m, i, exps[i]);
  }
  MultiPoly p{nvars, {}};
  if (c != 0) p.terms.emplace_back(m, c);
  return p;
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly out{a.nvars, {}};
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rational c = a.terms[i].second + b.terms[j].second;
      if (c != 0) out.terms.emplace_back(a.terms[i].first, c);
      ++i, ++j;
    }
  }
  return out;
}

MultiPoly mp_neg(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& t : out.terms) t.second = -t.second;
  return out;
}

MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b) {
  return mp_add(a, mp_neg(b));
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  // Accumulate products in an ordered map keyed by the packed monomial;
  // exponent packing makes monomial multiplication a single integer add.
  std::map<Monomial, Rational> acc;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      Rational prod = ta.second * tb.second;
      auto [it, inserted] = acc.emplace(ta.first + tb.first, prod);
      if (!inserted) it->second += prod;
    }
  MultiPoly out{a.nvars, {}};
  out.terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms.emplace_back(m, c);
  return out;
}

MultiPoly mp_scale(const MultiPoly& a, const Rational& c) {
  if (c == 0) return mp_zero(a.nvars);
  MultiPoly out = a;
  for (auto& t : out.terms) t.second *= c;
  return out;
}

MultiPoly mp_pow(const MultiPoly& a, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly result = mp_const(a.nvars, 1);
  MultiPoly base = a;
  while (e > 0) {
    if (e & 1) result = mp_mul(result, base);
    e >>= 1;
    if (e) base = mp_mul(base, base);
  }
  return result;
}

Rational mp_eval(const MultiPoly& a, const RatVec& point) {
  if (static_cast<int>(point.size()) != a.nvars)
    throw std::invalid_argument("evaluation point length mismatch");
  // Memoized powers per variable (degrees are small).
  std::vector<std::vector<Rational>> pows(a.nvars, {Rational(1)});
  Rational sum = 0;
  for (const auto& [m, c] : a.terms) {
    Rational term = c;
    for (int v = 0; v < a.nvars; ++v) {
      int e = exponent(m, v);
      auto& pv = pows[v];
      while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * point[v]);
      if (e) term *= pv[e];
    }
    sum += term;
  }
  return sum;
}

MultiPoly mp_derivative(const MultiPoly& a, int var) {
  if (var < 0 || var >= a.nvars) throw std::out_of_range("variable index");
  std::vector<std::pair<Monomial, Rational>> ts;
  ts.reserve(a.terms.size());
  for (const auto& [m, c] : a.terms) {
    int e = exponent(m, var);
    if (e == 0) continue;
    ts.emplace_back(with_exponent(m, var, e - 1), c * e);
  }
  return normalize(a.nvars, std::move(ts));
}

int mp_total_degree(const MultiPoly& a) {
  int deg = 0;
  for (const auto& [m, c] : a.terms) {
    int d = 0;
    for (int v = 0; v < a.nvars; ++v) d += exponent(m, v);
    deg = std::max(deg, d);
  }
  return deg;
}

std::string mp_to_string(const MultiPoly& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest-degree terms last (ascending key order is fine for debug).
  for (const auto& [m, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    for (int v = 0; v < a.nvars; ++v) {
      int e = exponent(m, v);
      if (e == 1) os << "*x" << v;
      if (e > 1) os << "*x" << v << "^" << e;
    }
  }
  return os.str();
}

MultiPoly reduce_mod_sphere(const MultiPoly& p) {
  // s = 1 - x1^2 - ... - x_{n-1}^2, the on-sphere value of x0^2.
  MultiPoly s = mp_const(p.nvars, 1);
  for (int v = 1; v < p.nvars; ++v)
    s = mp_sub(s, mp_mul(mp_var(p.nvars, v), mp_var(p.nvars, v)));

  MultiPoly cur = p;
  for (;;) {
    // Split cur = low + x0^2 * high, where low has x0-degree <= 1.
    std::vector<std::pair<Monomial, Rational>> low, high;
    for (const auto& [m, c] : cur.terms) {
      int e0 = exponent(m, 0);
      if (e0 >= 2)
        high.emplace_back(with_exponent(m, 0, e0 - 2), c);
      else
        low.emplace_back(m, c);
    }
    if (high.empty()) return cur;
    MultiPoly high_p = normalize(p.nvars, std::move(high));
    MultiPoly low_p = normalize(p.nvars, std::move(low));
    cur = mp_add(low_p, mp_mul(s, high_p));
  }
}

bool poly_identity_check(const MultiPoly& p, const MultiPoly& q,
                         bool mod_sphere) {
  check_same(p, q);
  MultiPoly diff = mp_sub(p, q);
  if (mod_sphere) diff = reduce_mod_sphere(diff);
  return diff.is_zero();
}

PolyMatrix poly_matrix(int rows, int cols, int nvars) {
  PolyMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * cols, mp_zero(nvars));
  return m;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("poly_mat_mul: shapes");
  int nvars = a.entries.empty() ? b.entries.front().nvars
                                : a.entries.front().nvars;
  PolyMatrix out = poly_matrix(a.rows, b.cols, nvars);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) = mp_add(out.at(i, j), mp_mul(a.at(i, k), b.at(k, j)));
      }
    }
  return out;
}

PolyMatrix poly_mat_transpose(const PolyMatrix& a) {
  PolyMatrix out = poly_matrix(a.cols, a.rows,
                               a.entries.empty() ? 1 : a.entries[0].nvars);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

RatMat poly_mat_eval(const PolyMatrix& a, const RatVec& point) {
  RatMat out(a.rows, RatVec(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out[i][j] = mp_eval(a.at(i, j), point);
  return out;
}

MultiPoly poly_det(const PolyMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("poly_det: non-square");
  if (m.rows > 6) throw std::invalid_argument("poly_det: supports up to 6x6");
  int n = m.rows;
  int nvars = n == 0 ? 1 : m.entries[0].nvars;
  if (n == 0) return mp_const(1, 1);

  // minor[S] = det of the submatrix on rows 0..popcount(S)-1 and columns S.
  // Filling subsets in increasing popcount order expands each minor along
  // its last row; every subset determinant is computed exactly once.
  std::vector<MultiPoly> minor(static_cast<size_t>(1) << n, mp_zero(nvars));
  minor[0] = mp_const(nvars, 1);
  std::vector<int> order(static_cast<size_t>(1) << n);
  for (size_t s = 0; s < order.size(); ++s) order[s] = static_cast<int>(s);
  std::sort(order.begin(), order.end(), [](int x, int y) {
    int px = __builtin_popcount(static_cast<unsigned>(x));
    int py = __builtin_popcount(static_cast<unsigned>(y));
    return px != py ? px < py : x < y;
  });
  for (int mask : order) {
    if (mask == 0) continue;
    int k = __builtin_popcount(static_cast<unsigned>(mask));  // rows used
    MultiPoly acc = mp_zero(nvars);
    int pos = 0;  // index of column c within the sorted subset
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1 << c))) continue;
      const MultiPoly& entry = m.at(k - 1, c);
      if (!entry.is_zero()) {
        MultiPoly contrib = mp_mul(entry, minor[mask ^ (1 << c)]);
        // Cofactor sign for position (k-1, pos) in the submatrix.
        if (((k - 1) + pos) % 2 != 0) contrib = mp_neg(contrib);
        acc = mp_add(acc, contrib);
      }
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor[(static_cast<size_t>(1) << n) - 1];
}

}  // namespace hopf
