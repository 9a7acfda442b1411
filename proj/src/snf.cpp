#include "fgb/snf.hpp"

#include <stdexcept>

namespace fgb {

IntMatrix int_matrix(const std::vector<std::vector<long long>>& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].assign(m[i].begin(), m[i].end());
  }
  return out;
}

IntMatrix identity_matrix(int m) {
  IntMatrix out(m, std::vector<BigInt>(m, 0));
  for (int i = 0; i < m; ++i) out[i][i] = 1;
  return out;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const int r = static_cast<int>(a.size());
  const int mid = static_cast<int>(b.size());
  const int c = static_cast<int>(b[0].size());
  IntMatrix out(r, std::vector<BigInt>(c, 0));
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(a[i].size()) != mid) throw std::invalid_argument("shape mismatch");
    for (int t = 0; t < mid; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

BigInt determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int t = 0; t < n; ++t) {
    int pivot = -1;
    for (int i = t; i < n; ++i) {
      if (m[i][t] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != t) {
      std::swap(m[pivot], m[t]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j) {
        m[i][j] = (m[t][t] * m[i][j] - m[i][t] * m[t][j]) / prev;
      }
      m[i][t] = 0;
    }
    prev = m[t][t];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

struct Snf {
  IntMatrix a, u, v;
  int rows, cols;

  explicit Snf(IntMatrix m)
      : a(std::move(m)),
        rows(static_cast<int>(a.size())),
        cols(rows ? static_cast<int>(a[0].size()) : 0) {
    u = identity_matrix(rows);
    v = identity_matrix(cols);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  void add_row(int dst, int src, const BigInt& c) {  // row_dst += c * row_src
    for (int j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
  }
  void add_col(int dst, int src, const BigInt& c) {  // col_dst += c * col_src
    for (int i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] += c * v[i][src];
  }
  void negate_row(int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  bool find_pivot(int t, int& pi, int& pj) {
    BigInt best = 0;
    pi = pj = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt mag = abs(a[i][j]);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return pi >= 0;
  }

  // Clears row t and column t by Euclidean descent on the pivot.
  void clear_cross(int t) {
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        add_row(i, t, -q);
        if (a[i][t] != 0) {  // remainder becomes the smaller pivot
          swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        add_col(j, t, -q);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      if (!again) return;
    }
  }

  void run() {
    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;  // remaining submatrix is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        clear_cross(t);
        // Make the pivot divide the interior; this yields the chain
        // d_t | d_{t+1} since later steps only combine interior entries.
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i) {
          for (int j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
  IntMatrix original = m;
  Snf s(std::move(m));
  s.run();
  SnfResult res{std::move(s.a), std::move(s.u), std::move(s.v)};
  if (matrix_product(matrix_product(res.u, original), res.v) != res.d) {
    throw std::logic_error("smith_normal_form: reconstruction U*M*V != D");
  }
  return res;
}

AbelianGroupShape cokernel_shape(const IntMatrix& m, int cols) {
  if (!m.empty() && static_cast<int>(m[0].size()) != cols) {
    throw std::invalid_argument("cokernel_shape: column count mismatch");
  }
  AbelianGroupShape shape;
  if (m.empty()) {
    shape.free_rank = cols;
    return shape;
  }
  SnfResult snf = smith_normal_form(m);
  int nonzero = 0;
  const int steps = std::min(static_cast<int>(m.size()), cols);
  for (int t = 0; t < steps; ++t) {
    const BigInt& d = snf.d[t][t];
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) shape.torsion.push_back(d);
  }
  shape.free_rank = cols - nonzero;
  return shape;
}

std::string to_string(const AbelianGroupShape& s) {
  std::string out = "{free_rank=" + std::to_string(s.free_rank) + ", torsion=[";
  for (std::size_t i = 0; i < s.torsion.size(); ++i) {
    if (i) out += ",";
    out += s.torsion[i].str();
  }
  return out + "]}";
}

}  // namespace fgb
