// Exact integer Smith normal form by elementary row/column reduction with a
// smallest-pivot strategy, plus the cokernel shape used for H1.

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgb {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_matrix(const std::vector<std::vector<long long>>& m);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int m);
BigInt determinant(IntMatrix m);  // fraction-free Bareiss elimination

struct SnfResult {
  IntMatrix d;  // diagonal, nonnegative, d_i | d_{i+1}
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
};

// Returns (d, u, v) with u*m*v == d; the reconstruction is verified exactly
// before returning.
SnfResult smith_normal_form(IntMatrix m);

// Isomorphism type of a finitely generated abelian group.
struct AbelianGroupShape {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // entries >= 2 in divisibility order

  bool operator==(const AbelianGroupShape&) const = default;
};

// Shape of Z^cols / (subgroup generated by the rows of m).
AbelianGroupShape cokernel_shape(const IntMatrix& m, int cols);

std::string to_string(const AbelianGroupShape& s);

}  // namespace fgb
