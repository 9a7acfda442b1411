// The fiber poset Z^k x (Z/2)^k over the rose, its order complex, and the
// free translation action.

#pragma once

#include <vector>

#include "fgb/words.hpp"

namespace fgb {

struct FiberElement {
  std::vector<int> z;  // length k
  std::vector<int> p;  // length k, entries 0 or 1

  bool operator==(const FiberElement&) const = default;
};

// (z,p) <= (z',p') iff per coordinate: p_i == p'_i and z_i == z'_i, or
// p_i < p'_i and (z_i == z'_i or z_i == z'_i + 1).
bool fiber_leq(const FiberElement& a, const FiberElement& b);

// All elements with z in [-m, m]^k and p in {0,1}^k, in lexicographic order.
std::vector<FiberElement> fiber_window(int k, int m);

FiberElement fiber_translate(const FiberElement& x, const std::vector<int>& t);

// Chain statistics of the order complex of a finite poset fragment:
// chains_by_length[L] counts strictly increasing chains of L+1 elements,
// i.e. L-simplices; euler is the alternating sum.
struct OrderComplexStats {
  std::vector<long long> simplices_by_dim;
  long long euler = 0;
};
OrderComplexStats order_complex_stats(const std::vector<FiberElement>& elems);

// The 3^k window elements of the unit cube with bottom corner z.
std::vector<FiberElement> cube_elements(const std::vector<int>& z);

// True iff (z, 1...1) is an upper bound of the whole cube and no other cube
// element is.
bool cube_has_unique_maximum(const std::vector<int>& z);

}  // namespace fgb
