#include "fgb/fiber.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgb {

bool fiber_leq(const FiberElement& a, const FiberElement& b) {
  if (a.z.size() != b.z.size() || a.p.size() != a.z.size() || b.p.size() != b.z.size()) {
    throw std::invalid_argument("fiber elements of mismatched length");
  }
  for (std::size_t i = 0; i < a.z.size(); ++i) {
    if (a.p[i] == b.p[i]) {
      if (a.z[i] != b.z[i]) return false;
    } else if (a.p[i] < b.p[i]) {
      if (a.z[i] != b.z[i] && a.z[i] != b.z[i] + 1) return false;
    } else {
      return false;
    }
  }
  return true;
}

std::vector<FiberElement> fiber_window(int k, int m) {
  std::vector<FiberElement> out;
  FiberElement cur{std::vector<int>(k, -m), std::vector<int>(k, 0)};
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    for (; i >= 0; --i) {
      if (cur.p[i] == 0) {
        cur.p[i] = 1;
        break;
      }
      cur.p[i] = 0;
      if (cur.z[i] < m) {
        cur.z[i] += 1;
        break;
      }
      cur.z[i] = -m;
    }
    if (i < 0) break;
  }
  return out;
}

FiberElement fiber_translate(const FiberElement& x, const std::vector<int>& t) {
  if (t.size() != x.z.size()) throw std::invalid_argument("translation vector length mismatch");
  FiberElement out = x;
  for (std::size_t i = 0; i < t.size(); ++i) out.z[i] += t[i];
  return out;
}

OrderComplexStats order_complex_stats(const std::vector<FiberElement>& elems) {
  const int n = static_cast<int>(elems.size());
  // strict order relation; p-weight increases along chains, so sort by it
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto weight = [&](int i) {
    int w = 0;
    for (int v : elems[i].p) w += v;
    return w;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight(a) < weight(b); });

  std::vector<std::vector<long long>> chains(n);  // chains ending at i, by length-1
  std::vector<long long> totals;
  for (int oi = 0; oi < n; ++oi) {
    int i = order[oi];
    chains[i] = {1};
    for (int oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      if (elems[j] == elems[i] || !fiber_leq(elems[j], elems[i])) continue;
      for (std::size_t L = 0; L < chains[j].size(); ++L) {
        if (chains[i].size() <= L + 1) chains[i].resize(L + 2, 0);
        chains[i][L + 1] += chains[j][L];
      }
    }
    for (std::size_t L = 0; L < chains[i].size(); ++L) {
      if (totals.size() <= L) totals.resize(L + 1, 0);
      totals[L] += chains[i][L];
    }
  }
  OrderComplexStats stats;
  stats.simplices_by_dim = totals;
  for (std::size_t L = 0; L < totals.size(); ++L) {
    stats.euler += (L % 2 == 0 ? 1 : -1) * totals[L];
  }
  return stats;
}

std::vector<FiberElement> cube_elements(const std::vector<int>& z) {
  const int k = static_cast<int>(z.size());
  std::vector<FiberElement> out;
  std::vector<int> choice(k, 0);  // 0: (z_i,0), 1: (z_i,1), 2: (z_i+1,0)
  for (;;) {
    FiberElement e{std::vector<int>(k), std::vector<int>(k)};
    for (int i = 0; i < k; ++i) {
      e.z[i] = z[i] + (choice[i] == 2 ? 1 : 0);
      e.p[i] = choice[i] == 1 ? 1 : 0;
    }
    out.push_back(std::move(e));
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++choice[i] < 3) break;
      choice[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

bool cube_has_unique_maximum(const std::vector<int>& z) {
  FiberElement top{z, std::vector<int>(z.size(), 1)};
  for (const FiberElement& e : cube_elements(z)) {
    if (!fiber_leq(e, top)) return false;
    if (!(e == top) && fiber_leq(top, e)) return false;
  }
  return true;
}

}  // namespace fgb
