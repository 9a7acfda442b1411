// Benchmark comparing the serial reference implementations against the
// OpenMP drivers on the two data-parallel kernels: relation verification and
// quotient-complex enumeration.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fgb/graph_complex.hpp"
#include "fgb/presentations.hpp"

using namespace fgb;

namespace {

template <typename F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_relations(int n, int k, Group group) {
  long long instances = 0;
  double serial = seconds([&] {
    VerifyReport rep = verify_relations_serial(n, k, group);
    instances = rep.total_instances();
    if (!rep.ok()) std::printf("  UNEXPECTED FAILURES\n");
  });
  double parallel = seconds([&] { (void)verify_relations_parallel(n, k, group); });
  std::printf("relations  n=%d k=%d %-4s  %8lld instances  serial %7.3fs  parallel %7.3fs  x%.2f\n",
              n, k, group_name(group).c_str(), instances, serial, parallel, serial / parallel);
}

void bench_enumeration(int n, int k, GraphVariant variant) {
  std::size_t count = 0;
  double serial = seconds([&] {
    count = enumerate_graphs_serial(n, k, variant, false).graphs.size();
  });
  double parallel = seconds([&] { (void)enumerate_graphs(n, k, variant, false, {}, true); });
  std::printf("complex    n=%d k=%d %-4s  %8zu graphs     serial %7.3fs  parallel %7.3fs  x%.2f\n",
              n, k, variant_name(variant).c_str(), count, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  bench_relations(3, 1, Group::conj);
  bench_relations(3, 1, Group::bdy);
  bench_relations(4, 1, Group::conj);
  bench_relations(2, 2, Group::bdy);
  bench_enumeration(1, 1, GraphVariant::nk);
  bench_enumeration(1, 2, GraphVariant::nk);
  bench_enumeration(2, 1, GraphVariant::nk);
  return 0;
}
