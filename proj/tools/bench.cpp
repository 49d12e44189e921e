#include <chrono>
#include <cstdio>

#include "cathom/corpus.hpp"
#include "cathom/homotopy.hpp"

using namespace cathom;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_pair(const char* label, const FinCatPtr& src, const FinCatPtr& tgt) {
  auto t0 = std::chrono::steady_clock::now();
  FunctorGraph serial = build_functor_graph_serial(src, tgt, 2000000);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  FunctorGraph parallel = build_functor_graph(src, tgt, 2000000);
  double t_parallel = ms_since(t0);
  bool same = serial.edge == parallel.edge && serial.functors.size() == parallel.functors.size();
  std::printf("%-24s %6zu functors  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n",
              label, serial.functors.size(), t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  FinCatPtr circle = corpus::parallel_pair();
  ProductCat sq = product(circle, circle);
  bench_pair("S1 -> S1", circle, circle);
  bench_pair("S1 -> S1 x S1", circle, sq.cat);
  bench_pair("S1 x S1 -> S1 x S1", sq.cat, sq.cat);
  bench_pair("zigzag4 -> S1 x S1", corpus::zigzag(4), sq.cat);
  return 0;
}
