// Serial vs parallel timings for the two hot paths: the brute-force scan and
// the cycle-combination search. Not a test; run manually:
//
//   ./build/benchmarks/bench [repeats]
//
// On a single-core box the parallel columns mostly show scheduling overhead;
// the point of the comparison is that the outputs stay identical while the
// kernels are free to split work when cores exist.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <permutiple/enumerate.hpp>
#include <permutiple/oracle.hpp>

using namespace permutiple;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = Clock::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void bench_oracle(int repeats, const Params& p, int length) {
  oracle::OracleOptions serial, parallel;
  serial.parallel = false;
  serial.budget = parallel.budget = 10'000'000'000ULL;

  std::size_t pairs = 0;
  double s = best_ms(repeats, [&] { pairs = oracle::brute_force(p, length, serial).pairs.size(); });
  double par = best_ms(repeats, [&] { oracle::brute_force(p, length, parallel); });
  std::printf("oracle   (%2d,%2d) len %d  %8zu pairs  serial %9.2f ms  parallel %9.2f ms  x%.2f\n",
              p.n, p.b, length, pairs, s, par, s / par);
}

void bench_find(int repeats, const Params& p, int length) {
  SearchOptions serial, parallel;
  serial.parallel = false;

  std::size_t rows = 0;
  double s = best_ms(repeats, [&] { rows = find_all(p, length, serial).found.size(); });
  double par = best_ms(repeats, [&] { find_all(p, length, parallel); });
  std::printf("find_all (%2d,%2d) len %d  %8zu rows   serial %9.2f ms  parallel %9.2f ms  x%.2f\n",
              p.n, p.b, length, rows, s, par, s / par);
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (repeats < 1) repeats = 1;
  std::printf("best of %d runs\n", repeats);

  bench_oracle(repeats, Params(2, 6), 7);
  bench_oracle(repeats, Params(4, 10), 6);
  bench_oracle(repeats, Params(4, 10), 7);

  bench_find(repeats, Params(2, 6), 6);
  bench_find(repeats, Params(4, 10), 6);
  bench_find(repeats, Params(7, 10), 6);
  return 0;
}
