#include <chrono>
#include <cstdio>
#include <random>

#include "ffree/check.hpp"
#include "ffree/families.hpp"
#include "ffree/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(F&& body, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    body();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

ffree::Digraph random_digraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution arc(density);
  ffree::Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w && arc(rng)) d.add_arc(u, w);
  return d;
}

void bench_square() {
  for (int n : {128, 256, 512}) {
    const ffree::Digraph d = random_digraph(n, 0.3, 0xfeed + n);
    const ffree::ZeroOneMatrix m = ffree::to_matrix(d);
    ffree::NatMatrix serial(1), parallel(1);
    const double ts = best_ms([&] { serial = ffree::square(m); });
    const double tp = best_ms([&] { parallel = ffree::square_par(m); });
    std::printf("square       n=%4d  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n", n, ts, tp,
                ts / tp, serial == parallel ? "match" : "MISMATCH");
  }
}

void bench_check() {
  for (int n : {200, 400, 600}) {
    const ffree::Digraph d = ffree::construct(ffree::default_spec(ffree::Family::D1, n));
    ffree::CheckReport serial, parallel;
    const double ts = best_ms([&] { serial = ffree::is_f_free(d); });
    const double tp = best_ms([&] { parallel = ffree::is_f_free_par(d); });
    std::printf("walk check   n=%4d  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n", n, ts, tp,
                ts / tp, serial.ok == parallel.ok ? "match" : "MISMATCH");
  }
}

void bench_search() {
  const int n = 5;
  ffree::SearchOptions one;
  one.threads = 1;
  ffree::SearchOptions many;
#ifdef _OPENMP
  many.threads = omp_get_max_threads();
#else
  many.threads = 1;
#endif
  ffree::SearchResult rs, rp;
  const double ts = best_ms([&] { rs = ffree::brute_force_max(n, {}, one); }, 1);
  const double tp = best_ms([&] { rp = ffree::brute_force_max(n, {}, many); }, 1);
  const bool same = rs.max_size == rp.max_size && rs.witness_bits == rp.witness_bits &&
                    rs.nodes_explored == rp.nodes_explored;
  std::printf("search       n=%4d  1 thread %7.2f ms  %d threads %7.2f ms  x%.2f  %s\n", n, ts,
              many.threads, tp, ts / tp, same ? "match (nodes too)" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, serial kernels only\n");
#endif
  bench_square();
  bench_check();
  bench_search();
  return 0;
}
