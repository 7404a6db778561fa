// Times the serial reference scan against the OpenMP-partitioned scan and
// the carry-pair automaton on the same (base, k, length) queries, checking
// on the way that all three report identical results.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revmult/verifier.hpp"
#include "revmult/younggraph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

std::vector<std::string> values_of(const std::vector<revmult::EnumerationRecord>& rs) {
  std::vector<std::string> v;
  v.reserve(rs.size());
  for (const auto& r : rs) v.push_back(revmult::to_string(r.value));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  int base = 10;
  int k = 4;
  std::size_t min_length = 4;
  std::size_t max_length = 7;
  int reps = 3;
  std::uint64_t budget = revmult::kDefaultScanBudget;

  CLI::App app{"enumeration kernels, serial vs OpenMP vs automaton"};
  app.add_option("--base", base, "radix");
  app.add_option("--k", k, "multiplier");
  app.add_option("--min-length", min_length, "first digit count");
  app.add_option("--max-length", max_length, "last digit count");
  app.add_option("--reps", reps, "repetitions; best time wins");
  app.add_option("--budget", budget, "scan candidate budget");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
  std::cout << "base " << base << ", k " << k << ", best of " << reps
            << " reps\n\n";
  std::cout << std::setw(7) << "length" << std::setw(7) << "found"
            << std::setw(13) << "serial_ms" << std::setw(13) << "parallel_ms"
            << std::setw(13) << "graph_ms" << std::setw(10) << "speedup"
            << "\n";

  const revmult::CarryPairAutomaton automaton = revmult::build_automaton(base, k);
  for (std::size_t n = min_length; n <= max_length; ++n) {
    std::vector<revmult::EnumerationRecord> serial, parallel, graph;
    const double serial_ms = best_of(reps, [&] {
      serial = revmult::brute_force_enumerate_serial(base, k, n, budget);
    });
    const double parallel_ms = best_of(reps, [&] {
      parallel = revmult::brute_force_enumerate(base, k, n, budget);
    });
    const double graph_ms = best_of(reps, [&] {
      graph = revmult::enumerate_length(automaton, n);
    });

    if (values_of(serial) != values_of(parallel) ||
        values_of(serial) != values_of(graph)) {
      std::cerr << "MISMATCH at length " << n << "\n";
      return 1;
    }

    std::cout << std::setw(7) << n << std::setw(7) << serial.size()
              << std::setw(13) << std::fixed << std::setprecision(3)
              << serial_ms << std::setw(13) << parallel_ms << std::setw(13)
              << graph_ms << std::setw(9) << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
  }
  return 0;
}
