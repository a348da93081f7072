// Times the OpenMP sweep kernels against the serial reference paths and
// checks that both produce identical results.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>

#include "parcat/census.hpp"
#include "parcat/scanning.hpp"
#include "parcat/sweep.hpp"
#include "parcat/text.hpp"

using namespace parcat;
using Clock = std::chrono::steady_clock;

namespace {

// Runs the producer once untimed (thread pool and page warm-up, result
// destroyed outside the clock), then once timed.
template <class G>
auto timed(G&& g, long long& ms) {
  {
    auto warm = g();
    (void)warm;
  }
  const auto start = Clock::now();
  auto value = g();
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return value;
}

void row(const std::string& name, long long serial_ms, long long parallel_ms, bool agree) {
  const double speedup = parallel_ms > 0 ? static_cast<double>(serial_ms) / parallel_ms
                                         : static_cast<double>(serial_ms);
  std::cout << std::left << std::setw(34) << name << std::right << std::setw(10) << serial_ms << " ms"
            << std::setw(10) << parallel_ms << " ms" << std::setw(9) << std::fixed << std::setprecision(2)
            << speedup << "x   " << (agree ? "results match" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::stoi(argv[1]) : default_threads();
  std::cout << "parallel path uses " << threads << " thread(s)\n\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(10) << "speedup" << "\n";

  {
    const Partition shape = parse_partition("5,4,3,2,1,0");
    const auto tabs = all_tableaux(shape);
    long long s = 0, p = 0;
    const auto a = timed([&] { return scan_batch(tabs, 1); }, s);
    const auto b = timed([&] { return scan_batch(tabs, threads); }, p);
    row("scan batch, 32768 tableaux", s, p, a == b);
  }
  {
    const Partition shape = parse_partition("5,4,3,2,1,0");
    const RPermutation pi = parse_rpermutation("3;5;1;6;2;4");
    long long s = 0, p = 0;
    const auto a = timed([&] { return demazure_set(shape, pi, 1); }, s);
    const auto b = timed([&] { return demazure_set(shape, pi, threads); }, p);
    row("demazure filter, staircase n=6", s, p, a == b);
  }
  const auto verify_row = [&](const char* name, const char* id, const VerifyLimits& limits) {
    long long s = 0, p = 0;
    const auto a = timed([&] { return verify(id, limits, 1); }, s);
    const auto b = timed([&] { return verify(id, limits, threads); }, p);
    row(name, s, p, a.checked == b.checked && a.failures == b.failures);
  };
  {
    VerifyLimits limits;
    limits.max_n = 5;
    limits.box_rows = 4;
    limits.box_cols = 4;
    verify_row("verify T420, n<=5 box 4x4", "T420", limits);
  }
  {
    VerifyLimits limits;
    limits.max_n = 4;
    limits.box_rows = 3;
    limits.box_cols = 3;
    verify_row("verify GV17, n<=4 box 3x3", "GV17", limits);
  }
  {
    VerifyLimits limits;
    limits.max_n = 5;
    verify_row("verify T18_1, n<=5", "T18_1", limits);
  }
  return 0;
}
