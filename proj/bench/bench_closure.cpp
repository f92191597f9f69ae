// Serial versus OpenMP pair enumeration on finite groups.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nil2/builtins.hpp"
#include "nil2/closure.hpp"

using namespace nil2;

namespace {

template <class F>
double best_ms(F f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

std::string show(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  const std::vector<std::string> groups = {
      "cyclic(64)",          "abelian(4,4)",          "abelian(2,2,2,2)",
      "heisenberg(5)",       "heisenberg(7)",         "paper.counterexfinal",
      "paper.counterextofour", "paper.generalized(3,2)", "abelian(3,9,27)"};
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-24s %8s %10s %12s %12s %8s\n", "group", "order", "tasks", "serial_ms",
              "parallel_ms", "agree");
  bool all = true;
  for (const auto& name : groups) {
    auto g = builtin_group(name);
    PairEnumeration e(g);
    std::optional<std::size_t> s, p;
    const double ts = best_ms([&] { s = e.first_failure_serial(); }, reps);
    const double tp = best_ms([&] { p = e.first_failure_parallel(); }, reps);
    const bool agree = s == p;
    all = all && agree;
    std::printf("%-24s %8s %10zu %12.3f %12.3f %8s  first=%s\n", name.c_str(),
                g.order()->get_str().c_str(), e.tasks(), ts, tp, agree ? "yes" : "NO",
                show(s).c_str());
  }
  return all ? 0 : 1;
}
