// Times the serial reference kernels against the OpenMP ones: operator
// matrix assembly, the scaled Gram product, and the Jacobi eigensolver.
#include <chrono>
#include <cstdio>

#include "cdeig/linops.hpp"
#include "cdeig/rng.hpp"

using namespace cdeig;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int max_level = 8;
  if (argc > 1) max_level = std::atoi(argv[1]);

  std::printf("%-6s %-22s %12s %12s %8s\n", "level", "kernel", "serial ms", "parallel ms",
              "speedup");
  SplitMix64 rng(2024);
  for (int n = 6; n <= max_level; ++n) {
    const CDElement a = random_element(n, rng);
    const int reps = n >= 8 ? 2 : 5;

    const double build_s = time_ms([&] { detail::mult_matrix_serial(a, Side::Left); }, reps);
    const double build_p = time_ms([&] { detail::mult_matrix_parallel(a, Side::Left); }, reps);
    std::printf("%-6d %-22s %12.3f %12.3f %8.2f\n", n, "operator assembly", build_s, build_p,
                build_s / build_p);

    const OperatorMatrix L = detail::mult_matrix_serial(a, Side::Left);
    const double scale = 1.0 / norm_sq(a);
    const double gram_s = time_ms([&] { detail::gram_scaled_serial(L, scale); }, reps);
    const double gram_p = time_ms([&] { detail::gram_scaled_parallel(L, scale); }, reps);
    std::printf("%-6d %-22s %12.3f %12.3f %8.2f\n", n, "gram product", gram_s, gram_p,
                gram_s / gram_p);

    const OperatorMatrix M = detail::gram_scaled_serial(L, scale);
    const double eig_s = time_ms([&] { detail::jacobi_eigen_serial(M); }, reps);
    const double eig_p = time_ms([&] { detail::jacobi_eigen_parallel(M); }, reps);
    std::printf("%-6d %-22s %12.3f %12.3f %8.2f\n", n, "jacobi eigensolve", eig_s, eig_p,
                eig_s / eig_p);
  }
  return 0;
}
