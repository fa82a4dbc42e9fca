#include "cdeig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cdeig/linops.hpp"
#include "cdeig/rng.hpp"
#include "cdeig/spectrum.hpp"
#include "cdeig/subalgebra.hpp"

namespace cdeig {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ------------------------------------------------------------------
// sampling helpers

CDElement unit_element(int level, SplitMix64& rng) {
  return random_unit(rng, [&](SplitMix64& r) { return random_element(level, r); });
}

CDElement unit_imaginary(int level, SplitMix64& rng) {
  return random_unit(rng, [&](SplitMix64& r) { return random_imaginary(level, r); });
}

CDElement unit_c_perp(int level, SplitMix64& rng) {
  return random_unit(rng, [&](SplitMix64& r) { return random_c_perp(level, r); });
}

ComplexScalar unit_complex(SplitMix64& rng) {
  for (;;) {
    const ComplexScalar z = random_complex(rng);
    const double n = norm(z);
    if (n > 1e-6) return {z.re / n, z.im / n};
  }
}

// Orthogonal unit imaginary pair in A_3.
std::pair<CDElement, CDElement> orthogonal_pair3(SplitMix64& rng) {
  const CDElement a = unit_imaginary(3, rng);
  for (;;) {
    CDElement b = random_imaginary(3, rng);
    b = b - inner_real(b, a) * a;
    const double n = norm(b);
    if (n > 1e-6) return {a, (1.0 / n) * b};
  }
}

// Unit zero-divisor of A_n from a random orthogonal A_3 pair, doubled up by
// z -> (z, i z)/sqrt(2); stays orthogonal to C_n at every stage.
CDElement random_zero_divisor(int level, SplitMix64& rng) {
  auto [a, b] = orthogonal_pair3(rng);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CDElement z = inv_sqrt2 * join(a, b);
  for (int m = 5; m <= level; ++m) z = inv_sqrt2 * join(z, multiply(i_n_element(m - 1), z));
  return z;
}

std::vector<PredictedCluster> entries_of(const Spectrum& spec) {
  std::vector<PredictedCluster> out;
  for (const EigenCluster& c : spec.clusters) out.push_back({c.value, c.multiplicity});
  return out;
}

// Worst value deviation between a numerical spectrum and a prediction after
// merging both at the cluster tolerance; structural mismatch counts as 1.
double compare_spectra(const Spectrum& numeric, std::vector<PredictedCluster> predicted) {
  predicted = merge_clusters(std::move(predicted), kClusterTol);
  const std::vector<PredictedCluster> actual = merge_clusters(entries_of(numeric), kClusterTol);
  if (actual.size() != predicted.size()) return 1.0;
  double worst = 0.0;
  for (size_t k = 0; k < actual.size(); ++k) {
    if (actual[k].multiplicity != predicted[k].multiplicity) return 1.0;
    worst = std::max(worst, std::abs(actual[k].value - predicted[k].value));
  }
  return worst;
}

double min_gap(const std::vector<PredictedCluster>& entries) {
  double gap = 1e300;
  for (size_t k = 1; k < entries.size(); ++k)
    gap = std::min(gap, entries[k].value - entries[k - 1].value);
  return gap;
}

// ------------------------------------------------------------------
// runner

using CheckFn = std::function<double(int, SplitMix64&)>;

class Runner {
 public:
  Runner(uint64_t seed, int trials) : seed_(seed), trials_(trials) {}

  void check(const std::string& id, double tol, const CheckFn& fn) {
    check_counted(id, trials_, tol, fn);
  }

  void check_counted(const std::string& id, int count, double tol, const CheckFn& fn) {
    run(id, count, tol, fn, /*frequency=*/false);
  }

  /// Pass when the mean residual (failure fraction for 0/1 checks) stays
  /// within tol.
  void check_frequency(const std::string& id, int count, double tol, const CheckFn& fn) {
    run(id, count, tol, fn, /*frequency=*/true);
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void run(const std::string& id, int count, double tol, const CheckFn& fn, bool frequency) {
    std::vector<double> residuals(static_cast<size_t>(count), 0.0);
    const uint64_t base = trial_seed(seed_, check_index_++);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < count; ++t) {
      SplitMix64 rng(trial_seed(base, t));
      try {
        residuals[t] = fn(t, rng);
      } catch (...) {
        residuals[t] = 1e300;
      }
    }
    double stat = 0.0;
    if (frequency) {
      for (double r : residuals) stat += r;
      stat /= count;
    } else {
      for (double r : residuals) stat = std::max(stat, r);
    }
    results_.push_back({id, count, stat, tol, stat <= tol});
  }

  uint64_t seed_;
  int trials_;
  int check_index_ = 0;
  std::vector<CheckResult> results_;
};

int cycle_level(int t, int lo, int hi) { return lo + t % (hi - lo + 1); }

// ------------------------------------------------------------------
// core-identities

void add_core_checks(Runner& r) {
  r.check("conjugation-rules", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    double worst = norm(conjugate(conjugate(x)) - x);
    worst = std::max(worst, norm(conjugate(multiply(x, conjugate(y))) - multiply(y, conjugate(x))));
    CDElement flat = x;
    for (int k = 1; k < flat.dim(); ++k) flat[k] = -flat[k];
    worst = std::max(worst, norm(conjugate(x) - flat));
    return worst;
  });

  r.check("inner-product-is-dot", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    return std::abs(multiply(x, conjugate(y))[0] - inner_real(x, y));
  });

  r.check("imaginary-product-orthogonality", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_imaginary(n, rng);
    return std::abs(inner_real(x, multiply(x, y)));
  });

  r.check("multiplication-adjoints", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement a = unit_element(n, rng);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    const double left =
        std::abs(inner_real(multiply(a, x), y) - inner_real(x, multiply(conjugate(a), y)));
    const double right =
        std::abs(inner_real(multiply(x, a), y) - inner_real(x, multiply(y, conjugate(a))));
    return std::max(left, right);
  });

  r.check("complex-scalar-associativity", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const ComplexScalar alpha = unit_complex(rng);
    const ComplexScalar beta = unit_complex(rng);
    const CDElement x = unit_element(n, rng);
    return norm(multiply(lift_complex(alpha, n), multiply(lift_complex(beta, n), x)) -
                multiply(lift_complex(alpha * beta, n), x));
  });

  r.check("conjugate-linearity", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_c_perp(n, rng);
    const ComplexScalar alpha = unit_complex(rng);
    const CDElement x = unit_element(n, rng);
    return norm(multiply(a, multiply(lift_complex(alpha, n), x)) -
                multiply(lift_complex(conjugate(alpha), n), multiply(a, x)));
  });

  r.check("scalar-commutation", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_c_perp(n, rng);
    const CDElement b = unit_c_perp(n, rng);
    const ComplexScalar alpha = unit_complex(rng);
    const CDElement al = lift_complex(alpha, n);
    const CDElement alc = lift_complex(conjugate(alpha), n);
    double worst = norm(multiply(al, a) - multiply(a, alc));
    worst = std::max(worst, norm(multiply(a, multiply(al, b)) - multiply(alc, multiply(a, b))));
    worst = std::max(worst, norm(multiply(multiply(al, a), b) - multiply(multiply(a, b), al)));
    return worst;
  });

  r.check("bi-conjugate-linearity", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 6);
    const CDElement a = unit_c_perp(n, rng);
    const CDElement ia = multiply(i_n_element(n), a);
    CDElement b = random_c_perp(n, rng);
    b = b - inner_real(b, a) * a - (inner_real(b, ia) / norm_sq(ia)) * ia;
    const double bn = norm(b);
    if (bn < 1e-6) return 0.0;
    b = (1.0 / bn) * b;
    const ComplexScalar alpha = unit_complex(rng);
    const ComplexScalar beta = unit_complex(rng);
    return norm(multiply(multiply(lift_complex(alpha, n), a), multiply(lift_complex(beta, n), b)) -
                multiply(lift_complex(conjugate(alpha) * conjugate(beta), n), multiply(a, b)));
  });

  r.check("norm-product-symmetry", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    const double nxy = norm(multiply(x, y));
    return std::max(std::abs(nxy - norm(multiply(y, x))),
                    std::abs(nxy - norm(multiply(x, conjugate(y)))));
  });

  r.check("complex-norm-product", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_c_perp(n, rng);
    const ComplexScalar alpha = random_complex(rng);
    return std::abs(norm(multiply(lift_complex(alpha, n), a)) - norm(alpha));
  });

  r.check("self-conjugate-square-norm", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 0, 6);
    const CDElement x = unit_element(n, rng);
    return norm(multiply(x, conjugate(x)) - one_element(n));
  });

  r.check("cross-orthogonality", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 1, 6);
    const CDElement a = unit_imaginary(n, rng);
    const CDElement b = unit_imaginary(n, rng);
    const CDElement c = cross(a, b);
    double worst = std::abs(inner_real(c, a));
    worst = std::max(worst, std::abs(inner_real(c, b)));
    worst = std::max(worst, norm(real_part(c)));
    worst = std::max(worst, norm(cross(a, a)));
    return worst;
  });

  r.check("cross-norm-angle", 1e-9, [](int, SplitMix64& rng) {
    // A_3 is alternative, so any b is a 1-eigenvector of any a
    const CDElement a = unit_element(3, rng);
    const CDElement b = unit_element(3, rng);
    const double cos_theta = inner_real(a, b);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    return std::abs(norm(cross(a, b)) - sin_theta);
  });

  r.check("cross-norm-bound", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    const CDElement a = unit_element(n, rng);
    // b drawn from the 1-eigenspace of a
    const Spectrum spec = spectrum(a);
    const EigenCluster* one = spec.find(1.0);
    if (one == nullptr) return 1.0;
    CDElement b = zero_element(n);
    for (const CDElement& v : one->basis) b = b + rng.next_normal() * v;
    const double bn = norm(b);
    if (bn < 1e-6) return 0.0;
    b = (1.0 / bn) * b;

    double worst = std::max(0.0, norm(cross(a, b)) - 1.0);  // |axb| <= (1+1)/2
    // equality case: orthogonal part of b rescaled to |a| (stays in Eig_1)
    CDElement c = b - inner_real(b, a) * a;
    const double cn = norm(c);
    if (cn > 1e-6) {
      c = (1.0 / cn) * c;
      worst = std::max(worst, std::abs(norm(cross(a, c)) - 1.0));
    }
    // dependent case collapses to zero
    worst = std::max(worst, norm(cross(a, -2.0 * a)));
    return worst;
  });

  r.check("cross-scalar-factorization", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_c_perp(n, rng);
    const ComplexScalar alpha = unit_complex(rng);
    const ComplexScalar beta = unit_complex(rng);
    const CDElement lhs =
        cross(multiply(lift_complex(alpha, n), a), multiply(lift_complex(beta, n), a));
    CDElement rhs = zero_element(n);
    rhs[rhs.dim() / 2] = cross_im(alpha, beta);
    return norm(lhs - rhs);
  });

  r.check("basis-alternativity", 0.5, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 0, 6);
    const int k = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(dim_of_level(n)));
    return is_alternative(basis_element(n, k), 1e-9) ? 0.0 : 1.0;
  });

  r.check("low-level-alternativity", 0.5, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 0, 3);
    return is_alternative(random_element(n, rng), 1e-9) ? 0.0 : 1.0;
  });
}

// ------------------------------------------------------------------
// eigentheory

void add_eigentheory_checks(Runner& r) {
  r.check("operator-adjoint-identity", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_element(n, rng);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    const double lhs = inner_real(multiply(a, x), multiply(a, y));
    return std::max(std::abs(lhs - inner_real(m_apply(a, x), y)),
                    std::abs(lhs - inner_real(x, m_apply(a, y))));
  });

  r.check("eigenvalue-nonnegativity", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const EigenPairList pairs = symmetric_eigen(m_operator(random_element(n, rng)));
    return std::max(0.0, -pairs.front().value);
  });

  r.check("kernel-equality", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 6);
    const CDElement z = random_zero_divisor(n, rng);
    const Spectrum spec = spectrum(z);
    if (spec.lambda_min() > kZeroDivisorTol) return 1.0;
    double worst = 0.0;
    for (const CDElement& v : spec.clusters.front().basis)
      worst = std::max(worst, norm(multiply(z, v)));
    // octonions have no zero-divisors at all
    if (is_zero_divisor(random_element(3, rng))) worst = std::max(worst, 1.0);
    return worst;
  });

  r.check("eigenvalue-sum", 1e-6, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 6);
    const Spectrum spec = spectrum(random_element(n, rng));
    double weighted = 0.0;
    for (const EigenCluster& c : spec.clusters) weighted += c.value * c.multiplicity;
    return std::abs(weighted - dim_of_level(n));
  });

  r.check("multiplicity-mod-4", 0.5, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const Spectrum spec = spectrum(random_element(n, rng));
    for (const EigenCluster& c : spec.clusters)
      if (c.multiplicity % 4 != 0) return 1.0;
    return 0.0;
  });

  r.check("eigenvalue-range", 1e-6, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 6);
    const Spectrum spec = spectrum(random_element(n, rng));
    const double hi = dim_of_level(n - 3);
    return std::max(std::max(0.0, -spec.lambda_min() - 1e-9),
                    std::max(0.0, spec.lambda_max() - hi));
  });

  r.check("scale-invariance", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    const CDElement a = unit_c_perp(n, rng);
    const double scale = (rng.next_double() - 0.5) * 6.0;
    if (std::abs(scale) < 1e-3) return 0.0;
    const ComplexScalar beta = unit_complex(rng);

    const Spectrum s0 = spectrum(a);
    const Spectrum s1 = spectrum(scale * a);
    const Spectrum s2 = spectrum(multiply(lift_complex(beta, n), a));
    if (s1.clusters.size() != s0.clusters.size() || s2.clusters.size() != s0.clusters.size())
      return 1.0;
    double worst = 0.0;
    for (size_t k = 0; k < s0.clusters.size(); ++k) {
      if (s1.clusters[k].multiplicity != s0.clusters[k].multiplicity ||
          s2.clusters[k].multiplicity != s0.clusters[k].multiplicity)
        return 1.0;
      worst = std::max(worst, std::abs(s1.clusters[k].value - s0.clusters[k].value));
      worst = std::max(worst, std::abs(s2.clusters[k].value - s0.clusters[k].value));
      // compare eigenspace projectors, not individual vectors
      const int m = dim_of_level(n);
      for (const Spectrum* other : {&s1, &s2}) {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            double p0 = 0.0, p1 = 0.0;
            for (const CDElement& v : s0.clusters[k].basis) p0 += v[i] * v[j];
            for (const CDElement& v : other->clusters[k].basis) p1 += v[i] * v[j];
            worst = std::max(worst, std::abs(p0 - p1));
          }
      }
    }
    return worst;
  });

  r.check("shift-law", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 5);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const CDElement a = unit_c_perp(n, rng);
      const double theta = rng.next_double() * kPi / 2;
      const double s2 = std::sin(theta) * std::sin(theta);
      const double c2 = 1.0 - s2;
      const Spectrum base = spectrum(a);
      std::vector<PredictedCluster> predicted;
      for (const EigenCluster& c : base.clusters)
        predicted.push_back({s2 + c.value * c2, c.multiplicity});
      predicted = merge_clusters(std::move(predicted), kClusterTol);
      if (min_gap(predicted) < 1e-5) continue;  // redraw near-degenerate mixes

      const ComplexScalar beta = unit_complex(rng);
      const CDElement mixed = std::cos(theta) * a + std::sin(theta) * lift_complex(beta, n);
      return compare_spectra(spectrum(mixed), predicted);
    }
    return 1.0;
  });

  r.check("complex-floor-for-eigenvalues", 1e-9, [](int t, SplitMix64& rng) {
    // eigenvalues of a cos(theta) + beta sin(theta) are at least sin^2(theta),
    // so zero-divisors are orthogonal to C_n
    const int n = cycle_level(t, 3, 5);
    const CDElement a = unit_c_perp(n, rng);
    const double theta = 0.1 + rng.next_double() * (kPi / 2 - 0.2);
    const CDElement mixed =
        std::cos(theta) * a + std::sin(theta) * lift_complex(unit_complex(rng), n);
    const auto [lo, hi] = extreme_eigenvalues(mixed);
    (void)hi;
    return std::max(0.0, std::sin(theta) * std::sin(theta) - lo);
  });

  r.check("eigenspace-stability", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    const CDElement a = t % 2 == 0 ? unit_element(n, rng)
                                   : (n >= 4 ? random_zero_divisor(n, rng) : unit_element(n, rng));
    const Spectrum spec = spectrum(a);
    double worst = 0.0;
    for (const EigenCluster& c : spec.clusters) {
      if (c.value <= kZeroDivisorTol) continue;
      for (const CDElement& v : c.basis) {
        const CDElement w = multiply(a, v);
        CDElement proj = zero_element(n);
        for (const CDElement& u : c.basis) proj = proj + inner_real(w, u) * u;
        const double wn = norm(w);
        worst = std::max(worst, 1.0 - norm(proj) / wn);
        worst = std::max(worst, std::abs(wn - std::sqrt(c.value)));  // isometry up to scale
      }
    }
    return worst;
  });

  r.check("doubling-bound", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    const CDElement b = random_element(n, rng);
    const CDElement c = random_element(n, rng);
    const double top_b = extreme_eigenvalues(b).second;
    const double top_c = extreme_eigenvalues(c).second;
    const double top_join = extreme_eigenvalues(join(b, c)).second;
    return std::max(0.0, top_join - 2.0 * std::max(top_b, top_c));
  });

  r.check("norm-sandwich", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 6);
    const CDElement a = unit_element(n, rng);
    const CDElement x = unit_element(n, rng);
    const auto [lo, hi] = extreme_eigenvalues(a);
    const double nax = norm(multiply(a, x));
    return std::max(std::max(0.0, std::sqrt(std::max(0.0, lo)) - nax),
                    std::max(0.0, nax - std::sqrt(hi)));
  });

  r.check("quaternion-one-eigenspace", 1e-8, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 6);
    const CDElement a = unit_element(n, rng);
    const Subalgebra H = generated_subalgebra({a, i_n_element(n)});
    double worst = H.dim() == 4 || H.dim() == 2 ? 0.0 : 1.0;
    for (const CDElement& u : H.basis) {
      worst = std::max(worst, std::abs(norm(multiply(a, u)) - 1.0));
      worst = std::max(worst, norm(m_apply(a, u) - u));
    }
    return worst;
  });

  r.check("paired-product-formula", 1e-9, [](int t, SplitMix64& rng) {
    const int m = cycle_level(t, 3, 5);  // half level
    const CDElement a = unit_c_perp(m, rng);
    const ComplexScalar alpha = unit_complex(rng);
    const ComplexScalar beta = unit_complex(rng);
    const Subalgebra H = generated_subalgebra({a, i_n_element(m)});
    auto sample_perp = [&] {
      CDElement x = random_element(m, rng);
      x = x - project_onto(H, x);
      const double n = norm(x);
      return n > 1e-9 ? (1.0 / n) * x : zero_element(m);
    };
    const CDElement x = sample_perp();
    const CDElement y = sample_perp();

    const CDElement pair =
        join(multiply(lift_complex(alpha, m), a), multiply(lift_complex(beta, m), a));
    const CDElement lhs = multiply(pair, multiply(pair, join(x, y)));

    const double nsq = norm_sq(alpha) + norm_sq(beta);
    const CDElement gamma = lift_complex({0.0, cross_im(alpha, beta)}, m);
    const CDElement aax = multiply(a, multiply(a, x));
    const CDElement aay = multiply(a, multiply(a, y));
    const CDElement rhs =
        join(nsq * aax + 2.0 * multiply(gamma, aay), nsq * aay - 2.0 * multiply(gamma, aax));
    return norm(lhs - rhs);
  });

  r.check("decomposition-partition", 1e-8, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    const CDElement a = t % 2 == 0 || n == 3 ? unit_element(n, rng) : random_zero_divisor(n, rng);
    const CDElement x = unit_element(n, rng);
    const Spectrum spec = spectrum(a);
    const auto parts = eigendecompose(x, spec);
    CDElement sum = zero_element(n);
    double worst = 0.0;
    for (size_t i = 0; i < parts.size(); ++i) {
      sum = sum + parts[i].component;
      worst = std::max(worst, norm(m_apply(a, parts[i].component) -
                                   parts[i].value * parts[i].component));
      for (size_t j = i + 1; j < parts.size(); ++j)
        worst = std::max(worst, std::abs(inner_real(parts[i].component, parts[j].component)));
    }
    return std::max(worst, norm(sum - x));
  });

  r.check("decomposition-left-mult", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 5);
    const CDElement a = random_zero_divisor(n, rng);
    const Spectrum spec = spectrum(a);
    const CDElement x = unit_element(n, rng);
    const auto parts = eigendecompose(x, spec);
    const auto mapped = eigendecompose(multiply(a, x), spec);

    double worst = 0.0;
    for (const auto& m : mapped) {
      // the kernel part of x vanishes under a; anything left there is noise
      if (m.value <= kZeroDivisorTol) worst = std::max(worst, norm(m.component));
    }
    for (const auto& p : parts) {
      if (p.value <= kZeroDivisorTol) continue;
      bool found = false;
      for (const auto& m : mapped) {
        if (std::abs(m.value - p.value) > 1e-6) continue;
        worst = std::max(worst, norm(m.component - multiply(a, p.component)));
        found = true;
        break;
      }
      if (!found) return 1.0;
    }
    return worst;
  });

  r.check("norm-membership-characterization", 0.5, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 5);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const CDElement a = t % 2 == 0 ? unit_c_perp(n, rng) : random_zero_divisor(n, rng);
      const Spectrum spec = spectrum(a);
      if (spec.clusters.size() < 2) continue;
      if (min_gap(entries_of(spec)) < 1e-3) continue;

      const size_t c1 = rng.next_u64() % spec.clusters.size();
      size_t c2 = rng.next_u64() % spec.clusters.size();
      if (c1 == c2) c2 = (c2 + 1) % spec.clusters.size();

      CDElement inside = zero_element(n);
      for (const CDElement& v : spec.clusters[c1].basis)
        inside = inside + rng.next_normal() * v;
      if (norm(inside) < 1e-6) continue;
      inside = (1.0 / norm(inside)) * inside;
      if (!verify_eig_norm(a, inside, spec.clusters[c1].value, 1e-7)) return 1.0;

      const CDElement mixed =
          (1.0 / std::sqrt(2.0)) * (inside + spec.clusters[c2].basis.front());
      if (verify_eig_norm(a, mixed, spec.clusters[c1].value, 1e-7)) return 1.0;
      return 0.0;
    }
    return 1.0;
  });

  r.check("extreme-norm-redundancy", 0.5, [](int t, SplitMix64& rng) {
    // at the extremes, the single norm condition |ax| = sqrt(lambda)|a||x|
    // already decides membership
    const int n = cycle_level(t, 4, 5);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const CDElement a = t % 2 == 0 ? unit_c_perp(n, rng) : random_zero_divisor(n, rng);
      const Spectrum spec = spectrum(a);
      if (spec.clusters.size() < 2 || min_gap(entries_of(spec)) < 1e-3) continue;

      for (const EigenCluster* c : {&spec.clusters.front(), &spec.clusters.back()}) {
        CDElement inside = zero_element(n);
        for (const CDElement& v : c->basis) inside = inside + rng.next_normal() * v;
        if (norm(inside) < 1e-6) return 0.0;  // resample-level rarity; skip
        inside = (1.0 / norm(inside)) * inside;
        const double target = std::sqrt(std::max(0.0, c->value));
        if (std::abs(norm(multiply(a, inside)) - target) > 1e-7) return 1.0;

        const EigenCluster& other =
            c == &spec.clusters.front() ? spec.clusters.back() : spec.clusters.front();
        const CDElement mixed = (1.0 / std::sqrt(2.0)) * (inside + other.basis.front());
        if (std::abs(norm(multiply(a, mixed)) - target) <= 1e-5) return 1.0;
      }
      return 0.0;
    }
    return 1.0;
  });

  r.check("cancellation-roundtrip", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 5);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const CDElement a =
          t % 2 == 0 || n == 3 ? unit_element(n, rng) : random_zero_divisor(n, rng);
      const Spectrum spec = spectrum(a);
      // avoid near-singular operators where 1/lambda amplifies solver noise
      if (spec.lambda_min() > kZeroDivisorTol && spec.lambda_min() < 1e-3) continue;
      CDElement x0 = unit_element(n, rng);
      if (spec.lambda_min() <= kZeroDivisorTol)
        for (const CDElement& v : spec.clusters.front().basis) x0 = x0 - inner_real(x0, v) * v;
      const CDElement sol = cancel_solve(a, multiply(a, x0));
      return norm(sol - x0) / norm(x0);
    }
    return 1.0;
  });

  r.check("cancellation-no-solution", 0.5, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 5);
    const CDElement a = random_zero_divisor(n, rng);
    const Spectrum spec = spectrum(a);
    CDElement bad = zero_element(n);
    for (const CDElement& v : spec.clusters.front().basis) bad = bad + rng.next_normal() * v;
    if (norm(bad) < 1e-6) return 0.0;
    try {
      cancel_solve(a, bad);
      return 1.0;
    } catch (const NoSolutionError&) {
      return 0.0;
    }
  });

  r.check("alternative-extremes", 0.5, [](int t, SplitMix64& rng) {
    if (t % 2 == 0) {
      const CDElement a = unit_element(3, rng);
      const auto [lo, hi] = extreme_eigenvalues(a);
      return (std::abs(hi - lo) <= 1e-8 && is_alternative(a, 1e-8)) ? 0.0 : 1.0;
    }
    const CDElement z = random_zero_divisor(4, rng);
    const auto [lo, hi] = extreme_eigenvalues(z);
    return (hi - lo > 0.5 && !is_alternative(z, 1e-8)) ? 0.0 : 1.0;
  });

  r.check("mixed-operator-identity", 1e-10, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 5);
    const CDElement a = unit_c_perp(n, rng);
    const ComplexScalar beta = unit_complex(rng);
    const double theta = rng.next_double() * kPi / 2;
    const OperatorMatrix lhs = mixed_m_operator(a, beta, theta);
    const OperatorMatrix rhs =
        m_operator(std::cos(theta) * a + std::sin(theta) * lift_complex(beta, n));
    double worst = 0.0;
    for (int i = 0; i < lhs.dim(); ++i)
      for (int j = 0; j < lhs.dim(); ++j)
        worst = std::max(worst, std::abs(lhs.at(i, j) - rhs.at(i, j)));
    return worst;
  });

  r.check("operator-complex-linearity", 1e-10, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 5);
    const CDElement a = unit_element(n, rng);
    const CDElement x = unit_element(n, rng);
    const CDElement in = i_n_element(n);
    return norm(m_apply(a, multiply(in, x)) - multiply(in, m_apply(a, x)));
  });

  r.check("operator-conjugation-invariance", 1e-10, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 2, 5);
    const CDElement a = unit_element(n, rng);
    const CDElement x = unit_element(n, rng);
    return norm(m_apply(a, x) - m_apply(conjugate(a), x));
  });

  r.check("trace-pairing", 1e-9, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 3, 6);
    const CDElement x = unit_element(n, rng);
    const CDElement y = unit_element(n, rng);
    const double d = dim_of_level(n);
    return std::abs(trace_pairing(x, y) - d * inner_real(x, y)) / d;
  });
}

// ------------------------------------------------------------------
// pair-predictions

double pair_prediction_trial(int level, ComplexScalar alpha, ComplexScalar beta, SplitMix64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const CDElement a = unit_c_perp(level - 1, rng);
    const Spectrum base = spectrum(a);
    const SpectrumPrediction pred = predict_pair_spectrum(a, alpha, beta, base);
    if (pred.total_multiplicity() != dim_of_level(level)) return 1.0;
    const auto merged = merge_clusters(pred.entries, kClusterTol);
    if (min_gap(merged) < 1e-4) continue;  // redraw degenerate geometry

    const CDElement pair = join(multiply(lift_complex(alpha, level - 1), a),
                                multiply(lift_complex(beta, level - 1), a));
    return compare_spectra(spectrum(pair), pred.entries);
  }
  return 1.0;
}

void add_pair_checks(Runner& r) {
  r.check("pair-prediction-generic", 1e-7, [](int t, SplitMix64& rng) {
    const int level = cycle_level(t, 4, 6);
    return pair_prediction_trial(level, random_complex(rng), random_complex(rng), rng);
  });

  r.check("pair-prediction-orthogonal-max", 1e-7, [](int t, SplitMix64& rng) {
    const int level = cycle_level(t, 4, 6);
    const ComplexScalar alpha = random_complex(rng);
    const double sign = rng.next_u64() % 2 == 0 ? 1.0 : -1.0;
    const ComplexScalar beta{-sign * alpha.im, sign * alpha.re};  // beta = +/- i alpha
    return pair_prediction_trial(level, alpha, beta, rng);
  });

  r.check("pair-prediction-dependent", 1e-7, [](int t, SplitMix64& rng) {
    const int level = cycle_level(t, 4, 6);
    const ComplexScalar alpha = random_complex(rng);
    const ComplexScalar beta = t % 5 == 0 ? ComplexScalar{0.0, 0.0} : rng.next_normal() * alpha;
    return pair_prediction_trial(level, alpha, beta, rng);
  });
}

// ------------------------------------------------------------------
// a4

void add_a4_checks(Runner& r) {
  r.check("a4-closed-form", 1e-7, [](int, SplitMix64& rng) {
    const CDElement a = random_imaginary(3, rng);
    const CDElement b = random_imaginary(3, rng);
    const SpectrumPrediction pred = a4_spectrum(a, b);
    return compare_spectra(spectrum(join(a, b)), pred.entries);
  });

  r.check("a4-dependent-alternative", 0.5, [](int, SplitMix64& rng) {
    const CDElement a = unit_imaginary(3, rng);
    const double scale = rng.next_normal();
    const CDElement b = scale * a;
    const SpectrumPrediction pred = a4_spectrum(a, b);
    if (pred.entries.size() != 1 || pred.entries[0].multiplicity != 16) return 1.0;
    if (!is_alternative(join(a, b), 1e-9)) return 1.0;
    return compare_spectra(spectrum(join(a, b)), pred.entries) <= 1e-7 ? 0.0 : 1.0;
  });

  r.check("a4-zero-divisor-spectrum", 1e-7, [](int, SplitMix64& rng) {
    auto [a, b] = orthogonal_pair3(rng);
    const double scale = 0.25 + 2.0 * rng.next_double();
    return compare_spectra(spectrum(join(scale * a, scale * b)),
                           {{0.0, 4}, {1.0, 8}, {2.0, 4}});
  });

  r.check("a4-eigenbasis-residuals", 1e-8, [](int, SplitMix64& rng) {
    auto [a, b] = orthogonal_pair3(rng);
    const Spectrum spec = a4_eigenbasis(a, b);
    const OperatorMatrix M = m_operator(join(a, b));
    double worst = 0.0;
    for (const EigenCluster& c : spec.clusters)
      for (const CDElement& v : c.basis) worst = std::max(worst, norm(M.apply(v) - c.value * v));
    return worst;
  });

  r.check("a4-pair-one-eigenspace", 1e-8, [](int, SplitMix64& rng) {
    auto [a, b] = orthogonal_pair3(rng);
    const Subalgebra H = generated_subalgebra({a, b});
    if (H.dim() != 4) return 1.0;
    const CDElement pair = join(a, b);
    double worst = 0.0;
    for (const CDElement& u : H.basis)
      for (const CDElement& v : H.basis) {
        const CDElement w = (1.0 / std::sqrt(2.0)) * join(u, v);
        worst = std::max(worst, norm(m_apply(pair, w) - w));
      }
    return worst;
  });

  r.check_frequency("a4-generic-pair-generates", 200, 0.05, [](int, SplitMix64& rng) {
    const CDElement a = random_element(4, rng);
    const CDElement b = random_element(4, rng);
    return generated_subalgebra({a, b}).dim() == 16 ? 0.0 : 1.0;
  });
}

// ------------------------------------------------------------------
// spec-top

void add_spectop_checks(Runner& r) {
  r.check_counted("top-spectrum-tables", 3, 1e-7, [](int t, SplitMix64&) {
    const int n = 4 + t;
    std::vector<PredictedCluster> table{{0.0, dim_of_level(n) - 4 * n + 4}, {1.0, 8}};
    for (int k = 1; k <= n - 3; ++k) table.push_back({static_cast<double>(1 << k), 4});
    return compare_spectra(spectrum(top_zero_divisor(n)), table);
  });

  r.check_counted("top-extreme-eigenvalues", 3, 1e-7, [](int t, SplitMix64&) {
    const int n = 4 + t;
    const auto [lo, hi] = extreme_eigenvalues(top_zero_divisor(n));
    return std::max(std::abs(lo), std::abs(hi - dim_of_level(n - 3)));
  });

  r.check("eigenvalue-realization", 1e-7, [](int t, SplitMix64& rng) {
    const int n = cycle_level(t, 4, 5);
    const double top = dim_of_level(n - 3);
    const double lambda = t % 10 == 0 ? 0.0 : (t % 10 == 1 ? top : rng.next_double() * top);
    const Spectrum spec = spectrum(realize_eigenvalue(n, lambda));
    double best = 1e300;
    for (const EigenCluster& c : spec.clusters) best = std::min(best, std::abs(c.value - lambda));
    return best;
  });
}

}  // namespace

bool VerificationReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core-identities", "eigentheory",
                                              "pair-predictions", "a4", "spec-top", "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, uint64_t seed, int trials) {
  const auto start = std::chrono::steady_clock::now();
  Runner runner(seed, trials);

  if (suite == "core-identities") {
    add_core_checks(runner);
  } else if (suite == "eigentheory") {
    add_eigentheory_checks(runner);
  } else if (suite == "pair-predictions") {
    add_pair_checks(runner);
  } else if (suite == "a4") {
    add_a4_checks(runner);
  } else if (suite == "spec-top") {
    add_spectop_checks(runner);
  } else if (suite == "all") {
    add_core_checks(runner);
    add_eigentheory_checks(runner);
    add_pair_checks(runner);
    add_a4_checks(runner);
    add_spectop_checks(runner);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }

  VerificationReport report;
  report.suite = suite;
  report.seed = seed;
  report.trials = trials;
  report.checks = runner.take();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cdeig
