#include "cdeig/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "cdeig/parser.hpp"
#include "cdeig/rng.hpp"

namespace cdeig {

namespace {

CDElement unit_c_perp_at(int level, SplitMix64& rng) {
  return random_unit(rng, [&](SplitMix64& r) { return random_c_perp(level, r); });
}

ComplexScalar unit_complex_at(SplitMix64& rng) {
  for (;;) {
    const ComplexScalar z = random_complex(rng);
    const double n = norm(z);
    if (n > 1e-6) return {z.re / n, z.im / n};
  }
}

std::pair<CDElement, CDElement> orthogonal_pair3(SplitMix64& rng) {
  const CDElement a =
      random_unit(rng, [](SplitMix64& r) { return random_imaginary(3, r); });
  for (;;) {
    CDElement b = random_imaginary(3, rng);
    b = b - inner_real(b, a) * a;
    const double n = norm(b);
    if (n > 1e-6) return {a, (1.0 / n) * b};
  }
}

CDElement random_zero_divisor(int level, SplitMix64& rng) {
  auto [a, b] = orthogonal_pair3(rng);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CDElement z = inv_sqrt2 * join(a, b);
  for (int m = 5; m <= level; ++m) z = inv_sqrt2 * join(z, multiply(i_n_element(m - 1), z));
  return z;
}

CDElement doubled_pair(int level, ComplexScalar alpha, ComplexScalar beta, const CDElement& a) {
  return join(multiply(lift_complex(alpha, level - 1), a),
              multiply(lift_complex(beta, level - 1), a));
}

// Sample families for the 1-eigenspace tally: generic elements, doubled
// pairs (generic and degenerate), lifted lower-level elements, zero-divisors,
// and at level 5 the known witness with a 4-dimensional 1-eigenspace.
CDElement eig1_sample(int level, int t, SplitMix64& rng) {
  const int families = level == 5 ? 6 : 5;
  switch (t % families) {
    case 0:
      return random_element(level, rng);
    case 1: {
      const CDElement a = unit_c_perp_at(level - 1, rng);
      return doubled_pair(level, random_complex(rng), random_complex(rng), a);
    }
    case 2: {
      const CDElement a = unit_c_perp_at(level - 1, rng);
      const ComplexScalar alpha = unit_complex_at(rng);
      return doubled_pair(level, alpha, rng.next_normal() * alpha, a);
    }
    case 3:
      return join(random_element(level - 1, rng), zero_element(level - 1));
    case 4:
      return random_zero_divisor(level, rng);
    default: {
      static const CDElement witness = parse_element("((0,t),(t+it,1+i+j))", 5);
      return multiply(lift_complex(unit_complex_at(rng), 5), witness);
    }
  }
}

CDElement zd_sample(int level, int t, SplitMix64& rng) {
  switch (t % 3) {
    case 0:
      return random_zero_divisor(level, rng);
    case 1: {
      // orthogonal equal-norm scalars force a zero eigenvalue
      const CDElement a = unit_c_perp_at(level - 1, rng);
      const ComplexScalar alpha = unit_complex_at(rng);
      const double sign = rng.next_u64() % 2 == 0 ? 1.0 : -1.0;
      return doubled_pair(level, alpha, {-sign * alpha.im, sign * alpha.re}, a);
    }
    default: {
      const CDElement a = level >= 5 ? random_zero_divisor(level - 1, rng)
                                     : unit_c_perp_at(level - 1, rng);
      const ComplexScalar alpha = unit_complex_at(rng);
      const double sign = rng.next_u64() % 2 == 0 ? 1.0 : -1.0;
      return doubled_pair(level, alpha, {-sign * alpha.im, sign * alpha.re}, a);
    }
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string spectrum_key(const Spectrum& spec, double tol) {
  std::string key;
  for (const EigenCluster& c : spec.clusters) {
    if (!key.empty()) key += ';';
    const double rounded = std::round(c.value / tol) * tol;
    key += format_value(rounded == 0.0 ? 0.0 : rounded);  // normalize -0
    key += ':' + std::to_string(c.multiplicity);
  }
  return key;
}

}  // namespace

std::string run_search(const std::string& question, int level, int samples, uint64_t seed,
                       double cluster_tol) {
  if (level < 4 || level > 8) throw std::invalid_argument("search level must be in [4, 8]");
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  if (question == "eig1-dims") {
    std::map<int, long> counts;
    std::vector<int> dims(static_cast<size_t>(samples));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < samples; ++t) {
      SplitMix64 rng(trial_seed(seed, t));
      const Spectrum spec = spectrum(eig1_sample(level, t, rng), cluster_tol);
      dims[t] = spec.multiplicity_at(1.0, 1e-6);
    }
    for (int d : dims) ++counts[d];
    std::string out = "dim_eig1,count\n";
    for (const auto& [dim, count] : counts)
      out += std::to_string(dim) + ',' + std::to_string(count) + '\n';
    return out;
  }

  if (question == "zd-spectra") {
    std::vector<std::string> keys(static_cast<size_t>(samples));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < samples; ++t) {
      SplitMix64 rng(trial_seed(seed, t));
      keys[t] = spectrum_key(spectrum(zd_sample(level, t, rng), cluster_tol), cluster_tol);
    }
    std::map<std::string, long> counts;
    for (const std::string& k : keys) ++counts[k];
    std::string out = "spectrum,count\n";
    for (const auto& [key, count] : counts)
      out += key + ',' + std::to_string(count) + '\n';
    return out;
  }

  throw std::invalid_argument("unknown question '" + question + "'");
}

}  // namespace cdeig
