#include "cdeig/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cdeig/subalgebra.hpp"

namespace cdeig {

namespace {

void require_nonzero(const CDElement& a) {
  if (norm_sq(a) == 0.0) throw std::invalid_argument("zero element");
}

// One modified Gram-Schmidt pass; solver output is near-orthonormal already.
void reorthonormalize(std::vector<CDElement>& vecs) {
  for (size_t i = 0; i < vecs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) vecs[i] = vecs[i] - inner_real(vecs[i], vecs[j]) * vecs[j];
    const double n = norm(vecs[i]);
    if (n > 0.0) vecs[i] = (1.0 / n) * vecs[i];
  }
}

}  // namespace

const EigenCluster* Spectrum::find(double value, double tol) const {
  for (const EigenCluster& c : clusters)
    if (std::abs(c.value - value) <= tol) return &c;
  return nullptr;
}

int Spectrum::multiplicity_at(double value, double tol) const {
  const EigenCluster* c = find(value, tol);
  return c ? c->multiplicity : 0;
}

Spectrum spectrum(const CDElement& a, double cluster_tol, Exec exec) {
  require_nonzero(a);
  EigenPairList pairs = symmetric_eigen(m_operator(a, exec), exec);
  clamp_small_negatives(pairs, kZeroClampTol);

  Spectrum spec;
  spec.level = a.level;
  size_t start = 0;
  for (size_t k = 1; k <= pairs.size(); ++k) {
    if (k < pairs.size() && pairs[k].value - pairs[k - 1].value <= cluster_tol) continue;
    EigenCluster cluster;
    double sum = 0.0;
    for (size_t i = start; i < k; ++i) {
      sum += pairs[i].value;
      cluster.basis.emplace_back(a.level, std::move(pairs[i].vector));
    }
    cluster.multiplicity = static_cast<int>(k - start);
    cluster.value = sum / cluster.multiplicity;
    reorthonormalize(cluster.basis);
    spec.clusters.push_back(std::move(cluster));
    start = k;
  }
  return spec;
}

std::vector<EigenComponent> eigendecompose(const CDElement& x, const Spectrum& spec) {
  if (x.level != spec.level) throw std::invalid_argument("level mismatch");
  std::vector<EigenComponent> parts;
  const double xn = norm(x);
  for (const EigenCluster& c : spec.clusters) {
    CDElement comp = zero_element(x.level);
    for (const CDElement& v : c.basis) comp = comp + inner_real(x, v) * v;
    if (norm(comp) > 1e-12 * xn) parts.push_back({c.value, std::move(comp)});
  }
  return parts;
}

std::vector<EigenComponent> eigendecompose(const CDElement& x, const CDElement& a) {
  require_nonzero(a);
  return eigendecompose(x, spectrum(a));
}

bool is_zero_divisor(const CDElement& a, double tol) {
  require_nonzero(a);
  const EigenPairList pairs = symmetric_eigen(m_operator(a));
  return pairs.front().value <= tol;
}

std::pair<double, double> extreme_eigenvalues(const CDElement& a) {
  const Spectrum spec = spectrum(a);
  return {spec.lambda_min(), spec.lambda_max()};
}

CDElement m_apply(const CDElement& a, const CDElement& x) {
  require_nonzero(a);
  return (1.0 / norm_sq(a)) * multiply(conjugate(a), multiply(a, x));
}

CDElement cancel_solve(const CDElement& a, const CDElement& b, double tol) {
  require_nonzero(a);
  const Spectrum spec = spectrum(a);
  const double scale = 1.0 / norm_sq(a);
  const CDElement a_conj = conjugate(a);

  CDElement x = zero_element(a.level);
  for (const EigenCluster& c : spec.clusters) {
    if (c.value <= tol) continue;
    CDElement b_part = zero_element(a.level);
    for (const CDElement& v : c.basis) b_part = b_part + inner_real(b, v) * v;
    x = x + (scale / c.value) * multiply(a_conj, b_part);
  }

  const double residual = norm(multiply(a, x) - b);
  if (residual > 1e-7 * norm(b)) throw NoSolutionError(residual);
  return x;
}

int SpectrumPrediction::total_multiplicity() const {
  int total = 0;
  for (const PredictedCluster& e : entries) total += e.multiplicity;
  return total;
}

std::vector<PredictedCluster> merge_clusters(std::vector<PredictedCluster> entries, double tol) {
  std::erase_if(entries, [](const PredictedCluster& e) { return e.multiplicity == 0; });
  std::sort(entries.begin(), entries.end(),
            [](const PredictedCluster& a, const PredictedCluster& b) { return a.value < b.value; });
  std::vector<PredictedCluster> merged;
  for (const PredictedCluster& e : entries) {
    if (!merged.empty() && e.value - merged.back().value <= tol) {
      PredictedCluster& last = merged.back();
      const int m = last.multiplicity + e.multiplicity;
      last.value = (last.value * last.multiplicity + e.value * e.multiplicity) / m;
      last.multiplicity = m;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

SpectrumPrediction predict_pair_spectrum(const CDElement& a, ComplexScalar alpha,
                                         ComplexScalar beta, const Spectrum& base) {
  require_nonzero(a);
  if (a.level < 1) throw std::invalid_argument("doubled elements need level >= 1");
  if (base.level != a.level) throw std::invalid_argument("base spectrum level mismatch");
  const double an = norm(a);
  if (std::abs(a[0]) > 1e-7 * an || std::abs(a[a.dim() / 2]) > 1e-7 * an)
    throw std::invalid_argument("a must be orthogonal to C_{n-1}");
  const double pair_norm_sq = norm_sq(alpha) + norm_sq(beta);
  if (pair_norm_sq == 0.0) throw std::invalid_argument("alpha and beta cannot both vanish");

  const double g = 2.0 * std::abs(cross_im(alpha, beta)) / pair_norm_sq;

  SpectrumPrediction pred;
  if (g <= 1e-9) {
    // Linearly dependent pair: same eigenvalues, multiplicities doubled.
    pred.method = "pair-doubling";
    for (const EigenCluster& c : base.clusters)
      pred.entries.push_back({c.value, 2 * c.multiplicity});
    pred.entries = merge_clusters(std::move(pred.entries), 1e-9);
    return pred;
  }

  // The doubled octonion-like subalgebra contributes 8 at eigenvalue 1; the
  // rest of the 1-eigenspace splits into (1 +/- g), and every other
  // lambda-eigenspace reappears at (1 +/- g) * lambda.
  pred.method = std::abs(g - 1.0) <= 1e-9 ? "pair-orthogonal-max" : "pair-general";
  pred.entries.push_back({1.0, 8});
  for (const EigenCluster& c : base.clusters) {
    const bool is_one = std::abs(c.value - 1.0) <= kClusterTol;
    const int m = is_one ? c.multiplicity - 4 : c.multiplicity;
    pred.entries.push_back({(1.0 + g) * c.value, m});
    pred.entries.push_back({(1.0 - g) * c.value, m});
  }
  pred.entries = merge_clusters(std::move(pred.entries), 1e-9);
  return pred;
}

namespace {

void require_imaginary_octonion(const CDElement& a) {
  if (a.level != 3) throw std::invalid_argument("expected a level-3 element");
  if (std::abs(a[0]) > 1e-9 * std::max(1.0, norm(a)))
    throw std::invalid_argument("expected an imaginary element");
}

}  // namespace

SpectrumPrediction a4_spectrum(const CDElement& a, const CDElement& b) {
  require_imaginary_octonion(a);
  require_imaginary_octonion(b);
  const double na_sq = norm_sq(a);
  const double nb_sq = norm_sq(b);
  if (na_sq + nb_sq == 0.0) throw std::invalid_argument("a and b cannot both vanish");

  SpectrumPrediction pred;
  const double cross_norm = norm(cross(a, b));
  if (cross_norm <= 1e-12 * (na_sq + nb_sq)) {
    // Dependent imaginary pair: (a, b) is alternative.
    pred.method = "a4-alternative";
    pred.entries = {{1.0, 16}};
    return pred;
  }
  const double s = 2.0 * cross_norm / (na_sq + nb_sq);
  pred.method = "a4-closed-form";
  pred.entries = merge_clusters({{1.0 - s, 4}, {1.0, 8}, {1.0 + s, 4}}, 1e-9);
  return pred;
}

Spectrum a4_eigenbasis(const CDElement& a, const CDElement& b) {
  require_imaginary_octonion(a);
  require_imaginary_octonion(b);
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("a and b must be non-zero");
  if (std::abs(inner_real(a, b)) > 1e-9 * na * nb)
    throw std::invalid_argument("a and b must be orthogonal");
  if (std::abs(na - nb) > 1e-9 * na) throw std::invalid_argument("a and b must have equal norms");

  const Subalgebra H = generated_subalgebra({a, b});
  if (H.dim() != 4) throw std::runtime_error("generated subalgebra of the pair is not quaternionic");
  const std::vector<CDElement> perp = orthonormal_complement(H);

  CDElement ab = multiply(a, b);
  ab = (1.0 / norm(ab)) * ab;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Spectrum spec;
  spec.level = 4;
  EigenCluster zero{0.0, 4, {}};
  EigenCluster one{1.0, 8, {}};
  EigenCluster two{2.0, 4, {}};
  for (const CDElement& x : perp) {
    const CDElement cx = multiply(ab, x);
    zero.basis.push_back(inv_sqrt2 * join(x, -cx));
    two.basis.push_back(inv_sqrt2 * join(x, cx));
  }
  for (const CDElement& u : H.basis) {
    one.basis.push_back(join(u, zero_element(3)));
    one.basis.push_back(join(zero_element(3), u));
  }
  spec.clusters = {std::move(zero), std::move(one), std::move(two)};
  return spec;
}

CDElement top_zero_divisor(int level) {
  if (level < 4) throw std::invalid_argument("top zero-divisors need level >= 4");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CDElement z = inv_sqrt2 * join(basis_element(3, 1), basis_element(3, 2));  // (i, j)/sqrt(2)
  for (int n = 5; n <= level; ++n)
    z = inv_sqrt2 * join(z, multiply(i_n_element(n - 1), z));
  return z;
}

CDElement realize_eigenvalue(int level, double lambda) {
  if (level < 4) throw std::invalid_argument("eigenvalue realization needs level >= 4");
  const double top = static_cast<double>(dim_of_level(level - 3));
  if (lambda < 0.0 || lambda > top) throw std::out_of_range("lambda outside [0, 2^(n-3)]");

  // Mixing a with 1 shifts each eigenvalue mu to sin^2(theta) + mu cos^2(theta);
  // aim the 0 branch at lambda <= 1 and the 2^(n-3) branch at lambda >= 1.
  const double cos_sq = lambda <= 1.0 ? 1.0 - lambda : (lambda - 1.0) / (top - 1.0);
  const double sin_sq = 1.0 - cos_sq;
  const CDElement a = top_zero_divisor(level);
  return std::sqrt(cos_sq) * a + std::sqrt(sin_sq) * one_element(level);
}

bool verify_eig_norm(const CDElement& a, const CDElement& x, double lambda, double tol) {
  require_nonzero(a);
  if (lambda < 0.0) throw std::invalid_argument("lambda must be non-negative");
  const double na = norm(a);
  const double nx = norm(x);
  if (nx == 0.0) return true;

  const CDElement ax = multiply(a, x);
  const double r1 = std::abs(norm(ax) - std::sqrt(lambda) * na * nx) / (na * nx);
  const CDElement max = (1.0 / norm_sq(a)) * multiply(conjugate(a), ax);
  const double r2 = std::abs(norm(max) - lambda * nx) / nx;
  return r1 <= tol && r2 <= tol;
}

}  // namespace cdeig
