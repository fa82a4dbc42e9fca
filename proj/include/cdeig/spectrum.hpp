#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdeig/element.hpp"
#include "cdeig/linops.hpp"

namespace cdeig {

/// Default width for grouping raw eigenvalues into clusters.
inline constexpr double kClusterTol = 1e-7;
/// Threshold below which the minimum eigenvalue marks a zero-divisor.
inline constexpr double kZeroDivisorTol = 1e-8;
/// Eigenvalues of the positive semi-definite operator within this of zero are
/// snapped to zero before clustering.
inline constexpr double kZeroClampTol = 1e-9;

struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
  std::vector<CDElement> basis;  // orthonormal
};

/// Clustered eigenvalues of the operator of a, ascending, with orthonormal
/// eigenspace bases expressed as elements of A_n.
struct Spectrum {
  int level = 0;
  std::vector<EigenCluster> clusters;

  double lambda_min() const { return clusters.front().value; }
  double lambda_max() const { return clusters.back().value; }
  /// Cluster whose value is within tol, or nullptr.
  const EigenCluster* find(double value, double tol = kClusterTol) const;
  /// Multiplicity of the cluster at `value`, 0 when absent.
  int multiplicity_at(double value, double tol = kClusterTol) const;
};

Spectrum spectrum(const CDElement& a, double cluster_tol = kClusterTol, Exec exec = Exec::Auto);

struct EigenComponent {
  double value = 0.0;
  CDElement component;
};

/// Splits x into its projections onto the eigenspaces of a (components with
/// negligible norm are dropped).  The components are pairwise orthogonal and
/// sum back to x.
std::vector<EigenComponent> eigendecompose(const CDElement& x, const CDElement& a);
std::vector<EigenComponent> eigendecompose(const CDElement& x, const Spectrum& spec);

/// True when the minimum eigenvalue of the operator of a is at most tol.
bool is_zero_divisor(const CDElement& a, double tol = kZeroDivisorTol);

/// (minimum, maximum) eigenvalue of a.
std::pair<double, double> extreme_eigenvalues(const CDElement& a);

struct NoSolutionError : std::runtime_error {
  double residual;
  explicit NoSolutionError(double r)
      : std::runtime_error("ax = b has no solution: b is outside the image of left multiplication"),
        residual(r) {}
};

/// Solves ax = b through the eigendecomposition of b: each component with
/// eigenvalue above tol contributes conj(a)*b_i / (lambda_i |a|^2).  When 0 is
/// an eigenvalue the result is the minimal-norm solution, orthogonal to the
/// 0-eigenspace; throws NoSolutionError when the residual shows b is not in
/// the image.
CDElement cancel_solve(const CDElement& a, const CDElement& b, double tol = kZeroDivisorTol);

struct PredictedCluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Closed-form spectrum with a tag naming the formula that produced it.
struct SpectrumPrediction {
  std::vector<PredictedCluster> entries;  // ascending, coinciding values merged
  std::string method;

  int total_multiplicity() const;
};

/// Predicted spectrum of the doubled element (alpha*a, beta*a) from the
/// spectrum of a, for a orthogonal to C_{n-1}.  Covers the linearly dependent
/// (doubled multiplicities), generic, and orthogonal-equal-norm cases.
SpectrumPrediction predict_pair_spectrum(const CDElement& a, ComplexScalar alpha,
                                         ComplexScalar beta, const Spectrum& base);

/// Closed-form spectrum of (a, b) for imaginary octonions a, b: eigenvalues
/// 1 and 1 +/- 2|a||b|sin(theta)/(|a|^2+|b|^2) with multiplicities 8, 4, 4;
/// the dependent case is alternative with spectrum {1: 16}.
SpectrumPrediction a4_spectrum(const CDElement& a, const CDElement& b);

/// Explicit eigenbasis of (a, b) for orthogonal equal-norm imaginary
/// octonions: the 1-eigenspace is the doubled generated subalgebra, and the
/// 0- and 2-eigenspaces pair x against -/+ (ab)x/|ab|.
Spectrum a4_eigenbasis(const CDElement& a, const CDElement& b);

/// A unit zero-divisor of A_n whose 0-eigenspace has the maximal dimension
/// 2^n - 4n + 4; built from the seed (i, j)/sqrt(2) by repeatedly doubling
/// z -> (z, i_{n-1} z)/sqrt(2).  Requires level >= 4.
CDElement top_zero_divisor(int level);

/// An element of A_n with lambda in its spectrum, for lambda in
/// [0, 2^(n-3)]: mixes a top zero-divisor with 1 so that the shift law lands
/// an eigenvalue exactly on lambda.  Requires level >= 4.
CDElement realize_eigenvalue(int level, double lambda);

/// Membership test for the lambda-eigenspace by norms alone:
/// |ax| = sqrt(lambda)|a||x| and |M_a x| = lambda |x|, both within tol
/// (relative to |a||x| and |x| respectively).
bool verify_eig_norm(const CDElement& a, const CDElement& x, double lambda, double tol);

/// Applies the operator of a to x directly: conj(a)*(a*x) / |a|^2.
CDElement m_apply(const CDElement& a, const CDElement& x);

/// Merges entries whose values lie within tol; multiplicity-weighted mean
/// values, ascending order, zero-multiplicity entries dropped.
std::vector<PredictedCluster> merge_clusters(std::vector<PredictedCluster> entries, double tol);

}  // namespace cdeig
