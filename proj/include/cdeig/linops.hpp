#pragma once

#include <vector>

#include "cdeig/element.hpp"

namespace cdeig {

enum class Side { Left, Right };

/// Kernel selection.  Auto picks the OpenMP path for matrices large enough to
/// amortize thread startup; Serial is the reference implementation kept for
/// testing and benchmarking.
enum class Exec { Auto, Serial, Parallel };

/// Dense square matrix of a linear operator on A_n, row-major.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(int dim, bool symmetric = false)
      : dim_(dim), symmetric_(symmetric), data_(static_cast<size_t>(dim) * dim, 0.0) {}

  int dim() const { return dim_; }
  bool symmetric() const { return symmetric_; }
  void set_symmetric(bool s) { symmetric_ = s; }

  double at(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
  double& at(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  std::vector<double> apply(const std::vector<double>& v) const;
  CDElement apply(const CDElement& x) const;

  /// max |A - A^T| over entries; 0 for an exactly symmetric matrix.
  double asymmetry() const;
  double frobenius_norm() const;

  static OperatorMatrix identity(int dim);
  static OperatorMatrix diagonal(const std::vector<double>& d);

 private:
  int dim_ = 0;
  bool symmetric_ = false;
  std::vector<double> data_;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};
/// Raw solver output: eigenvalues ascending, vectors orthonormal.
using EigenPairList = std::vector<EigenPair>;

/// Matrix of left or right multiplication by a: column k holds the
/// coordinates of a*e_k (Left) or e_k*a (Right).
OperatorMatrix mult_matrix(const CDElement& a, Side side, Exec exec = Exec::Auto);

/// The normalized symmetric operator (1/|a|^2) L_{a*} L_a.  Built as
/// (1/|a|^2) L_a^T L_a, which is exactly symmetric entry-for-entry.
OperatorMatrix m_operator(const CDElement& a, Exec exec = Exec::Auto);

/// I sin^2(theta) + M_a cos^2(theta) for unit a in C_n^perp and unit beta in
/// C_n; equals the operator of a*cos(theta) + beta*sin(theta) directly.
OperatorMatrix mixed_m_operator(const CDElement& a, ComplexScalar beta, double theta,
                                Exec exec = Exec::Auto);

/// All eigenpairs of a symmetric matrix by cyclic Jacobi rotations.
/// Converges when the off-diagonal Frobenius norm drops below 1e-12 times the
/// matrix Frobenius norm; throws after 60 sweeps without convergence or when
/// the symmetric flag is not set.
EigenPairList symmetric_eigen(const OperatorMatrix& A, Exec exec = Exec::Auto);

/// Snaps eigenvalues within tol of zero to exactly zero (for operators known
/// to be positive semi-definite).
void clamp_small_negatives(EigenPairList& pairs, double tol);

/// tr(L_{x*} L_y), evaluated from the two operator matrices.
double trace_pairing(const CDElement& x, const CDElement& y, Exec exec = Exec::Auto);

namespace detail {
// Serial/OpenMP kernel pairs; the serial versions are the reference
// implementations used by tests and the benchmark.
OperatorMatrix mult_matrix_serial(const CDElement& a, Side side);
OperatorMatrix mult_matrix_parallel(const CDElement& a, Side side);
OperatorMatrix gram_scaled_serial(const OperatorMatrix& L, double scale);
OperatorMatrix gram_scaled_parallel(const OperatorMatrix& L, double scale);
EigenPairList jacobi_eigen_serial(const OperatorMatrix& A);
EigenPairList jacobi_eigen_parallel(const OperatorMatrix& A);
}  // namespace detail

}  // namespace cdeig
