#include "cdeig/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cdeig {

namespace {

// Auto thresholds below come from the bundled benchmark: matrix assembly and
// the Gram product win from dimension 64 up, while the round-synchronous
// eigensolver only amortizes its barriers at dimension 256.
constexpr int kParallelDimThreshold = 64;
constexpr int kParallelEigenThreshold = 256;
constexpr double kJacobiRelTol = 1e-12;
constexpr int kJacobiMaxSweeps = 60;

bool use_parallel_at(Exec exec, int dim, int threshold) {
  switch (exec) {
    case Exec::Serial: return false;
    case Exec::Parallel: return true;
    case Exec::Auto: break;
  }
#ifdef _OPENMP
  return dim >= threshold;
#else
  (void)dim;
  (void)threshold;
  return false;
#endif
}

bool use_parallel(Exec exec, int dim) { return use_parallel_at(exec, dim, kParallelDimThreshold); }

// Angle annihilating B[p][q]; returns false when the entry is already zero.
bool rotation_for(const OperatorMatrix& B, int p, int q, double& c, double& s) {
  const double apq = B.at(p, q);
  if (std::abs(apq) < 1e-300) return false;
  const double tau = (B.at(q, q) - B.at(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = t * c;
  return true;
}

void rotate_rows(OperatorMatrix& B, int p, int q, double c, double s) {
  const int m = B.dim();
  for (int j = 0; j < m; ++j) {
    const double bpj = B.at(p, j);
    const double bqj = B.at(q, j);
    B.at(p, j) = c * bpj - s * bqj;
    B.at(q, j) = s * bpj + c * bqj;
  }
}

void rotate_cols(OperatorMatrix& B, int p, int q, double c, double s) {
  const int m = B.dim();
  for (int i = 0; i < m; ++i) {
    const double bip = B.at(i, p);
    const double biq = B.at(i, q);
    B.at(i, p) = c * bip - s * biq;
    B.at(i, q) = s * bip + c * biq;
  }
}

double off_diagonal_norm(const OperatorMatrix& B) {
  double acc = 0.0;
  const int m = B.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) acc += B.at(i, j) * B.at(i, j);
  return std::sqrt(acc);
}

EigenPairList collect_sorted(const OperatorMatrix& B, const OperatorMatrix& V) {
  const int m = B.dim();
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return B.at(a, a) < B.at(b, b); });
  EigenPairList pairs(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    pairs[k].value = B.at(order[k], order[k]);
    pairs[k].vector.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pairs[k].vector[i] = V.at(i, order[k]);
  }
  return pairs;
}

// Round-robin tournament schedule: m-1 rounds of m/2 disjoint pairs covering
// every index pair exactly once.
struct Tournament {
  std::vector<int> players;
  explicit Tournament(int m) : players(static_cast<size_t>(m)) {
    std::iota(players.begin(), players.end(), 0);
  }
  void advance() {
    const int m = static_cast<int>(players.size());
    const int last = players[m - 1];
    for (int j = m - 1; j >= 2; --j) players[j] = players[j - 1];
    players[1] = last;
  }
};

void check_symmetric_input(const OperatorMatrix& A) {
  if (!A.symmetric()) throw std::invalid_argument("eigensolver requires the symmetric flag");
  double maxabs = 0.0;
  for (double v : A.data()) maxabs = std::max(maxabs, std::abs(v));
  if (A.asymmetry() > 1e-12 * maxabs)
    throw std::invalid_argument("matrix flagged symmetric is not symmetric");
}

}  // namespace

std::vector<double> OperatorMatrix::apply(const std::vector<double>& v) const {
  std::vector<double> out(static_cast<size_t>(dim_), 0.0);
  for (int i = 0; i < dim_; ++i) {
    double acc = 0.0;
    const double* row = data_.data() + static_cast<size_t>(i) * dim_;
    for (int j = 0; j < dim_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

CDElement OperatorMatrix::apply(const CDElement& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  return CDElement(x.level, apply(x.coeffs));
}

double OperatorMatrix::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
  return worst;
}

double OperatorMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix I(dim, true);
  for (int i = 0; i < dim; ++i) I.at(i, i) = 1.0;
  return I;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<double>& d) {
  OperatorMatrix D(static_cast<int>(d.size()), true);
  for (int i = 0; i < D.dim(); ++i) D.at(i, i) = d[i];
  return D;
}

namespace detail {

namespace {
// Fills column k of out with a*e_k (Left) or e_k*a (Right).
void fill_column(OperatorMatrix& out, const CDElement& a, Side side, int k, double* col,
                 double* basis, double* work) {
  const int m = a.dim();
  std::fill(basis, basis + m, 0.0);
  basis[k] = 1.0;
  if (side == Side::Left)
    cd_mul(a.coeffs.data(), basis, col, work, m);
  else
    cd_mul(basis, a.coeffs.data(), col, work, m);
  for (int i = 0; i < m; ++i) out.at(i, k) = col[i];
}
}  // namespace

OperatorMatrix mult_matrix_serial(const CDElement& a, Side side) {
  const int m = a.dim();
  OperatorMatrix out(m);
  std::vector<double> col(static_cast<size_t>(m));
  std::vector<double> basis(static_cast<size_t>(m));
  std::vector<double> work(static_cast<size_t>(cd_mul_work_size(m)));
  for (int k = 0; k < m; ++k) fill_column(out, a, side, k, col.data(), basis.data(), work.data());
  return out;
}

OperatorMatrix mult_matrix_parallel(const CDElement& a, Side side) {
  const int m = a.dim();
  OperatorMatrix out(m);
#pragma omp parallel
  {
    std::vector<double> col(static_cast<size_t>(m));
    std::vector<double> basis(static_cast<size_t>(m));
    std::vector<double> work(static_cast<size_t>(cd_mul_work_size(m)));
#pragma omp for schedule(static)
    for (int k = 0; k < m; ++k) fill_column(out, a, side, k, col.data(), basis.data(), work.data());
  }
  return out;
}

namespace {
// M[i][j] = scale * <column i of L, column j of L>; computed on the transpose
// for contiguous access, upper triangle mirrored so M is exactly symmetric.
OperatorMatrix gram_scaled_impl(const OperatorMatrix& L, double scale, bool parallel) {
  const int m = L.dim();
  std::vector<double> lt(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lt[static_cast<size_t>(j) * m + i] = L.at(i, j);

  OperatorMatrix out(m, true);
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < m; ++i) {
    const double* ri = lt.data() + static_cast<size_t>(i) * m;
    for (int j = i; j < m; ++j) {
      const double* rj = lt.data() + static_cast<size_t>(j) * m;
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += ri[k] * rj[k];
      out.at(i, j) = scale * acc;
      out.at(j, i) = scale * acc;
    }
  }
  return out;
}
}  // namespace

OperatorMatrix gram_scaled_serial(const OperatorMatrix& L, double scale) {
  return gram_scaled_impl(L, scale, false);
}

OperatorMatrix gram_scaled_parallel(const OperatorMatrix& L, double scale) {
  return gram_scaled_impl(L, scale, true);
}

EigenPairList jacobi_eigen_serial(const OperatorMatrix& A) {
  check_symmetric_input(A);
  const int m = A.dim();
  OperatorMatrix B = A;
  OperatorMatrix V = OperatorMatrix::identity(m);
  const double fro = A.frobenius_norm();

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(B) <= kJacobiRelTol * fro) return collect_sorted(B, V);
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        double c, s;
        if (!rotation_for(B, p, q, c, s)) continue;
        rotate_rows(B, p, q, c, s);
        rotate_cols(B, p, q, c, s);
        rotate_cols(V, p, q, c, s);
      }
    }
  }
  if (off_diagonal_norm(B) <= kJacobiRelTol * fro) return collect_sorted(B, V);
  throw std::runtime_error("Jacobi eigensolver did not converge in 60 sweeps");
}

// Parallel variant: per round of the tournament schedule, all rotation angles
// are taken from the round-start matrix; the disjoint row-pair updates run in
// parallel, and the column phase is re-expressed row-by-row so every thread
// streams over contiguous memory.  Results do not depend on the thread count.
EigenPairList jacobi_eigen_parallel(const OperatorMatrix& A) {
  check_symmetric_input(A);
  const int m = A.dim();
  if (m < 2) return jacobi_eigen_serial(A);
  OperatorMatrix B = A;
  OperatorMatrix V = OperatorMatrix::identity(m);
  const double fro = A.frobenius_norm();
  const int half = m / 2;

  std::vector<int> ps(static_cast<size_t>(half)), qs(static_cast<size_t>(half));
  std::vector<double> cs(static_cast<size_t>(half)), ss(static_cast<size_t>(half));
  std::vector<char> active(static_cast<size_t>(half));

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(B) <= kJacobiRelTol * fro) return collect_sorted(B, V);
    Tournament schedule(m);
    // One parallel region per sweep; the phases inside each round are
    // separated by the loops' implicit barriers.
#pragma omp parallel
    for (int round = 0; round < m - 1; ++round) {
#pragma omp single
      for (int k = 0; k < half; ++k) {
        int p = schedule.players[k];
        int q = schedule.players[m - 1 - k];
        if (p > q) std::swap(p, q);
        ps[k] = p;
        qs[k] = q;
        active[k] = rotation_for(B, p, q, cs[k], ss[k]) ? 1 : 0;
      }
#pragma omp for schedule(static)
      for (int k = 0; k < half; ++k)
        if (active[k]) rotate_rows(B, ps[k], qs[k], cs[k], ss[k]);
#pragma omp for schedule(static)
      for (int i = 0; i < m; ++i) {
        double* row = B.data().data() + static_cast<size_t>(i) * m;
        double* vrow = V.data().data() + static_cast<size_t>(i) * m;
        for (int k = 0; k < half; ++k) {
          if (!active[k]) continue;
          const double c = cs[k];
          const double s = ss[k];
          const double bp = row[ps[k]];
          const double bq = row[qs[k]];
          row[ps[k]] = c * bp - s * bq;
          row[qs[k]] = s * bp + c * bq;
          const double vp = vrow[ps[k]];
          const double vq = vrow[qs[k]];
          vrow[ps[k]] = c * vp - s * vq;
          vrow[qs[k]] = s * vp + c * vq;
        }
      }
#pragma omp single
      schedule.advance();
    }
  }
  if (off_diagonal_norm(B) <= kJacobiRelTol * fro) return collect_sorted(B, V);
  throw std::runtime_error("Jacobi eigensolver did not converge in 60 sweeps");
}

}  // namespace detail

OperatorMatrix mult_matrix(const CDElement& a, Side side, Exec exec) {
  return use_parallel(exec, a.dim()) ? detail::mult_matrix_parallel(a, side)
                                     : detail::mult_matrix_serial(a, side);
}

OperatorMatrix m_operator(const CDElement& a, Exec exec) {
  const double nsq = norm_sq(a);
  if (nsq == 0.0) throw std::invalid_argument("operator of the zero element");
  const bool par = use_parallel(exec, a.dim());
  const OperatorMatrix L = par ? detail::mult_matrix_parallel(a, Side::Left)
                               : detail::mult_matrix_serial(a, Side::Left);
  return par ? detail::gram_scaled_parallel(L, 1.0 / nsq)
             : detail::gram_scaled_serial(L, 1.0 / nsq);
}

OperatorMatrix mixed_m_operator(const CDElement& a, ComplexScalar beta, double theta, Exec exec) {
  if (a.level < 1) throw std::invalid_argument("mixed operator needs level >= 1");
  if (std::abs(norm(a) - 1.0) > 1e-9) throw std::invalid_argument("a must be a unit vector");
  if (std::abs(norm(beta) - 1.0) > 1e-9) throw std::invalid_argument("beta must be a unit scalar");
  if (std::abs(a[0]) > 1e-9 || std::abs(a[a.dim() / 2]) > 1e-9)
    throw std::invalid_argument("a must be orthogonal to C_n");

  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  OperatorMatrix out = m_operator(a, exec);
  for (auto& v : out.data()) v *= c2;
  for (int i = 0; i < out.dim(); ++i) out.at(i, i) += s2;
  return out;
}

EigenPairList symmetric_eigen(const OperatorMatrix& A, Exec exec) {
  return use_parallel_at(exec, A.dim(), kParallelEigenThreshold)
             ? detail::jacobi_eigen_parallel(A)
             : detail::jacobi_eigen_serial(A);
}

void clamp_small_negatives(EigenPairList& pairs, double tol) {
  for (auto& p : pairs)
    if (std::abs(p.value) <= tol) p.value = 0.0;
}

double trace_pairing(const CDElement& x, const CDElement& y, Exec exec) {
  if (x.level != y.level) throw std::invalid_argument("level mismatch");
  const bool par = use_parallel(exec, x.dim());
  const OperatorMatrix A = par ? detail::mult_matrix_parallel(conjugate(x), Side::Left)
                               : detail::mult_matrix_serial(conjugate(x), Side::Left);
  const OperatorMatrix B = par ? detail::mult_matrix_parallel(y, Side::Left)
                               : detail::mult_matrix_serial(y, Side::Left);
  const int m = A.dim();
  double acc = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) acc += A.at(i, j) * B.at(j, i);
  return acc;
}

}  // namespace cdeig
