#include "cdeig/element.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cdeig {

namespace {

void require_same_level(const CDElement& x, const CDElement& y) {
  if (x.level != y.level) throw std::invalid_argument("level mismatch");
}

}  // namespace

double norm(ComplexScalar a) { return std::sqrt(norm_sq(a)); }

CDElement::CDElement(int lvl, std::vector<double> c) : level(lvl), coeffs(std::move(c)) {
  if (dim() != dim_of_level(level)) throw std::invalid_argument("coefficient count must equal 2^level");
}

CDElement zero_element(int level) {
  return CDElement(level, std::vector<double>(static_cast<size_t>(dim_of_level(level)), 0.0));
}

CDElement basis_element(int level, int index) {
  if (index < 0 || index >= dim_of_level(level)) throw std::out_of_range("basis index out of range");
  CDElement e = zero_element(level);
  e[index] = 1.0;
  return e;
}

CDElement one_element(int level) { return basis_element(level, 0); }

CDElement i_n_element(int level) {
  if (level < 1) throw std::invalid_argument("i_n needs level >= 1");
  return basis_element(level, dim_of_level(level - 1));
}

CDElement lift_complex(ComplexScalar alpha, int level) {
  if (level < 1) throw std::invalid_argument("C_n needs level >= 1");
  CDElement x = zero_element(level);
  x[0] = alpha.re;
  x[x.dim() / 2] = alpha.im;
  return x;
}

CDElement operator+(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  CDElement out = x;
  for (int k = 0; k < out.dim(); ++k) out[k] += y[k];
  return out;
}

CDElement operator-(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  CDElement out = x;
  for (int k = 0; k < out.dim(); ++k) out[k] -= y[k];
  return out;
}

CDElement operator-(const CDElement& x) {
  CDElement out = x;
  for (double& c : out.coeffs) c = -c;
  return out;
}

CDElement operator*(double r, const CDElement& x) {
  CDElement out = x;
  for (double& c : out.coeffs) c *= r;
  return out;
}

CDElement operator*(const CDElement& x, double r) { return r * x; }

CDElement operator*(const CDElement& x, const CDElement& y) { return multiply(x, y); }

namespace detail {

namespace {
void conj_block(const double* x, double* out, int m) {
  out[0] = x[0];
  for (int k = 1; k < m; ++k) out[k] = -x[k];
}
}  // namespace

void cd_mul(const double* x, const double* y, double* out, double* work, int m) {
  if (m == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = m / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;
  double* t1 = work;
  double* t2 = work + h;
  double* sub = work + 2 * h;

  // low half: ac - d*b
  cd_mul(a, c, out, sub, h);
  conj_block(d, t1, h);
  cd_mul(t1, b, t2, sub, h);
  for (int k = 0; k < h; ++k) out[k] -= t2[k];

  // high half: da + bc*
  cd_mul(d, a, out + h, sub, h);
  conj_block(c, t1, h);
  cd_mul(b, t1, t2, sub, h);
  for (int k = 0; k < h; ++k) out[h + k] += t2[k];
}

}  // namespace detail

CDElement multiply(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  CDElement out = zero_element(x.level);
  std::vector<double> work(static_cast<size_t>(detail::cd_mul_work_size(x.dim())));
  detail::cd_mul(x.coeffs.data(), y.coeffs.data(), out.coeffs.data(), work.data(), x.dim());
  return out;
}

CDElement conjugate(const CDElement& x) {
  CDElement out = x;
  for (int k = 1; k < out.dim(); ++k) out[k] = -out[k];
  return out;
}

CDElement real_part(const CDElement& x) {
  CDElement out = zero_element(x.level);
  out[0] = x[0];
  return out;
}

CDElement imag_part(const CDElement& x) {
  CDElement out = x;
  out[0] = 0.0;
  return out;
}

double inner_real(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  return std::inner_product(x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(), 0.0);
}

ComplexScalar inner_hermitian(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  if (x.level < 1) throw std::invalid_argument("Hermitian inner product needs level >= 1");
  const CDElement p = multiply(x, conjugate(y));
  return {p[0], p[p.dim() / 2]};
}

double norm_sq(const CDElement& x) { return inner_real(x, x); }

double norm(const CDElement& x) { return std::sqrt(norm_sq(x)); }

CDElement cross(const CDElement& x, const CDElement& y) {
  require_same_level(x, y);
  return imag_part(multiply(x, conjugate(y)));
}

std::pair<CDElement, CDElement> split(const CDElement& x) {
  if (x.level < 1) throw std::invalid_argument("split needs level >= 1");
  const int h = x.dim() / 2;
  CDElement lo = zero_element(x.level - 1);
  CDElement hi = zero_element(x.level - 1);
  std::copy_n(x.coeffs.begin(), h, lo.coeffs.begin());
  std::copy_n(x.coeffs.begin() + h, h, hi.coeffs.begin());
  return {std::move(lo), std::move(hi)};
}

CDElement join(const CDElement& b, const CDElement& c) {
  require_same_level(b, c);
  CDElement out = zero_element(b.level + 1);
  std::copy(b.coeffs.begin(), b.coeffs.end(), out.coeffs.begin());
  std::copy(c.coeffs.begin(), c.coeffs.end(), out.coeffs.begin() + b.dim());
  return out;
}

ComplexSplit project_complex(const CDElement& x) {
  if (x.level < 1) throw std::invalid_argument("complex projection needs level >= 1");
  ComplexSplit s;
  const int mid = x.dim() / 2;
  s.complex_part = {x[0], x[mid]};
  s.perp_part = x;
  s.perp_part[0] = 0.0;
  s.perp_part[mid] = 0.0;

  const double pn = norm(s.perp_part);
  const double cn = norm(s.complex_part);
  s.theta = std::atan2(cn, pn);
  s.unit_perp = pn > 0.0 ? (1.0 / pn) * s.perp_part : zero_element(x.level);
  s.unit_complex = cn > 0.0 ? lift_complex({s.complex_part.re / cn, s.complex_part.im / cn}, x.level)
                            : zero_element(x.level);
  return s;
}

bool is_alternative(const CDElement& a, double tol) {
  const CDElement a_sq = multiply(a, a);
  const int m = a.dim();
  std::vector<double> work(static_cast<size_t>(detail::cd_mul_work_size(m)));
  CDElement ax = zero_element(a.level);
  CDElement aax = zero_element(a.level);
  CDElement a_sq_x = zero_element(a.level);
  double worst = 0.0;
  for (int k = 0; k < m; ++k) {
    const CDElement ek = basis_element(a.level, k);
    detail::cd_mul(a.coeffs.data(), ek.coeffs.data(), ax.coeffs.data(), work.data(), m);
    detail::cd_mul(a.coeffs.data(), ax.coeffs.data(), aax.coeffs.data(), work.data(), m);
    detail::cd_mul(a_sq.coeffs.data(), ek.coeffs.data(), a_sq_x.coeffs.data(), work.data(), m);
    double err_sq = 0.0;
    for (int r = 0; r < m; ++r) {
      const double d = aax[r] - a_sq_x[r];
      err_sq += d * d;
    }
    worst = std::max(worst, std::sqrt(err_sq));
  }
  return worst <= tol * norm_sq(a);
}

}  // namespace cdeig
