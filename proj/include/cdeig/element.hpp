#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cdeig {

/// Dimension of the level-n algebra A_n (2^n real coordinates).
constexpr int dim_of_level(int level) {
  if (level < 0 || level > 30) throw std::invalid_argument("level out of range");
  return 1 << level;
}

/// An element of the complex subalgebra C_n, written re*1 + im*i_n.
struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;
};

constexpr ComplexScalar conjugate(ComplexScalar a) { return {a.re, -a.im}; }
constexpr ComplexScalar operator+(ComplexScalar a, ComplexScalar b) { return {a.re + b.re, a.im + b.im}; }
constexpr ComplexScalar operator-(ComplexScalar a, ComplexScalar b) { return {a.re - b.re, a.im - b.im}; }
constexpr ComplexScalar operator*(ComplexScalar a, ComplexScalar b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr ComplexScalar operator*(double r, ComplexScalar a) { return {r * a.re, r * a.im}; }
double norm(ComplexScalar a);
constexpr double norm_sq(ComplexScalar a) { return a.re * a.re + a.im * a.im; }

/// Imaginary part of a*conj(b); for scalars this is a real multiple of i_n,
/// returned as its signed i_n coefficient.
constexpr double cross_im(ComplexScalar a, ComplexScalar b) { return a.im * b.re - a.re * b.im; }

/// An element of A_n stored as 2^n real coordinates over the standard basis.
///
/// Basis indexing: e_0 = 1; for k < 2^(n-1), e_k = (e_k, 0); and
/// e_{2^(n-1)+k} = (0, e_k), so i_n = e_{2^(n-1)}.  At level 3 this gives the
/// order {1, i, j, k, t, it, jt, kt}.
struct CDElement {
  int level = 0;
  std::vector<double> coeffs = {0.0};

  CDElement() = default;
  CDElement(int lvl, std::vector<double> c);

  int dim() const { return static_cast<int>(coeffs.size()); }
  double operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }
  double& operator[](int k) { return coeffs[static_cast<size_t>(k)]; }
};

CDElement zero_element(int level);
CDElement basis_element(int level, int index);
/// The multiplicative identity 1 = e_0.
CDElement one_element(int level);
/// The distinguished imaginary unit i_n = e_{2^(n-1)}; requires level >= 1.
CDElement i_n_element(int level);
/// Embeds re*1 + im*i_n into A_n; requires level >= 1.
CDElement lift_complex(ComplexScalar alpha, int level);

CDElement operator+(const CDElement& x, const CDElement& y);
CDElement operator-(const CDElement& x, const CDElement& y);
CDElement operator-(const CDElement& x);
CDElement operator*(double r, const CDElement& x);
CDElement operator*(const CDElement& x, double r);
CDElement operator*(const CDElement& x, const CDElement& y);

/// Cayley-Dickson product, recursing on (a,b)(c,d) = (ac - d*b, da + bc*).
CDElement multiply(const CDElement& x, const CDElement& y);
/// Conjugation (a,b)* = (a*, -b); fixes e_0 and negates every other coordinate.
CDElement conjugate(const CDElement& x);
CDElement real_part(const CDElement& x);
CDElement imag_part(const CDElement& x);

/// Real inner product <x,y> = Re(x y*); equals the Euclidean dot product of
/// coordinate vectors.
double inner_real(const CDElement& x, const CDElement& y);
/// Hermitian inner product: the projection of x y* onto C_n.  Requires level >= 1.
ComplexScalar inner_hermitian(const CDElement& x, const CDElement& y);
double norm(const CDElement& x);
double norm_sq(const CDElement& x);

/// Cross product: the imaginary part of x y*.
CDElement cross(const CDElement& x, const CDElement& y);

/// Halves of the pair representation A_n = A_{n-1} x A_{n-1}; requires level >= 1.
std::pair<CDElement, CDElement> split(const CDElement& x);
/// Forms the level-(m+1) element (b, c) from two level-m elements.
CDElement join(const CDElement& b, const CDElement& c);

/// Orthogonal decomposition x = beta + perp with beta in C_n and perp in
/// C_n^perp, plus the polar form x = |x| (unit_perp cos(theta) + unit_complex sin(theta))
/// with theta in [0, pi/2].  A vanishing part leaves the corresponding unit
/// vector zero; the polar identity still holds because its weight is zero.
struct ComplexSplit {
  ComplexScalar complex_part;
  CDElement perp_part;
  double theta = 0.0;
  CDElement unit_perp;
  CDElement unit_complex;
};
ComplexSplit project_complex(const CDElement& x);

/// True when max over basis x of |a(ax) - a^2 x| stays within tol*|a|^2.
bool is_alternative(const CDElement& a, double tol);

namespace detail {
/// Raw recursive product kernel: out = x*y for blocks of length m (a power of
/// two).  work must hold at least 2*m doubles; out must not alias x or y.
void cd_mul(const double* x, const double* y, double* out, double* work, int m);
constexpr int cd_mul_work_size(int m) { return 2 * m; }
}  // namespace detail

}  // namespace cdeig
