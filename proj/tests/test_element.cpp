#include <doctest.h>

#include <cmath>

#include "cdeig/element.hpp"
#include "cdeig/rng.hpp"

using namespace cdeig;

namespace {

double dist(const CDElement& x, const CDElement& y) { return norm(x - y); }

// Conjugation straight off the inductive definition (a,b)* = (a*, -b); the
// production code negates all non-real coordinates in one pass.
CDElement conjugate_recursive(const CDElement& x) {
  if (x.level == 0) return x;
  auto [a, b] = split(x);
  return join(conjugate_recursive(a), -b);
}

}  // namespace

TEST_CASE("basis elements") {
  const CDElement e0 = basis_element(3, 0);
  CHECK(e0.level == 3);
  CHECK(e0[0] == 1.0);
  for (int k = 1; k < 8; ++k) CHECK(e0[k] == 0.0);

  // t = i_3 sits at index 4
  const CDElement t = basis_element(3, 4);
  CHECK(dist(t, i_n_element(3)) == 0.0);

  for (int n = 1; n <= 8; ++n)
    CHECK(dist(i_n_element(n), basis_element(n, dim_of_level(n - 1))) == 0.0);

  CHECK_THROWS_AS(basis_element(3, 8), std::out_of_range);
  CHECK_THROWS_AS(basis_element(3, -1), std::out_of_range);
}

TEST_CASE("basis orthonormality") {
  const int n = 4;
  for (int a = 0; a < dim_of_level(n); ++a)
    for (int b = 0; b < dim_of_level(n); ++b)
      CHECK(inner_real(basis_element(n, a), basis_element(n, b)) == (a == b ? 1.0 : 0.0));
}

TEST_CASE("multiplication table facts") {
  // i j = k in A_2
  CHECK(dist(multiply(basis_element(2, 1), basis_element(2, 2)), basis_element(2, 3)) == 0.0);
  // i (it) = -t in A_3: (i,0)(0,i) = (0, i^2) = (0,-1)
  CHECK(dist(multiply(basis_element(3, 1), basis_element(3, 5)), -basis_element(3, 4)) == 0.0);
  // identity on both sides
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const CDElement x = random_element(4, rng);
    CHECK(dist(multiply(one_element(4), x), x) == 0.0);
    CHECK(dist(multiply(x, one_element(4)), x) == 0.0);
  }
}

TEST_CASE("x x* is the squared norm") {
  SplitMix64 rng(12);
  for (int level = 0; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const CDElement p = multiply(x, conjugate(x));
    CHECK(dist(p, norm_sq(x) * one_element(level)) < 1e-9 * (1.0 + norm_sq(x)));
  }
}

TEST_CASE("multiplication is bilinear") {
  SplitMix64 rng(13);
  const int level = 4;
  const CDElement x = random_element(level, rng);
  const CDElement y = random_element(level, rng);
  const CDElement z = random_element(level, rng);
  CHECK(dist(multiply(x, y + z), multiply(x, y) + multiply(x, z)) < 1e-10);
  CHECK(dist(multiply(x + y, z), multiply(x, z) + multiply(y, z)) < 1e-10);
  CHECK(dist(multiply(2.5 * x, y), 2.5 * multiply(x, y)) < 1e-10);
}

TEST_CASE("conjugation") {
  CHECK(dist(conjugate(one_element(2)), one_element(2)) == 0.0);
  CHECK(dist(conjugate(basis_element(2, 1)), -basis_element(2, 1)) == 0.0);

  SplitMix64 rng(14);
  for (int level = 1; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const CDElement y = random_element(level, rng);
    CHECK(dist(conjugate(x), conjugate_recursive(x)) == 0.0);
    CHECK(dist(conjugate(conjugate(x)), x) == 0.0);
    // (x y*)* = y x*
    const CDElement lhs = conjugate(multiply(x, conjugate(y)));
    const CDElement rhs = multiply(y, conjugate(x));
    CHECK(dist(lhs, rhs) < 1e-9 * norm(x) * norm(y));
  }
}

TEST_CASE("real and imaginary parts") {
  const CDElement x = one_element(3) + basis_element(3, 1);
  CHECK(dist(real_part(x), one_element(3)) == 0.0);
  CHECK(dist(imag_part(basis_element(3, 4)), basis_element(3, 4)) == 0.0);

  SplitMix64 rng(15);
  const CDElement y = random_element(5, rng);
  CHECK(dist(real_part(y) + imag_part(y), y) == 0.0);
  CHECK(norm(imag_part(multiply(y, conjugate(y)))) < 1e-9 * norm_sq(y));
  // real_part as (x + x*)/2
  CHECK(dist(real_part(y), 0.5 * (y + conjugate(y))) == 0.0);
}

TEST_CASE("real inner product") {
  CHECK(inner_real(basis_element(2, 1), basis_element(2, 1)) == 1.0);
  CHECK(inner_real(basis_element(2, 1), basis_element(2, 2)) == 0.0);
  const CDElement u = one_element(1) + basis_element(1, 1);
  const CDElement v = one_element(1) - basis_element(1, 1);
  CHECK(inner_real(u, v) == 0.0);

  // <x,y> = Re(x y*) as elements
  SplitMix64 rng(16);
  for (int level = 1; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const CDElement y = random_element(level, rng);
    const CDElement p = multiply(x, conjugate(y));
    CHECK(std::abs(p[0] - inner_real(x, y)) < 1e-9 * norm(x) * norm(y));
  }
  CHECK_THROWS_AS(inner_real(one_element(2), one_element(3)), std::invalid_argument);
}

TEST_CASE("Hermitian inner product") {
  for (int n = 1; n <= 5; ++n) {
    const ComplexScalar h = inner_hermitian(i_n_element(n), one_element(n));
    CHECK(h.re == 0.0);
    CHECK(h.im == 1.0);
  }
  const ComplexScalar jj = inner_hermitian(basis_element(2, 2), basis_element(2, 2));
  CHECK(jj.re == 1.0);
  CHECK(jj.im == 0.0);
  // j k* = -jk = -i has no component in span{1, j}
  const ComplexScalar jk = inner_hermitian(basis_element(2, 2), basis_element(2, 3));
  CHECK(jk.re == 0.0);
  CHECK(jk.im == 0.0);

  SplitMix64 rng(17);
  const CDElement x = random_element(4, rng);
  const CDElement y = random_element(4, rng);
  CHECK(inner_hermitian(x, y).re == doctest::Approx(inner_real(x, y)).epsilon(1e-12));
  const ComplexScalar xx = inner_hermitian(x, x);
  CHECK(xx.re == doctest::Approx(norm_sq(x)).epsilon(1e-12));
  CHECK(std::abs(xx.im) < 1e-9 * norm_sq(x));

  CHECK_THROWS_AS(inner_hermitian(one_element(0), one_element(0)), std::invalid_argument);
}

TEST_CASE("norms") {
  const CDElement x = one_element(2) + basis_element(2, 1) + basis_element(2, 2) + basis_element(2, 3);
  CHECK(norm(x) == 2.0);

  SplitMix64 rng(18);
  for (int level = 1; level <= 6; ++level) {
    const CDElement a = random_element(level, rng);
    const CDElement b = random_element(level, rng);
    CHECK(norm(a) == doctest::Approx(norm(conjugate(a))));
    // |xy| = |yx| = |x y*|
    const double n1 = norm(multiply(a, b));
    CHECK(n1 == doctest::Approx(norm(multiply(b, a))).epsilon(1e-10));
    CHECK(n1 == doctest::Approx(norm(multiply(a, conjugate(b)))).epsilon(1e-10));
    // |alpha a| = |alpha| |a| for a orthogonal to C_n
    const CDElement p = random_c_perp(level, rng);
    const ComplexScalar alpha = random_complex(rng);
    CHECK(norm(multiply(lift_complex(alpha, level), p)) ==
          doctest::Approx(norm(alpha) * norm(p)).epsilon(1e-10));
  }
}

TEST_CASE("cross product") {
  SplitMix64 rng(19);
  const CDElement x = random_element(4, rng);
  CHECK(norm(cross(x, x)) < 1e-9 * norm_sq(x));

  // cross(i, j) = Im(i j*) = -ij = -k in A_2
  CHECK(dist(cross(basis_element(2, 1), basis_element(2, 2)), -basis_element(2, 3)) == 0.0);

  // imaginary a, b: a x b orthogonal to both
  for (int level = 2; level <= 6; ++level) {
    const CDElement a = random_imaginary(level, rng);
    const CDElement b = random_imaginary(level, rng);
    const CDElement c = cross(a, b);
    CHECK(std::abs(inner_real(c, a)) < 1e-9 * norm(a) * norm(a) * norm(b));
    CHECK(std::abs(inner_real(c, b)) < 1e-9 * norm(b) * norm(a) * norm(b));
    CHECK(norm(real_part(c)) == 0.0);
  }

  // scalar factorization: (alpha a) x (beta a) = |a|^2 (alpha x beta)
  for (int level = 2; level <= 5; ++level) {
    const CDElement a = random_c_perp(level, rng);
    const ComplexScalar alpha = random_complex(rng);
    const ComplexScalar beta = random_complex(rng);
    const CDElement lhs =
        cross(multiply(lift_complex(alpha, level), a), multiply(lift_complex(beta, level), a));
    CDElement rhs = zero_element(level);
    rhs[rhs.dim() / 2] = norm_sq(a) * cross_im(alpha, beta);
    CHECK(dist(lhs, rhs) < 1e-9 * norm_sq(a) * (1.0 + norm(alpha) * norm(beta)));
  }
}

TEST_CASE("split and join") {
  for (int n = 1; n <= 6; ++n) {
    const auto [lo, hi] = split(i_n_element(n));
    CHECK(norm(lo) == 0.0);
    CHECK(dist(hi, one_element(n - 1)) == 0.0);
  }

  const CDElement joined = join(basis_element(3, 1), basis_element(3, 2));
  CHECK(joined.level == 4);
  for (int k = 0; k < 16; ++k) CHECK(joined[k] == ((k == 1 || k == 10) ? 1.0 : 0.0));

  SplitMix64 rng(20);
  const CDElement b = random_element(4, rng);
  const CDElement c = random_element(4, rng);
  const auto [b2, c2] = split(join(b, c));
  CHECK(dist(b2, b) == 0.0);
  CHECK(dist(c2, c) == 0.0);

  CHECK_THROWS_AS(split(one_element(0)), std::invalid_argument);
  CHECK_THROWS_AS(join(one_element(2), one_element(3)), std::invalid_argument);
  CHECK_THROWS_AS(multiply(one_element(2), one_element(3)), std::invalid_argument);
  CHECK_THROWS_AS(project_complex(one_element(0)), std::invalid_argument);
  CHECK_THROWS_AS(lift_complex({1.0, 2.0}, 0), std::invalid_argument);
}

TEST_CASE("complex projection") {
  const ComplexSplit s1 = project_complex(i_n_element(4));
  CHECK(s1.complex_part.re == 0.0);
  CHECK(s1.complex_part.im == 1.0);
  CHECK(norm(s1.perp_part) == 0.0);
  CHECK(s1.theta == doctest::Approx(3.14159265358979323846 / 2));

  const ComplexSplit s2 = project_complex(basis_element(3, 1));
  CHECK(norm(s2.complex_part) == 0.0);
  CHECK(dist(s2.perp_part, basis_element(3, 1)) == 0.0);
  CHECK(s2.theta == 0.0);

  const ComplexSplit s3 = project_complex(basis_element(3, 1) + basis_element(3, 4));
  CHECK(s3.theta == doctest::Approx(3.14159265358979323846 / 4));
  CHECK(dist(s3.unit_perp, basis_element(3, 1)) < 1e-12);
  CHECK(dist(s3.unit_complex, basis_element(3, 4)) < 1e-12);

  // reconstruction x = |x| (unit_perp cos(theta) + unit_complex sin(theta))
  SplitMix64 rng(21);
  for (int level = 1; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const ComplexSplit s = project_complex(x);
    const CDElement rebuilt =
        norm(x) * (std::cos(s.theta) * s.unit_perp + std::sin(s.theta) * s.unit_complex);
    CHECK(dist(rebuilt, x) < 1e-9 * norm(x));
    CHECK(dist(s.perp_part + lift_complex(s.complex_part, level), x) == 0.0);
    CHECK(std::abs(inner_real(s.perp_part, one_element(level))) == 0.0);
    CHECK(std::abs(inner_real(s.perp_part, i_n_element(level))) == 0.0);
  }
}

TEST_CASE("alternativity") {
  for (int k = 0; k < 16; ++k) CHECK(is_alternative(basis_element(4, k), 1e-9));

  SplitMix64 rng(22);
  for (int level = 0; level <= 3; ++level)
    CHECK(is_alternative(random_element(level, rng), 1e-9));

  const CDElement zd = (1.0 / std::sqrt(2.0)) * join(basis_element(3, 1), basis_element(3, 2));
  CHECK_FALSE(is_alternative(zd, 1e-9));
  // and generic A_4 elements are not alternative either
  CHECK_FALSE(is_alternative(random_element(4, rng), 1e-9));
}

TEST_CASE("complex vector space laws") {
  SplitMix64 rng(23);
  for (int level = 1; level <= 6; ++level) {
    const ComplexScalar alpha = random_complex(rng);
    const ComplexScalar beta = random_complex(rng);
    const CDElement al = lift_complex(alpha, level);
    const CDElement bl = lift_complex(beta, level);
    const CDElement x = random_element(level, rng);

    // alpha (beta x) = (alpha beta) x
    CHECK(dist(multiply(al, multiply(bl, x)), multiply(lift_complex(alpha * beta, level), x)) <
          1e-9 * norm(alpha) * norm(beta) * norm(x));

    if (level < 2) continue;  // C_n^perp is trivial at level 1
    // conjugate-linearity a(alpha x) = alpha* (a x) for a in C_n-perp
    const CDElement a = random_c_perp(level, rng);
    CHECK(dist(multiply(a, multiply(al, x)),
               multiply(lift_complex(conjugate(alpha), level), multiply(a, x))) <
          1e-9 * norm(a) * norm(alpha) * norm(x));
  }
}

TEST_CASE("scalar commutation identities") {
  SplitMix64 rng(24);
  for (int level = 2; level <= 6; ++level) {
    const ComplexScalar alpha = random_complex(rng);
    const CDElement al = lift_complex(alpha, level);
    const CDElement alc = lift_complex(conjugate(alpha), level);
    const CDElement a = random_c_perp(level, rng);
    const CDElement b = random_c_perp(level, rng);
    const double scale = norm(alpha) * norm(a) * (1.0 + norm(b));

    CHECK(dist(multiply(al, a), multiply(a, alc)) < 1e-9 * scale);
    CHECK(dist(multiply(a, multiply(al, b)), multiply(alc, multiply(a, b))) < 1e-9 * scale);
    CHECK(dist(multiply(multiply(al, a), b), multiply(multiply(a, b), al)) < 1e-9 * scale);
  }
}

TEST_CASE("bi-conjugate-linearity for C-orthogonal pairs") {
  SplitMix64 rng(25);
  // needs level >= 3: at level 2, C_n^perp is exactly span{a, i_n a}
  for (int level = 3; level <= 6; ++level) {
    CDElement a = random_c_perp(level, rng);
    a = (1.0 / norm(a)) * a;
    // make b C-orthogonal to a: remove the span{a, i_n a} component
    CDElement b = random_c_perp(level, rng);
    const CDElement ia = multiply(i_n_element(level), a);
    b = b - inner_real(b, a) * a - (inner_real(b, ia) / norm_sq(ia)) * ia;

    const ComplexScalar alpha = random_complex(rng);
    const ComplexScalar beta = random_complex(rng);
    const CDElement lhs = multiply(multiply(lift_complex(alpha, level), a),
                                   multiply(lift_complex(beta, level), b));
    const CDElement rhs = multiply(lift_complex(conjugate(alpha) * conjugate(beta), level),
                                   multiply(a, b));
    CHECK(dist(lhs, rhs) < 1e-9 * norm(alpha) * norm(beta) * norm(b));
  }
}

TEST_CASE("x and xy are orthogonal for imaginary y") {
  SplitMix64 rng(26);
  for (int level = 1; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const CDElement y = random_imaginary(level, rng);
    CHECK(std::abs(inner_real(x, multiply(x, y))) < 1e-9 * norm_sq(x) * norm(y));
  }
}

TEST_CASE("left and right adjoints are conjugates") {
  SplitMix64 rng(27);
  for (int level = 1; level <= 6; ++level) {
    const CDElement a = random_element(level, rng);
    const CDElement x = random_element(level, rng);
    const CDElement y = random_element(level, rng);
    const double scale = norm(a) * norm(x) * norm(y);
    CHECK(std::abs(inner_real(multiply(a, x), y) - inner_real(x, multiply(conjugate(a), y))) <
          1e-9 * scale);
    CHECK(std::abs(inner_real(multiply(x, a), y) - inner_real(x, multiply(y, conjugate(a)))) <
          1e-9 * scale);
  }
}
