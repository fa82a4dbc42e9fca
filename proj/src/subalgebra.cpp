#include "cdeig/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdeig {

namespace {

// Residual of v against the current basis, two MGS passes for stability.
CDElement residual_against(const std::vector<CDElement>& basis, const CDElement& v) {
  CDElement r = v;
  for (int pass = 0; pass < 2; ++pass)
    for (const CDElement& b : basis) r = r - inner_real(r, b) * b;
  return r;
}

// Appends v's residual direction when it is independent; returns whether the
// basis grew.
bool adjoin(std::vector<CDElement>& basis, const CDElement& v, double tol) {
  const double vn = norm(v);
  if (vn == 0.0) return false;
  CDElement r = residual_against(basis, v);
  const double rn = norm(r);
  if (rn <= tol * std::max(1.0, vn)) return false;
  basis.push_back((1.0 / rn) * r);
  return true;
}

}  // namespace

Subalgebra generated_subalgebra(const std::vector<CDElement>& gens, double tol) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  const int level = gens.front().level;
  for (const CDElement& g : gens)
    if (g.level != level) throw std::invalid_argument("level mismatch among generators");

  Subalgebra S;
  S.level = level;
  S.basis.push_back(one_element(level));
  for (const CDElement& g : gens) adjoin(S.basis, g, tol);

  const int max_sweeps = dim_of_level(level) + 1;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const size_t snapshot = S.basis.size();
    bool grew = false;
    for (size_t i = 0; i < snapshot; ++i)
      for (size_t j = 0; j < snapshot; ++j)
        grew |= adjoin(S.basis, multiply(S.basis[i], S.basis[j]), tol);
    for (size_t i = 0; i < snapshot; ++i) grew |= adjoin(S.basis, conjugate(S.basis[i]), tol);
    if (!grew) return S;
  }
  throw std::runtime_error("subalgebra closure did not stabilize");
}

CDElement project_onto(const Subalgebra& S, const CDElement& x) {
  if (S.level != x.level) throw std::invalid_argument("level mismatch");
  CDElement p = zero_element(S.level);
  for (const CDElement& b : S.basis) p = p + inner_real(x, b) * b;
  return p;
}

bool contains(const Subalgebra& S, const CDElement& x, double tol) {
  const CDElement r = x - project_onto(S, x);
  return norm(r) <= tol * norm(x);
}

std::vector<CDElement> orthonormal_complement(const Subalgebra& S) {
  std::vector<CDElement> full = S.basis;
  std::vector<CDElement> comp;
  for (int k = 0; k < dim_of_level(S.level); ++k) {
    const CDElement r = residual_against(full, basis_element(S.level, k));
    const double rn = norm(r);
    if (rn > 1e-9) {
      full.push_back((1.0 / rn) * r);
      comp.push_back(full.back());
    }
  }
  return comp;
}

}  // namespace cdeig
