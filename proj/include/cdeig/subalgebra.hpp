#pragma once

#include <vector>

#include "cdeig/element.hpp"

namespace cdeig {

/// Orthonormal basis of a subspace closed under multiplication and
/// conjugation; always contains 1 as its first basis vector.
struct Subalgebra {
  int level = 0;
  std::vector<CDElement> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Smallest subalgebra containing the generators: seeds span{1, gens} and
/// repeatedly adjoins products and conjugates (in basis-pair order) until a
/// fixpoint, re-orthonormalizing as it goes.
Subalgebra generated_subalgebra(const std::vector<CDElement>& gens, double tol = 1e-9);

CDElement project_onto(const Subalgebra& S, const CDElement& x);

/// True when x lies in the span within tol * |x|.
bool contains(const Subalgebra& S, const CDElement& x, double tol = 1e-8);

/// Orthonormal basis of the orthogonal complement of S inside A_n.
std::vector<CDElement> orthonormal_complement(const Subalgebra& S);

}  // namespace cdeig
