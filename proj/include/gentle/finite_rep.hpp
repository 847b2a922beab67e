#ifndef GENTLE_FINITE_REP_HPP
#define GENTLE_FINITE_REP_HPP

#include <map>
#include <vector>

#include "gentle/linalg.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

/// Representation of a finite quiver with length-2 monomial relations.
/// act[arrow id] maps M(src) -> M(dst); rows = dim(dst), cols = dim(src).
struct FiniteRep {
  std::map<int, int> dim;   // vertex -> dimension
  std::map<int, Mat> act;   // arrow id -> matrix

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

/// Indecomposable projective P_v over kQ/I (basis = nonzero paths from v).
FiniteRep projective_rep(const GradedAlgebraPresentation& p, int v);
FiniteRep simple_rep(const GradedAlgebraPresentation& p, int v);

/// Kernel of the projective cover of m, i.e. the first syzygy of a minimal
/// projective presentation.
FiniteRep syzygy(const GradedAlgebraPresentation& p, const FiniteRep& m);

/// True iff kQ/I has arbitrarily long nonzero paths.
bool algebra_is_infinite_dimensional(const GradedAlgebraPresentation& p);

struct GldimResult {
  bool finite = false;
  int value = 0;   // the global dimension when finite, else the bound
};

/// Projective-resolution oracle: resolves every simple by explicit linear
/// algebra up to length `bound`; errc::not_finite_dimensional for
/// infinite-dimensional algebras.
GldimResult gldim_oracle(const GradedAlgebraPresentation& p, int bound);

} // namespace gentle

#endif
