// linalg.hpp — dense complex least squares used by the eigen-field fits.

#pragma once

#include <vector>

#include "lindyn/seqspace.hpp"

namespace lindyn {

struct LsqResult {
  std::vector<cplx> coefficients;
  double residual = 0.0;      // l2 norm of target - fit
  bool rank_deficient = false;  // singular values were cut at tolerance
};

// Least-squares fit of target by the span of the given columns, all vectors
// read as coordinates 0..dim-1. Rank-deficient systems are solved through
// an SVD pseudo-inverse with a relative tolerance cut and flagged, never
// rejected.
LsqResult lsq_fit(const std::vector<TruncatedVector>& columns,
                  const TruncatedVector& target, std::size_t dim);

}  // namespace lindyn
