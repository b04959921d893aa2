#pragma once

#include "qrep/algebra_data.hpp"
#include "qrep/generator_set.hpp"

namespace qrep {

struct OracleOptions {
  int cap = 200;
  /// Eigenvalue cut for discarding null vectors, relative to the largest
  /// eigenvalue of the Gram matrix of X-_i applied to the orthonormal vectors
  /// one step above.
  double rank_tol = 1e-8;
  /// Eigenvalues between this and rank_tol are reported as ambiguous. A weight
  /// space whose largest eigenvalue sits between roundoff and this fraction of
  /// the cancelled terms is ambiguous as a whole.
  double ambiguity_floor = 1e-11;
};

/// Second, independent construction: lower the highest vector with words in
/// X-_i, evaluate the contravariant form from the commutation relations,
/// drop null directions and orthonormalize.
/// Throws CapExceeded above the dimension cap and NumericalRankAmbiguity when
/// an eigenvalue sits too close to the rank cut.
GeneratorSet build_oracle(const RootSystem& rs, const Weight& hw, double t, const OracleOptions& opts = {});

}  // namespace qrep
