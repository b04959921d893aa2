#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial division left a remainder, or another "cannot happen" state.
class InternalError : public Error { using Error::Error; };
class InvalidParameter : public Error { using Error::Error; };
/// Block graph violates the one-block-per-direction rule.
class StructureError : public Error { using Error::Error; };
/// Stacked Gram matrix has the wrong numerical rank.
class RankError : public Error { using Error::Error; };
class NegativeEigenvalue : public Error { using Error::Error; };
/// A relation that must hold after assembly failed beyond tolerance.
class ConsistencyError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class RoundingError : public Error { using Error::Error; };
class CapExceeded : public Error { using Error::Error; };
class NumericalRankAmbiguity : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };

}  // namespace qrep
