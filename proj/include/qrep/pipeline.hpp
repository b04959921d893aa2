#pragma once

#include "qrep/chain_solver.hpp"
#include "qrep/generator_set.hpp"

namespace qrep {

/// Character, spectra, chain solve and assembly in one call. A1 and D2 use
/// the closed rank-one formulas.
GeneratorSet build_representation(AlgebraKind algebra, const Weight& hw, double t, const SolveOptions& opts = {});

}  // namespace qrep
