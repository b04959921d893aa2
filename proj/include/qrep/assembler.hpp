#pragma once

#include <array>

#include <Eigen/Dense>

#include "qrep/chain_solver.hpp"
#include "qrep/generator_set.hpp"
#include "qrep/spectra.hpp"

namespace qrep {

/// s^i = sinh(w_i t)(T+_i + T-_i) and r^i = sinh(w_i t)(T+_i - T-_i) + R_i.
struct SrForms {
  std::array<Eigen::MatrixXd, 2> s;
  std::array<Eigen::MatrixXd, 2> r;
};

/// Place each solved block symmetrically in s and antisymmetrically in r,
/// with R_i on the diagonal of r.
SrForms assemble_sr(const BlockSystem& bs);

/// Recover X+-_i and h_i from the s/r forms.
/// Throws RoundingError when log(R_i)/(w_i t) is not an integer to 1e-9.
GeneratorSet to_generators(const SrForms& sr, const SpectraTable& st, double t);

/// Relative residuals of [s^i, r^i] = tanh(w_i t)((s^i)^2 - (r^i)^2 + 1) for
/// i = 1, 2, and of [s^1, s^2] - [r^1, r^2] = -tanh(K~12 t / 2)({r^1, s^2} - {s^1, r^2}).
std::array<double, 3> sr_residuals(const SrForms& sr, const RootSystem& rs, double t);

}  // namespace qrep
