#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "qrep/algebra_data.hpp"

namespace qrep {

/// Position of a basis vector in the level/class grid.
struct BasisLabel {
  int level = 1;      ///< 1-based, level 1 has the largest Q eigenvalue
  int alpha_exp = 0;  ///< exponent of the class eigenvalue, in units of t
  int copy = 0;       ///< index inside a multiplicity class
  Weight weight{0, 0};
};

/// Dense generator matrices at a fixed deformation parameter. Rank-one
/// algebras keep the second slot as zero matrices.
struct GeneratorSet {
  AlgebraKind algebra = AlgebraKind::A2;
  Weight hw{0, 0};
  double t = 0.0;
  std::vector<BasisLabel> basis;
  std::array<Eigen::MatrixXd, 2> xp;
  std::array<Eigen::MatrixXd, 2> xm;
  /// Exact integer eigenvalues of h_1, h_2 on the basis vectors.
  std::array<Eigen::VectorXi, 2> h;

  int dim() const { return static_cast<int>(h[0].size()); }
  int rank() const;
  Eigen::MatrixXd h_matrix(int i) const;
  /// R_i = exp(t w_i h_i).
  Eigen::MatrixXd r_matrix(int i) const;
  /// T+-_i = exp(t w_i h_i / 4) X+-_i exp(t w_i h_i / 4).
  Eigen::MatrixXd t_plus(int i) const;
  Eigen::MatrixXd t_minus(int i) const;
  /// Q+-_i = T+-_i +- R_i / (2 sinh w_i t).
  Eigen::MatrixXd q_plus(int i) const;
  Eigen::MatrixXd q_minus(int i) const;
  /// s^i = sinh(w_i t)(T+ + T-), r^i = sinh(w_i t)(T+ - T-) + R_i.
  Eigen::MatrixXd s_matrix(int i) const;
  Eigen::MatrixXd r_form(int i) const;
  /// exp(t (c_1 h_1 + c_2 h_2)) with the grading vector c.
  Eigen::MatrixXd grading_matrix() const;
};

/// Empty set with zero matrices of the given size.
GeneratorSet zero_generators(AlgebraKind algebra, const Weight& hw, double t, int dim);

}  // namespace qrep
