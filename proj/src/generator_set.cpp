#include "qrep/generator_set.hpp"

#include <cmath>

namespace qrep {

namespace {

Eigen::VectorXd exp_diag(const Eigen::VectorXi& h, double scale) {
  return (h.cast<double>() * scale).array().exp().matrix();
}

}  // namespace

int GeneratorSet::rank() const { return root_system(algebra).rank; }

Eigen::MatrixXd GeneratorSet::h_matrix(int i) const { return h[i].cast<double>().asDiagonal(); }

Eigen::MatrixXd GeneratorSet::r_matrix(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  return exp_diag(h[i], t * w).asDiagonal();
}

Eigen::MatrixXd GeneratorSet::t_plus(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  const Eigen::VectorXd d = exp_diag(h[i], t * w / 4.0);
  return d.asDiagonal() * xp[i] * d.asDiagonal();
}

Eigen::MatrixXd GeneratorSet::t_minus(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  const Eigen::VectorXd d = exp_diag(h[i], t * w / 4.0);
  return d.asDiagonal() * xm[i] * d.asDiagonal();
}

Eigen::MatrixXd GeneratorSet::q_plus(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  return t_plus(i) + r_matrix(i) / (2.0 * std::sinh(w * t));
}

Eigen::MatrixXd GeneratorSet::q_minus(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  return t_minus(i) - r_matrix(i) / (2.0 * std::sinh(w * t));
}

Eigen::MatrixXd GeneratorSet::s_matrix(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  return std::sinh(w * t) * (t_plus(i) + t_minus(i));
}

Eigen::MatrixXd GeneratorSet::r_form(int i) const {
  const int w = root_system(algebra).symmetrizers[i];
  return std::sinh(w * t) * (t_plus(i) - t_minus(i)) + r_matrix(i);
}

Eigen::MatrixXd GeneratorSet::grading_matrix() const {
  const auto c = root_system(algebra).grading;
  const Eigen::VectorXi e = c[0] * h[0] + c[1] * h[1];
  return exp_diag(e, t).asDiagonal();
}

GeneratorSet zero_generators(AlgebraKind algebra, const Weight& hw, double t, int dim) {
  GeneratorSet g;
  g.algebra = algebra;
  g.hw = hw;
  g.t = t;
  for (int i = 0; i < 2; ++i) {
    g.xp[i] = Eigen::MatrixXd::Zero(dim, dim);
    g.xm[i] = Eigen::MatrixXd::Zero(dim, dim);
    g.h[i] = Eigen::VectorXi::Zero(dim);
  }
  return g;
}

}  // namespace qrep
