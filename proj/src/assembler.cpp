#include "qrep/assembler.hpp"

#include <algorithm>
#include <cmath>

#include "qrep/errors.hpp"

namespace qrep {

SrForms assemble_sr(const BlockSystem& bs) {
  const int n = bs.spectra.total_dim;
  SrForms sr;
  for (int i = 0; i < 2; ++i) {
    sr.s[i] = Eigen::MatrixXd::Zero(n, n);
    sr.r[i] = Eigen::MatrixXd::Zero(n, n);
  }
  if (static_cast<int>(bs.values.size()) != static_cast<int>(bs.graph.edges.size()))
    throw ShapeError("block values do not match the block graph");
  for (std::size_t e = 0; e < bs.graph.edges.size(); ++e) {
    const auto& edge = bs.graph.edges[e];
    const auto& from = bs.graph.nodes[edge.source];
    const auto& to = bs.graph.nodes[edge.target];
    const auto& a = bs.values[e];
    if (a.rows() != to.multiplicity || a.cols() != from.multiplicity)
      throw ShapeError("block shape disagrees with the class multiplicities");
    const int i = edge.root;
    sr.s[i].block(to.offset, from.offset, a.rows(), a.cols()) = a;
    sr.s[i].block(from.offset, to.offset, a.cols(), a.rows()) = a.transpose();
    sr.r[i].block(to.offset, from.offset, a.rows(), a.cols()) = a;
    sr.r[i].block(from.offset, to.offset, a.cols(), a.rows()) = -a.transpose();
  }
  for (int k = 0; k < n; ++k) {
    const auto& w = bs.spectra.basis[k].weight;
    for (int i = 0; i < 2; ++i) sr.r[i](k, k) = std::exp(bs.t * bs.rs.symmetrizers[i] * w[i]);
  }
  return sr;
}

GeneratorSet to_generators(const SrForms& sr, const SpectraTable& st, double t) {
  const auto rs = root_system(st.algebra);
  const int n = st.total_dim;
  for (int i = 0; i < 2; ++i)
    if (sr.s[i].rows() != n || sr.s[i].cols() != n || sr.r[i].rows() != n || sr.r[i].cols() != n)
      throw ShapeError("s/r matrices do not match the spectra dimension");

  GeneratorSet g = zero_generators(st.algebra, st.hw, t, n);
  g.basis = st.basis;
  for (int i = 0; i < rs.rank; ++i) {
    const double wt = rs.symmetrizers[i] * t;
    const Eigen::VectorXd r_diag = sr.r[i].diagonal();
    for (int k = 0; k < n; ++k) {
      const double raw = std::log(r_diag[k]) / wt;
      const double rounded = std::round(raw);
      if (!std::isfinite(raw) || std::abs(raw - rounded) > 1e-9)
        throw RoundingError("h eigenvalue is not an integer: " + std::to_string(raw));
      g.h[i][k] = static_cast<int>(rounded);
    }
    const Eigen::MatrixXd r_mat = r_diag.asDiagonal();
    const double denom = 2.0 * std::sinh(wt);
    const Eigen::MatrixXd t_plus = (sr.s[i] + sr.r[i] - r_mat) / denom;
    const Eigen::MatrixXd t_minus = (sr.s[i] - sr.r[i] + r_mat) / denom;
    const Eigen::VectorXd unquarter = (g.h[i].cast<double>() * (-wt / 4.0)).array().exp().matrix();
    g.xp[i] = unquarter.asDiagonal() * t_plus * unquarter.asDiagonal();
    g.xm[i] = unquarter.asDiagonal() * t_minus * unquarter.asDiagonal();
  }
  return g;
}

namespace {

double relative(const Eigen::MatrixXd& residual, std::initializer_list<double> term_norms) {
  const double scale = std::max(1e-300, std::max(term_norms));
  return residual.norm() / scale;
}

}  // namespace

std::array<double, 3> sr_residuals(const SrForms& sr, const RootSystem& rs, double t) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  const auto n = sr.s[0].rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < rs.rank; ++i) {
    const auto& s = sr.s[i];
    const auto& r = sr.r[i];
    const Eigen::MatrixXd lhs = s * r - r * s;
    const Eigen::MatrixXd s2 = s * s;
    const Eigen::MatrixXd r2 = r * r;
    const double k = std::tanh(rs.symmetrizers[i] * t);
    out[i] = relative(lhs - k * (s2 - r2 + id), {lhs.norm(), k * s2.norm(), k * r2.norm(), k * id.norm()});
  }
  if (rs.rank == 2) {
    const auto &s1 = sr.s[0], &s2 = sr.s[1], &r1 = sr.r[0], &r2 = sr.r[1];
    const Eigen::MatrixXd ss = s1 * s2 - s2 * s1;
    const Eigen::MatrixXd rr = r1 * r2 - r2 * r1;
    const Eigen::MatrixXd rs_ = r1 * s2 + s2 * r1;
    const Eigen::MatrixXd sr_ = s1 * r2 + r2 * s1;
    const double k = -std::tanh(rs.sym_cartan[0][1] * t / 2.0);
    out[2] = relative(ss - rr - k * (rs_ - sr_), {ss.norm(), rr.norm(), std::abs(k) * rs_.norm(), std::abs(k) * sr_.norm()});
  }
  return out;
}

}  // namespace qrep
