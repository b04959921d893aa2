#include "qrep/rank_one.hpp"

#include <cmath>

#include "qrep/characters.hpp"
#include "qrep/errors.hpp"
#include "qrep/spectra.hpp"

namespace qrep {

namespace {

void require_positive(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("deformation parameter must be positive");
}

}  // namespace

RankOneRep build_rank_one(int twice_l, double t) {
  require_positive(t);
  if (twice_l < 0) throw InvalidParameter("spin must be non-negative");
  RankOneRep rep;
  rep.twice_l = twice_l;
  rep.t = t;
  const int n = twice_l + 1;
  rep.xplus = Eigen::MatrixXd::Zero(n, n);
  rep.h.resize(n);
  for (int k = 0; k < n; ++k) rep.h[k] = twice_l - 2 * k;
  // Index k carries m = l - k; X+ sends it to k - 1 with
  // sqrt(sinh((l - m) t) sinh((l + m + 1) t)) / sinh t.
  for (int k = 1; k < n; ++k)
    rep.xplus(k - 1, k) = std::sqrt(std::sinh(k * t) * std::sinh((twice_l - k + 1) * t)) / std::sinh(t);
  rep.xminus = rep.xplus.transpose();
  return rep;
}

RankOneQ build_q_generators(const RankOneRep& rep) {
  const double t = rep.t;
  const Eigen::VectorXd quarter = (rep.h.cast<double>() * (t / 4.0)).array().exp().matrix();
  const Eigen::VectorXd r = (rep.h.cast<double>() * t).array().exp().matrix();
  const double denom = 2.0 * std::sinh(t);
  RankOneQ q;
  q.qplus = quarter.asDiagonal() * rep.xplus * quarter.asDiagonal();
  q.qminus = quarter.asDiagonal() * rep.xminus * quarter.asDiagonal();
  q.qplus.diagonal() += r / denom;
  q.qminus.diagonal() -= r / denom;
  return q;
}

GeneratorSet build_a1(int twice_l, double t) {
  const auto rep = build_rank_one(twice_l, t);
  const auto rs = root_system(AlgebraKind::A1);
  const auto st = build_spectra(rs, character(rs, {twice_l, 0}));
  GeneratorSet g = zero_generators(AlgebraKind::A1, {twice_l, 0}, t, rep.dim());
  g.basis = st.basis;
  g.xp[0] = rep.xplus;
  g.xm[0] = rep.xminus;
  g.h[0] = rep.h;
  return g;
}

GeneratorSet build_d2(const Weight& hw, double t) {
  const auto rs = root_system(AlgebraKind::D2);
  const auto st = build_spectra(rs, character(rs, hw));
  const auto first = build_rank_one(hw[0], t);
  const auto second = build_rank_one(hw[1], t);
  const int dim = st.total_dim;
  GeneratorSet g = zero_generators(AlgebraKind::D2, hw, t, dim);
  g.basis = st.basis;

  // Basis vector with weight (h1, h2) is |k1> (x) |k2> with k_i = (l_i - h_i) / 2.
  std::vector<int> k1(dim), k2(dim);
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < dim; ++i) {
    const auto& w = st.basis[i].weight;
    k1[i] = (hw[0] - w[0]) / 2;
    k2[i] = (hw[1] - w[1]) / 2;
    index[{k1[i], k2[i]}] = i;
    g.h[0][i] = w[0];
    g.h[1][i] = w[1];
  }
  for (int i = 0; i < dim; ++i) {
    if (k1[i] > 0) g.xp[0](index.at({k1[i] - 1, k2[i]}), i) = first.xplus(k1[i] - 1, k1[i]);
    if (k2[i] > 0) g.xp[1](index.at({k1[i], k2[i] - 1}), i) = second.xplus(k2[i] - 1, k2[i]);
  }
  g.xm[0] = g.xp[0].transpose();
  g.xm[1] = g.xp[1].transpose();
  return g;
}

}  // namespace qrep
