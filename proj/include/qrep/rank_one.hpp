#pragma once

#include <Eigen/Dense>

#include "qrep/generator_set.hpp"

namespace qrep {

/// Irreducible representation of quantum A1 with spin l = twice_l / 2, in the
/// basis of descending h eigenvalue.
struct RankOneRep {
  int twice_l = 0;
  double t = 0.0;
  Eigen::MatrixXd xplus;
  Eigen::MatrixXd xminus;
  Eigen::VectorXi h;

  int dim() const { return twice_l + 1; }
};

RankOneRep build_rank_one(int twice_l, double t);

struct RankOneQ {
  Eigen::MatrixXd qplus;
  Eigen::MatrixXd qminus;
};

/// Q+- = T+- +- R / (2 sinh t) with T+- = e^{th/4} X+- e^{th/4}, R = e^{th}.
RankOneQ build_q_generators(const RankOneRep& rep);

/// A1 generator set, root-2 slots left at zero.
GeneratorSet build_a1(int twice_l, double t);

/// D2 = A1 x A1 as a Kronecker product, permuted into the level/class order.
GeneratorSet build_d2(const Weight& hw, double t);

}  // namespace qrep
