#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qrep/algebra_data.hpp"
#include "qrep/spectra.hpp"

namespace qrep {

/// Orthogonal frame chosen for each factorization.
enum class Gauge {
  /// Lower echelon with positive pivots; depends only on the Gram matrix.
  Echelon,
  /// Raw eigenvector frame with a sign convention.
  Spectral,
};

enum class Execution { Serial, Parallel };

/// Order of nodes inside one depth layer.
enum class NodeOrder { Forward, Reverse };

struct SolveOptions {
  double tol = 1e-9;
  Gauge gauge = Gauge::Echelon;
  Execution execution = Execution::Parallel;
  NodeOrder order = NodeOrder::Forward;
};

/// Known right-hand sides of a a^T = A, b b^T = B, b a^T = C.
struct GramStep {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;  ///< rows(B) x rows(A)
  int columns = 0;    ///< shared column count of a and b
};

struct GramSolution {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  int rank = 0;
};

/// Factor the stacked matrix [[A, C^T], [C, B]] as [a; b][a; b]^T.
/// Throws NegativeEigenvalue or RankError when no such factor exists.
GramSolution solve_gram_step(const GramStep& step, double tol, Gauge gauge = Gauge::Echelon);

/// Solved primitive blocks. values[e] is the block of s^{root+1} for edge e:
/// sigma_i(source) times the X+_i block, with
/// sigma_i(mu) = sinh(w_i t) exp(w_i t (h_i(mu) + 1) / 2).
struct BlockSystem {
  RootSystem rs;
  SpectraTable spectra;
  BlockGraph graph;
  double t = 0.0;
  std::vector<Eigen::MatrixXd> values;
  std::vector<std::string> gauge_log;

  double sigma(int root, const Weight& mu) const;
  /// The X+_{root} block of edge e.
  Eigen::MatrixXd raising_block(int e) const;
};

/// Solve every block, one depth layer of weights at a time. Nodes inside a
/// layer are independent and run in parallel when requested.
BlockSystem solve_blocks(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts = {});

BlockSystem solve_a2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts = {});
/// Also checks [s^i, r^i] = tanh(w_i t)((s^i)^2 - (r^i)^2 + 1) after assembly.
BlockSystem solve_b2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts = {});
/// Also checks the mixed s/r identity after assembly.
BlockSystem solve_g2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts = {});

/// Dispatch on rs.kind for the rank-two algebras with a chain construction.
BlockSystem solve_for(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts = {});

/// Sorted singular values of every block, in edge order.
std::vector<Eigen::VectorXd> block_singular_values(const BlockSystem& bs);

}  // namespace qrep
