#include "qrep/chain_solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#ifdef QREP_HAVE_OPENMP
#include <omp.h>
#endif

#include "qrep/assembler.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

// Right-multiply by the orthogonal matrix that turns m into lower echelon form
// with positive pivots. Gram-Schmidt on the rows, in order.
Eigen::MatrixXd echelon_frame(const Eigen::MatrixXd& m, double tol) {
  const auto n = m.cols();
  Eigen::MatrixXd q(n, n);
  int found = 0;
  const double max_sq = m.rowwise().squaredNorm().maxCoeff();
  for (Eigen::Index row = 0; row < m.rows() && found < n; ++row) {
    Eigen::VectorXd v = m.row(row).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < found; ++k) v -= q.col(k).dot(v) * q.col(k);
    if (v.squaredNorm() <= tol * max_sq) continue;
    q.col(found++) = v.normalized();
  }
  // Columns of m beyond its rank vanish; complete the frame with any basis.
  for (Eigen::Index e = 0; e < n && found < n; ++e) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, e);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < found; ++k) v -= q.col(k).dot(v) * q.col(k);
    if (v.norm() > 1e-6) q.col(found++) = v.normalized();
  }
  return q;
}

}  // namespace

GramSolution solve_gram_step(const GramStep& step, double tol, Gauge gauge) {
  const auto m1 = step.A.rows();
  const auto m2 = step.B.rows();
  if (step.A.cols() != m1 || step.B.cols() != m2 || (m1 > 0 && m2 > 0 && (step.C.rows() != m2 || step.C.cols() != m1)))
    throw ShapeError("Gram step blocks have inconsistent shapes");
  const int n = step.columns;
  GramSolution out;
  out.a = Eigen::MatrixXd::Zero(m1, n);
  out.b = Eigen::MatrixXd::Zero(m2, n);
  if (m1 + m2 == 0) return out;

  Eigen::MatrixXd g(m1 + m2, m1 + m2);
  g.topLeftCorner(m1, m1) = step.A;
  g.bottomRightCorner(m2, m2) = step.B;
  if (m1 > 0 && m2 > 0) {
    g.bottomLeftCorner(m2, m1) = step.C;
    g.topRightCorner(m1, m2) = step.C.transpose();
  }
  g = 0.5 * (g + g.transpose()).eval();
  if (g.diagonal().minCoeff() < -tol * g.diagonal().cwiseAbs().maxCoeff())
    throw NegativeEigenvalue(fmt::format("Gram matrix has diagonal entry {:.6g}", g.diagonal().minCoeff()));

  // One scale per root: blocks of the two roots can differ in size by many orders.
  const auto block_scale = [](const Eigen::MatrixXd& m) {
    const double top = m.size() > 0 ? m.diagonal().maxCoeff() : 0.0;
    return top > 0.0 ? std::sqrt(top) : 1.0;
  };
  Eigen::VectorXd d(m1 + m2);
  d.head(m1).setConstant(block_scale(step.A));
  d.tail(m2).setConstant(block_scale(step.B));
  g = (d.cwiseInverse().asDiagonal() * g * d.cwiseInverse().asDiagonal()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
  const double scale = std::max(std::abs(lambda.maxCoeff()), std::abs(lambda.minCoeff()));
  const double threshold = tol * scale;
  if (lambda.minCoeff() < -threshold)
    throw NegativeEigenvalue(fmt::format("Gram matrix has eigenvalue {:.6g} (scale {:.6g})", lambda.minCoeff(), scale));
  int rank = 0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    if (lambda[k] > threshold) ++rank;
  if (rank > n) throw RankError(fmt::format("Gram matrix has rank {} but only {} columns are available", rank, n));
  out.rank = rank;
  if (rank == 0) return out;

  const auto total = lambda.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(m1 + m2, n);
  for (int k = 0; k < rank; ++k) {
    const Eigen::Index src = total - 1 - k;
    m.col(k) = eig.eigenvectors().col(src) * std::sqrt(lambda[src]);
  }
  m = (d.asDiagonal() * m).eval();
  if (gauge == Gauge::Echelon) {
    m = (m * echelon_frame(m, tol)).eval();
  } else {
    for (int k = 0; k < rank; ++k) {
      Eigen::Index at = 0;
      m.col(k).cwiseAbs().maxCoeff(&at);
      if (m(at, k) < 0) m.col(k) *= -1.0;
    }
  }
  out.a = m.topRows(m1);
  out.b = m.bottomRows(m2);
  return out;
}

double BlockSystem::sigma(int root, const Weight& mu) const {
  const double wt = rs.symmetrizers[root] * t;
  return std::sinh(wt) * std::exp(wt * (mu[root] + 1) / 2.0);
}

Eigen::MatrixXd BlockSystem::raising_block(int e) const {
  const auto& edge = graph.edges[e];
  return values[e] / sigma(edge.root, graph.nodes[edge.source].weight);
}

namespace {

// [x]_w = sinh(w t x) / sinh(w t)
double q_number(int x, int w, double t) { return std::sinh(w * t * x) / std::sinh(w * t); }

std::string node_name(const BlockNode& node) {
  return fmt::format("level {}, class {} (weight ({},{}))", node.level, node.cls, node.weight[0], node.weight[1]);
}

// Gram data of the blocks leaving `node`: rows of root 1 first, then root 2.
GramStep gram_step_for(const BlockSystem& bs, int node) {
  const auto& g = bs.graph;
  const auto& nu = g.nodes[node];
  GramStep step;
  step.columns = nu.multiplicity;
  std::array<int, 2> target{-1, -1};
  std::array<int, 2> rows{0, 0};
  for (int i = 0; i < bs.rs.rank; ++i) {
    const int e = g.raise[i][node];
    if (e == -1) continue;
    target[i] = g.edges[e].target;
    rows[i] = g.edges[e].rows;
  }
  auto diagonal_block = [&](int i) -> Eigen::MatrixXd {
    if (target[i] == -1) return Eigen::MatrixXd(0, 0);
    const auto& up = g.nodes[target[i]];
    const int w = bs.rs.symmetrizers[i];
    Eigen::MatrixXd block = q_number(up.weight[i], w, bs.t) * Eigen::MatrixXd::Identity(rows[i], rows[i]);
    const int above = g.raise[i][target[i]];
    if (above != -1) {
      const double sig = bs.sigma(i, up.weight);
      block += bs.values[above].transpose() * bs.values[above] / (sig * sig);
    }
    const double s = bs.sigma(i, nu.weight);
    return s * s * block;
  };
  step.A = diagonal_block(0);
  step.B = diagonal_block(1);
  step.C = Eigen::MatrixXd::Zero(rows[1], rows[0]);
  if (target[0] != -1 && target[1] != -1) {
    // X+_2 X-_1 = X-_1 X+_2 from nu + alpha_1 to nu + alpha_2 through nu + alpha_1 + alpha_2.
    const int up2_from_1 = g.raise[1][target[0]];
    const int up1_from_2 = g.raise[0][target[1]];
    if (up2_from_1 != -1 && up1_from_2 != -1) {
      const double factor = bs.sigma(0, nu.weight) * bs.sigma(1, nu.weight) /
                            (bs.sigma(0, g.nodes[target[1]].weight) * bs.sigma(1, g.nodes[target[0]].weight));
      step.C = factor * bs.values[up1_from_2].transpose() * bs.values[up2_from_1];
    }
  }
  return step;
}

void solve_node(BlockSystem& bs, int node, const SolveOptions& opts) {
  const auto& nu = bs.graph.nodes[node];
  const GramStep step = gram_step_for(bs, node);
  GramSolution sol;
  try {
    sol = solve_gram_step(step, opts.tol, opts.gauge);
  } catch (const NegativeEigenvalue& e) {
    throw NegativeEigenvalue(fmt::format("{}: {}", node_name(nu), e.what()));
  } catch (const RankError& e) {
    throw RankError(fmt::format("{}: {}", node_name(nu), e.what()));
  }
  if (sol.rank != nu.multiplicity)
    throw RankError(fmt::format("{}: Gram rank {} differs from multiplicity {}", node_name(nu), sol.rank, nu.multiplicity));
  const int e1 = bs.graph.raise[0][node];
  const int e2 = bs.graph.raise[1][node];
  if (e1 != -1) bs.values[e1] = sol.a;
  if (e2 != -1) bs.values[e2] = sol.b;
}

// X+_i X-_i must vanish on weights with no weight one step below along alpha_i.
void check_closure(const BlockSystem& bs, double tol) {
  const auto& g = bs.graph;
  for (int node = 0; node < static_cast<int>(g.nodes.size()); ++node) {
    const auto& nu = g.nodes[node];
    for (int i = 0; i < bs.rs.rank; ++i) {
      if (g.lower[i][node] != -1) continue;
      const double qn = q_number(nu.weight[i], bs.rs.symmetrizers[i], bs.t);
      Eigen::MatrixXd res = qn * Eigen::MatrixXd::Identity(nu.multiplicity, nu.multiplicity);
      double scale = std::max(1.0, std::abs(qn));
      const int e = g.raise[i][node];
      if (e != -1) {
        const double sig = bs.sigma(i, nu.weight);
        const Eigen::MatrixXd up = bs.values[e].transpose() * bs.values[e] / (sig * sig);
        res += up;
        scale = std::max(scale, up.norm());
      }
      if (res.norm() > tol * scale * std::sqrt(static_cast<double>(nu.multiplicity)) * 10.0)
        throw ConsistencyError(fmt::format("{}: chain does not close for root {} (residual {:.3g})", node_name(nu),
                                           i + 1, res.norm() / scale));
    }
  }
}

}  // namespace

BlockSystem solve_blocks(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("deformation parameter must be positive");
  if (!(opts.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  BlockSystem bs;
  bs.rs = rs;
  bs.spectra = st;
  bs.graph = build_block_graph(rs, st);
  bs.t = t;
  bs.values.resize(bs.graph.edges.size());
  for (std::size_t e = 0; e < bs.graph.edges.size(); ++e)
    bs.values[e] = Eigen::MatrixXd::Zero(bs.graph.edges[e].rows, bs.graph.edges[e].cols);

  auto layers = bs.graph.depth_layers();
  for (std::size_t d = 1; d < layers.size(); ++d) {
    auto layer = layers[d];
    if (opts.order == NodeOrder::Reverse) std::reverse(layer.begin(), layer.end());
    const int count = static_cast<int>(layer.size());
    std::vector<std::exception_ptr> failures(count);
    const bool parallel = opts.execution == Execution::Parallel && count > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = 0; k < count; ++k) {
      try {
        solve_node(bs, layer[k], opts);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);
    spdlog::debug("depth {}: solved {} weight spaces", d, count);
  }
  check_closure(bs, opts.tol);
  for (const auto& node : bs.graph.nodes)
    if (node.depth() > 0)
      bs.gauge_log.push_back(fmt::format("{}: {} gauge, multiplicity {}", node_name(node),
                                         opts.gauge == Gauge::Echelon ? "echelon" : "spectral", node.multiplicity));
  return bs;
}

namespace {

void require_kind(const RootSystem& rs, AlgebraKind kind) {
  if (rs.kind != kind) throw InvalidParameter(fmt::format("expected {}, got {}", to_string(kind), to_string(rs.kind)));
}

void check_sr_identity(const BlockSystem& bs, std::initializer_list<int> rows, double tol) {
  const auto res = sr_residuals(assemble_sr(bs), bs.rs, bs.t);
  for (int row : rows)
    if (res[row] > tol * 100.0)
      throw ConsistencyError(fmt::format("s/r identity {} fails after assembly (relative residual {:.3g})", row + 1, res[row]));
}

}  // namespace

BlockSystem solve_a2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts) {
  require_kind(rs, AlgebraKind::A2);
  return solve_blocks(rs, st, t, opts);
}

BlockSystem solve_b2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts) {
  require_kind(rs, AlgebraKind::B2);
  auto bs = solve_blocks(rs, st, t, opts);
  check_sr_identity(bs, {0, 1}, opts.tol);
  return bs;
}

BlockSystem solve_g2(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts) {
  require_kind(rs, AlgebraKind::G2);
  auto bs = solve_blocks(rs, st, t, opts);
  check_sr_identity(bs, {2}, opts.tol);
  return bs;
}

BlockSystem solve_for(const RootSystem& rs, const SpectraTable& st, double t, const SolveOptions& opts) {
  switch (rs.kind) {
    case AlgebraKind::A2: return solve_a2(rs, st, t, opts);
    case AlgebraKind::B2: return solve_b2(rs, st, t, opts);
    case AlgebraKind::G2: return solve_g2(rs, st, t, opts);
    default: return solve_blocks(rs, st, t, opts);
  }
}

std::vector<Eigen::VectorXd> block_singular_values(const BlockSystem& bs) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(bs.values.size());
  for (const auto& v : bs.values) {
    if (v.size() == 0) {
      out.emplace_back();
      continue;
    }
    Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(v).singularValues();
    std::sort(sv.begin(), sv.end());
    out.push_back(sv);
  }
  return out;
}

}  // namespace qrep
