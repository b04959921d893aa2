#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qrep/algebra_data.hpp"
#include "qrep/characters.hpp"
#include "qrep/generator_set.hpp"

namespace qrep {

struct AlphaClass {
  int alpha_exp = 0;
  int multiplicity = 1;
  /// The single weight carried by this (level, class) node.
  Weight weight{0, 0};
  /// First global basis index of the class.
  int offset = 0;

  int beta_exp(int lambda_exp) const { return lambda_exp - alpha_exp; }
};

struct LevelData {
  int n = 1;
  int lambda_exp = 0;
  std::vector<AlphaClass> alpha_classes;  ///< strictly decreasing alpha_exp
};

/// Diagonal data of the construction: levels of Q, classes of the class
/// root's R-eigenvalue inside each level, and the global basis order.
struct SpectraTable {
  AlgebraKind algebra = AlgebraKind::A2;
  Weight hw{0, 0};
  std::vector<LevelData> levels;
  std::vector<BasisLabel> basis;
  /// (level n, class s, copy) -> global index; n and s are 1-based.
  std::map<std::tuple<int, int, int>, int> basis_index;
  int total_dim = 0;

  const AlphaClass& node(int n, int s) const { return levels.at(n - 1).alpha_classes.at(s - 1); }
};

SpectraTable build_spectra(const RootSystem& rs, const WeightPolynomial& ch);

/// Node of the block graph: one (level, class) pair, hence one weight space.
struct BlockNode {
  int level = 1;
  int cls = 1;
  Weight weight{0, 0};
  int multiplicity = 1;
  int offset = 0;
  /// Simple-root coordinates of hw - weight.
  RootCoords depth_coords{0, 0};
  int depth() const { return depth_coords[0] + depth_coords[1]; }
};

/// Primitive block of s^{root+1}: the part of X+_{root} mapping the weight
/// space of `source` to that of `target` (= source + alpha_root).
struct BlockEdge {
  int root = 0;
  int source = 0;
  int target = 0;
  int rows = 0;  ///< multiplicity of target
  int cols = 0;  ///< multiplicity of source
};

struct BlockGraph {
  std::vector<BlockNode> nodes;
  std::vector<BlockEdge> edges;
  /// raise[root][node] = outgoing edge index, or -1.
  std::array<std::vector<int>, 2> raise;
  /// lower[root][node] = incoming edge index (from node - alpha_root), or -1.
  std::array<std::vector<int>, 2> lower;
  std::map<Weight, int> node_of_weight;

  int edge_count(int root) const;
  int max_depth() const;
  /// Nodes grouped by depth, each group in node order.
  std::vector<std::vector<int>> depth_layers() const;
};

BlockGraph build_block_graph(const RootSystem& rs, const SpectraTable& st);

/// Maximal strings of nodes joined by edges of one root, listed from the
/// lowest node upwards.
std::vector<std::vector<int>> chains(const BlockGraph& graph, int root);

}  // namespace qrep
