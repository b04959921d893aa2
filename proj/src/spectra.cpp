#include "qrep/spectra.hpp"

#include <algorithm>
#include <functional>

#include "qrep/errors.hpp"

namespace qrep {

SpectraTable build_spectra(const RootSystem& rs, const WeightPolynomial& ch) {
  SpectraTable st;
  st.algebra = rs.kind;
  const int k = rs.class_root;

  // level exponent (descending) -> alpha exponent (descending) -> (weight, mult)
  std::map<int, std::map<int, std::pair<Weight, int>, std::greater<>>, std::greater<>> grid;
  for (const auto& [w, mult] : ch.terms()) {
    if (mult <= 0) throw InvalidParameter("character has a non-positive multiplicity");
    const int lambda = rs.grading[0] * w[0] + rs.grading[1] * w[1];
    const int alpha = rs.symmetrizers[k] * w[k];
    auto [it, inserted] = grid[lambda].try_emplace(alpha, w, mult);
    if (!inserted) throw StructureError("two weights share one level and class");
  }
  if (grid.empty()) throw InvalidParameter("empty character");

  int index = 0;
  int n = 1;
  for (const auto& [lambda, classes] : grid) {
    LevelData level;
    level.n = n;
    level.lambda_exp = lambda;
    int s = 1;
    for (const auto& [alpha, wm] : classes) {
      AlphaClass c;
      c.alpha_exp = alpha;
      c.weight = wm.first;
      c.multiplicity = wm.second;
      c.offset = index;
      for (int copy = 0; copy < c.multiplicity; ++copy) {
        st.basis.push_back({n, alpha, copy, c.weight});
        st.basis_index[{n, s, copy}] = index++;
      }
      level.alpha_classes.push_back(c);
      ++s;
    }
    st.levels.push_back(std::move(level));
    ++n;
  }
  st.total_dim = index;

  // The highest weight is the only weight with no weight above it.
  int tops = 0;
  for (const auto& [w, mult] : ch.terms()) {
    bool top = true;
    for (int i = 0; i < rs.rank; ++i) {
      const Weight a = rs.simple_root(i);
      if (ch.coefficient({w[0] + a[0], w[1] + a[1]}) != 0) top = false;
    }
    if (top) {
      st.hw = w;
      if (mult != 1) throw StructureError("highest weight must have multiplicity one");
      ++tops;
    }
  }
  if (tops != 1) throw StructureError("character has no unique highest weight");
  return st;
}

int BlockGraph::edge_count(int root) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const BlockEdge& e) { return e.root == root; }));
}

int BlockGraph::max_depth() const {
  int d = 0;
  for (const auto& node : nodes) d = std::max(d, node.depth());
  return d;
}

std::vector<std::vector<int>> BlockGraph::depth_layers() const {
  std::vector<std::vector<int>> layers(max_depth() + 1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) layers[nodes[i].depth()].push_back(i);
  return layers;
}

BlockGraph build_block_graph(const RootSystem& rs, const SpectraTable& st) {
  BlockGraph g;
  for (const auto& level : st.levels) {
    int s = 1;
    for (const auto& c : level.alpha_classes) {
      BlockNode node;
      node.level = level.n;
      node.cls = s++;
      node.weight = c.weight;
      node.multiplicity = c.multiplicity;
      node.offset = c.offset;
      if (!root_depth(rs, st.hw, c.weight, node.depth_coords) || node.depth_coords[0] < 0 ||
          node.depth_coords[1] < 0)
        throw StructureError("weight is not below the highest weight");
      g.node_of_weight[c.weight] = static_cast<int>(g.nodes.size());
      g.nodes.push_back(node);
    }
  }
  const int count = static_cast<int>(g.nodes.size());
  for (int r = 0; r < 2; ++r) {
    g.raise[r].assign(count, -1);
    g.lower[r].assign(count, -1);
  }
  for (int root = 0; root < rs.rank; ++root) {
    const Weight alpha = rs.simple_root(root);
    for (int src = 0; src < count; ++src) {
      const auto& from = g.nodes[src];
      auto it = g.node_of_weight.find({from.weight[0] + alpha[0], from.weight[1] + alpha[1]});
      if (it == g.node_of_weight.end()) continue;
      const auto& to = g.nodes[it->second];
      if (to.level - from.level != rs.raise_level_shift[root])
        throw StructureError("block violates the level selection rule");
      if (g.raise[root][src] != -1 || g.lower[root][it->second] != -1)
        throw StructureError("node has two competing blocks in one direction");
      const int e = static_cast<int>(g.edges.size());
      g.edges.push_back({root, src, it->second, to.multiplicity, from.multiplicity});
      g.raise[root][src] = e;
      g.lower[root][it->second] = e;
    }
  }
  return g;
}

std::vector<std::vector<int>> chains(const BlockGraph& graph, int root) {
  std::vector<std::vector<int>> out;
  for (int start = 0; start < static_cast<int>(graph.nodes.size()); ++start) {
    if (graph.lower[root][start] != -1) continue;
    std::vector<int> chain{start};
    for (int e = graph.raise[root][start]; e != -1; e = graph.raise[root][graph.edges[e].target])
      chain.push_back(graph.edges[e].target);
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace qrep
