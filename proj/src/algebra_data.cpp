#include "qrep/algebra_data.hpp"

#include <algorithm>
#include <set>

#include "qrep/errors.hpp"

namespace qrep {

AlgebraKind normalize(AlgebraKind kind) {
  return kind == AlgebraKind::C2 ? AlgebraKind::B2 : kind;
}

AlgebraKind parse_algebra(std::string_view name) {
  if (name == "A1") return AlgebraKind::A1;
  if (name == "A2") return AlgebraKind::A2;
  if (name == "B2") return AlgebraKind::B2;
  if (name == "C2") return AlgebraKind::C2;
  if (name == "D2") return AlgebraKind::D2;
  if (name == "G2") return AlgebraKind::G2;
  throw InvalidParameter("unknown algebra '" + std::string(name) + "'");
}

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::A1: return "A1";
    case AlgebraKind::A2: return "A2";
    case AlgebraKind::B2: return "B2";
    case AlgebraKind::C2: return "C2";
    case AlgebraKind::D2: return "D2";
    case AlgebraKind::G2: return "G2";
  }
  return "?";
}

int RootSystem::p() const {
  switch (kind) {
    case AlgebraKind::A2: return 1;
    case AlgebraKind::B2:
    case AlgebraKind::C2: return 2;
    case AlgebraKind::G2: return 3;
    default: return 0;
  }
}

Weight RootSystem::simple_root(int i) const { return {cartan[i][0], cartan[i][1]}; }

Weight RootSystem::root_weight(RootCoords c) const {
  Weight w{0, 0};
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < 2; ++k) w[k] += c[j] * cartan[j][k];
  return w;
}

Weight apply(const IntMatrix2& w, const Weight& weight) {
  return {w[0][0] * weight[0] + w[0][1] * weight[1], w[1][0] * weight[0] + w[1][1] * weight[1]};
}

int determinant(const IntMatrix2& w) { return w[0][0] * w[1][1] - w[0][1] * w[1][0]; }

IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

namespace {

// s_i(lambda) = lambda - lambda_i * alpha_i, alpha_i being row i of the Cartan matrix.
IntMatrix2 simple_reflection(const RootSystem& rs, int i) {
  IntMatrix2 m{{{1, 0}, {0, 1}}};
  for (int k = 0; k < 2; ++k) m[k][i] -= rs.cartan[i][k];
  return m;
}

std::vector<IntMatrix2> generate_group(const RootSystem& rs) {
  std::vector<IntMatrix2> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
  std::vector<IntMatrix2> group{IntMatrix2{{{1, 0}, {0, 1}}}};
  std::set<IntMatrix2> seen(group.begin(), group.end());
  for (std::size_t at = 0; at < group.size(); ++at) {
    for (const auto& g : gens) {
      IntMatrix2 next = multiply(g, group[at]);
      if (seen.insert(next).second) group.push_back(next);
    }
  }
  return group;
}

std::vector<RootCoords> generate_positive_roots(const RootSystem& rs) {
  std::set<RootCoords> roots;
  std::vector<RootCoords> queue;
  for (int i = 0; i < rs.rank; ++i) {
    RootCoords c{0, 0};
    c[i] = 1;
    roots.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    RootCoords c = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      int pairing = 0;  // alpha(h_i)
      for (int j = 0; j < rs.rank; ++j) pairing += c[j] * rs.cartan[j][i];
      RootCoords r = c;
      r[i] -= pairing;
      if (roots.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<RootCoords> positive;
  for (const auto& r : roots)
    if (r[0] >= 0 && r[1] >= 0) positive.push_back(r);
  return positive;
}

}  // namespace

RootSystem root_system(AlgebraKind requested) {
  RootSystem rs;
  rs.kind = normalize(requested);
  switch (rs.kind) {
    case AlgebraKind::A1:
      rs.rank = 1;
      rs.sym_cartan = {{{2, 0}, {0, 0}}};
      rs.symmetrizers = {1, 1};
      rs.rho = {1, 0};
      rs.grading = {1, 0};
      rs.level_step = 2;
      rs.raise_level_shift = {-1, 0};
      rs.class_root = 0;
      break;
    case AlgebraKind::A2:
      rs.sym_cartan = {{{2, -1}, {-1, 2}}};
      rs.symmetrizers = {1, 1};
      rs.grading = {1, 1};
      rs.level_step = 1;
      rs.raise_level_shift = {-1, -1};
      rs.class_root = 0;
      break;
    case AlgebraKind::B2:
      rs.sym_cartan = {{{2, -2}, {-2, 4}}};
      rs.symmetrizers = {1, 2};
      rs.grading = {1, 2};
      rs.level_step = 2;
      rs.raise_level_shift = {0, -1};
      rs.class_root = 1;
      break;
    case AlgebraKind::G2:
      rs.sym_cartan = {{{2, -3}, {-3, 6}}};
      rs.symmetrizers = {1, 3};
      rs.grading = {1, 3};
      rs.level_step = 1;
      rs.raise_level_shift = {1, -3};
      rs.class_root = 0;
      break;
    case AlgebraKind::D2:
      rs.sym_cartan = {{{2, 0}, {0, 2}}};
      rs.symmetrizers = {1, 1};
      rs.grading = {1, 1};
      rs.level_step = 2;
      rs.raise_level_shift = {-1, -1};
      rs.class_root = 0;
      break;
    case AlgebraKind::C2:
      throw InternalError("C2 must normalize to B2");
  }
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      rs.cartan[j][i] = rs.sym_cartan[j][i] == 0 ? 0 : rs.sym_cartan[j][i] / rs.symmetrizers[i];
  rs.weyl_group = generate_group(rs);
  rs.positive_roots = generate_positive_roots(rs);
  return rs;
}

std::vector<std::pair<Weight, int>> weyl_orbit(const RootSystem& rs, const Weight& weight) {
  std::vector<std::pair<Weight, int>> out;
  out.reserve(rs.weyl_group.size());
  for (const auto& w : rs.weyl_group) out.emplace_back(apply(w, weight), determinant(w));
  return out;
}

IntMatrix2 scaled_weight_form(const RootSystem& rs) {
  if (rs.rank == 1) return {{{1, 0}, {0, 0}}};
  // Rows of K are simple roots in Dynkin coordinates; K~ = K Omega K^T.
  const auto& k = rs.cartan;
  IntMatrix2 adj{{{k[1][1], -k[0][1]}, {-k[1][0], k[0][0]}}};
  IntMatrix2 adj_t{{{adj[0][0], adj[1][0]}, {adj[0][1], adj[1][1]}}};
  return multiply(multiply(adj, rs.sym_cartan), adj_t);
}

bool root_depth(const RootSystem& rs, const Weight& hw, const Weight& weight, RootCoords& out) {
  const int d0 = hw[0] - weight[0];
  const int d1 = hw[1] - weight[1];
  const auto& c = rs.cartan;
  if (rs.rank == 1) {
    if (d1 != 0 || d0 % 2 != 0) return false;
    out = {d0 / 2, 0};
    return true;
  }
  const int det = c[0][0] * c[1][1] - c[1][0] * c[0][1];
  const int n0 = d0 * c[1][1] - c[1][0] * d1;
  const int n1 = c[0][0] * d1 - c[0][1] * d0;
  if (n0 % det != 0 || n1 % det != 0) return false;
  out = {n0 / det, n1 / det};
  return true;
}

}  // namespace qrep
