#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrep {

enum class AlgebraKind { A1, A2, B2, C2, D2, G2 };

/// C2 is stored as B2; every other tag maps to itself.
AlgebraKind normalize(AlgebraKind kind);
AlgebraKind parse_algebra(std::string_view name);
std::string_view to_string(AlgebraKind kind);

/// Integer weight in fundamental-weight (Dynkin) coordinates. Rank-one
/// algebras leave the second component at zero.
using Weight = std::array<int, 2>;
using IntMatrix2 = std::array<std::array<int, 2>, 2>;

/// Root coordinates of a root: alpha = c[0]*alpha_1 + c[1]*alpha_2.
using RootCoords = std::array<int, 2>;

struct RootSystem {
  AlgebraKind kind = AlgebraKind::A2;
  int rank = 2;
  /// cartan[j][i] = alpha_j(h_i): the shift of h_i produced by X+_j.
  IntMatrix2 cartan{};
  /// Symmetrized matrix: sym_cartan[j][i] = cartan[j][i] * w_i.
  IntMatrix2 sym_cartan{};
  std::array<int, 2> symmetrizers{1, 1};
  std::vector<IntMatrix2> weyl_group;
  Weight rho{1, 1};
  /// Q = exp(t * (grading[0] h_1 + grading[1] h_2)).
  std::array<int, 2> grading{1, 1};
  /// Spacing of adjacent Q exponents, in units of t.
  int level_step = 1;
  /// Change of the level index (levels ordered by descending Q) under X+_i.
  std::array<int, 2> raise_level_shift{-1, -1};
  /// Root whose Cartan exponent w_k h_k labels the classes inside a level.
  int class_root = 0;
  std::vector<RootCoords> positive_roots;

  /// 1 for A2, 2 for B2, 3 for G2; 0 for A1 and D2.
  int p() const;
  /// Simple root alpha_i in Dynkin coordinates (row i of the Cartan matrix).
  Weight simple_root(int i) const;
  /// Dynkin coordinates of the root with the given simple-root coordinates.
  Weight root_weight(RootCoords c) const;
};

RootSystem root_system(AlgebraKind kind);

/// Apply a Weyl group element to a weight.
Weight apply(const IntMatrix2& w, const Weight& weight);
int determinant(const IntMatrix2& w);
IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b);

/// (W(weight), det W) for every element of the Weyl group, repeats included.
std::vector<std::pair<Weight, int>> weyl_orbit(const RootSystem& rs, const Weight& weight);

/// Integer multiple of the invariant form on weight space: adj(K) K~ adj(K)^T.
IntMatrix2 scaled_weight_form(const RootSystem& rs);

/// Simple-root coordinates of (hw - weight); nullopt-like failure is signalled
/// by returning false when the difference is not in the root lattice.
bool root_depth(const RootSystem& rs, const Weight& hw, const Weight& weight, RootCoords& out);

}  // namespace qrep
