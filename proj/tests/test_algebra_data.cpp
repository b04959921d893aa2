#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qrep/algebra_data.hpp"
#include "qrep/errors.hpp"

using namespace qrep;

namespace {

const AlgebraKind kAll[] = {AlgebraKind::A1, AlgebraKind::A2, AlgebraKind::B2, AlgebraKind::D2, AlgebraKind::G2};

// Orbit of a weight under repeated simple reflections lambda -> lambda - lambda_i alpha_i,
// computed without the stored group.
std::set<Weight> brute_force_orbit(const RootSystem& rs, const Weight& start) {
  std::set<Weight> seen{start};
  std::vector<Weight> todo{start};
  while (!todo.empty()) {
    const Weight w = todo.back();
    todo.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      const Weight a = rs.simple_root(i);
      const Weight r{w[0] - w[i] * a[0], w[1] - w[i] * a[1]};
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("symmetrized Cartan matrices") {
  CHECK(root_system(AlgebraKind::A2).sym_cartan == IntMatrix2{{{2, -1}, {-1, 2}}});
  CHECK(root_system(AlgebraKind::B2).sym_cartan == IntMatrix2{{{2, -2}, {-2, 4}}});
  CHECK(root_system(AlgebraKind::G2).sym_cartan == IntMatrix2{{{2, -3}, {-3, 6}}});
  CHECK(root_system(AlgebraKind::D2).sym_cartan == IntMatrix2{{{2, 0}, {0, 2}}});
  for (auto kind : kAll) {
    const auto rs = root_system(kind);
    CHECK(rs.sym_cartan[0][1] == rs.sym_cartan[1][0]);
    for (int j = 0; j < rs.rank; ++j)
      for (int i = 0; i < rs.rank; ++i) CHECK(rs.sym_cartan[j][i] == rs.cartan[j][i] * rs.symmetrizers[i]);
  }
}

TEST_CASE("per-algebra constants") {
  const auto a2 = root_system(AlgebraKind::A2);
  CHECK(a2.p() == 1);
  CHECK(a2.symmetrizers == std::array<int, 2>{1, 1});
  CHECK(a2.grading == std::array<int, 2>{1, 1});
  CHECK(a2.level_step == 1);
  const auto b2 = root_system(AlgebraKind::B2);
  CHECK(b2.p() == 2);
  CHECK(b2.symmetrizers == std::array<int, 2>{1, 2});
  CHECK(b2.grading == std::array<int, 2>{1, 2});
  CHECK(b2.level_step == 2);
  CHECK(b2.raise_level_shift[0] == 0);
  const auto g2 = root_system(AlgebraKind::G2);
  CHECK(g2.p() == 3);
  CHECK(g2.symmetrizers == std::array<int, 2>{1, 3});
  CHECK(g2.grading == std::array<int, 2>{1, 3});
  CHECK(g2.level_step == 1);
  CHECK(g2.raise_level_shift == std::array<int, 2>{1, -3});
  CHECK(root_system(AlgebraKind::A1).rank == 1);
  CHECK(root_system(AlgebraKind::A1).cartan[0][0] == 2);
}

TEST_CASE("C2 is an alias of B2") {
  CHECK(normalize(AlgebraKind::C2) == AlgebraKind::B2);
  CHECK(root_system(AlgebraKind::C2).kind == AlgebraKind::B2);
  CHECK(parse_algebra("C2") == AlgebraKind::C2);
  CHECK_THROWS_AS(parse_algebra("E8"), InvalidParameter);
  for (const char* name : {"A1", "A2", "B2", "C2", "D2", "G2"}) CHECK(to_string(parse_algebra(name)) == name);
}

TEST_CASE("Weyl group orders, closure and determinants") {
  const std::map<AlgebraKind, std::size_t> order{{AlgebraKind::A1, 2}, {AlgebraKind::A2, 6}, {AlgebraKind::B2, 8},
                                                 {AlgebraKind::D2, 4}, {AlgebraKind::G2, 12}};
  for (auto kind : kAll) {
    const auto rs = root_system(kind);
    CHECK(rs.weyl_group.size() == order.at(kind));
    const std::set<IntMatrix2> group(rs.weyl_group.begin(), rs.weyl_group.end());
    CHECK(group.size() == rs.weyl_group.size());
    CHECK(group.count(IntMatrix2{{{1, 0}, {0, 1}}}) == 1);
    for (const auto& a : rs.weyl_group) {
      CHECK(std::abs(determinant(a)) == 1);
      for (const auto& b : rs.weyl_group) CHECK(group.count(multiply(a, b)) == 1);
    }
  }
}

TEST_CASE("Weyl group preserves the invariant form on weights") {
  for (auto kind : kAll) {
    const auto rs = root_system(kind);
    const auto m = scaled_weight_form(rs);
    for (const auto& w : rs.weyl_group) {
      const IntMatrix2 wt{{{w[0][0], w[1][0]}, {w[0][1], w[1][1]}}};
      CHECK(multiply(multiply(wt, m), w) == m);
    }
  }
}

TEST_CASE("Weyl orbits") {
  const auto a2 = root_system(AlgebraKind::A2);
  auto orbit = weyl_orbit(a2, {1, 1});
  CHECK(orbit.size() == 6);
  int sum = 0;
  for (const auto& [w, s] : orbit) sum += s;
  CHECK(sum == 0);

  orbit = weyl_orbit(a2, {0, 0});
  CHECK(orbit.size() == 6);
  for (const auto& [w, s] : orbit) CHECK(w == Weight{0, 0});

  const auto b2 = root_system(AlgebraKind::B2);
  const auto brute = brute_force_orbit(b2, b2.rho);
  CHECK(brute.size() == 8);
  std::set<Weight> stored;
  for (const auto& [w, s] : weyl_orbit(b2, b2.rho)) stored.insert(w);
  CHECK(stored == brute);

  for (auto kind : kAll) {
    const auto rs = root_system(kind);
    for (const Weight start : {Weight{1, 0}, Weight{0, 1}, Weight{2, 3}}) {
      if (rs.rank == 1 && start[1] != 0) continue;
      std::set<Weight> s;
      for (const auto& [w, sign] : weyl_orbit(rs, start)) s.insert(w);
      CHECK(s == brute_force_orbit(rs, start));
    }
  }
}

TEST_CASE("positive roots") {
  CHECK(root_system(AlgebraKind::A1).positive_roots.size() == 1);
  CHECK(root_system(AlgebraKind::A2).positive_roots.size() == 3);
  CHECK(root_system(AlgebraKind::B2).positive_roots.size() == 4);
  CHECK(root_system(AlgebraKind::D2).positive_roots.size() == 2);
  const auto g2 = root_system(AlgebraKind::G2);
  CHECK(g2.positive_roots.size() == 6);
  // Highest root 3 alpha_1 + 2 alpha_2 is the adjoint highest weight (0, 1).
  CHECK(g2.root_weight({3, 2}) == Weight{0, 1});
  CHECK(root_system(AlgebraKind::A2).root_weight({1, 1}) == Weight{1, 1});
  CHECK(root_system(AlgebraKind::B2).root_weight({2, 1}) == Weight{2, 0});
}

TEST_CASE("root depth") {
  const auto a2 = root_system(AlgebraKind::A2);
  RootCoords c{};
  REQUIRE(root_depth(a2, {2, 1}, {-3, 2}, c));
  CHECK(c == RootCoords{3, 1});
  CHECK_FALSE(root_depth(a2, {1, 0}, {0, 0}, c));
  const auto g2 = root_system(AlgebraKind::G2);
  REQUIRE(root_depth(g2, {0, 1}, {0, -1}, c));
  CHECK(c == RootCoords{6, 4});
}
