#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrep/errors.hpp"
#include "qrep/io.hpp"
#include "qrep/pipeline.hpp"
#include "qrep/verifier.hpp"

using namespace qrep;

namespace {

std::string to_json(const GeneratorSet& g) {
  std::ostringstream out;
  write_json(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("JSON round trip is exact") {
  for (auto [kind, hw] : {std::pair{AlgebraKind::A2, Weight{2, 1}}, std::pair{AlgebraKind::G2, Weight{1, 0}},
                          std::pair{AlgebraKind::A1, Weight{3, 0}}, std::pair{AlgebraKind::B2, Weight{0, 0}}}) {
    const auto g = build_representation(kind, hw, 0.3);
    std::istringstream in(to_json(g));
    const auto back = read_json(in);
    CHECK(back.algebra == g.algebra);
    CHECK(back.hw == g.hw);
    CHECK(back.t == g.t);
    REQUIRE(back.dim() == g.dim());
    for (int i = 0; i < g.rank(); ++i) {
      CHECK(back.xp[i] == g.xp[i]);
      CHECK(back.xm[i] == g.xm[i]);
      CHECK(back.h[i] == g.h[i]);
    }
    for (int k = 0; k < g.dim(); ++k) {
      CHECK(back.basis[k].level == g.basis[k].level);
      CHECK(back.basis[k].alpha_exp == g.basis[k].alpha_exp);
      CHECK(back.basis[k].copy == g.basis[k].copy);
      CHECK(back.basis[k].weight == g.basis[k].weight);
    }
    const auto a = check_relations(g, 1e-9);
    const auto b = check_relations(back, 1e-9);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k) CHECK(a.entries[k].absolute == b.entries[k].absolute);
  }
}

TEST_CASE("JSON output is deterministic and valid") {
  const auto first = to_json(build_representation(AlgebraKind::B2, {1, 1}, 0.3));
  const auto second = to_json(build_representation(AlgebraKind::B2, {1, 1}, 0.3));
  CHECK(first == second);
  const auto j = nlohmann::json::parse(first);
  CHECK(j.at("dim").get<int>() == 16);
  CHECK(j.at("algebra").get<std::string>() == "B2");
  CHECK(j.at("matrices").size() == 6);
  CHECK(j.at("basis").size() == 16);
}

TEST_CASE("JSON input errors") {
  std::istringstream garbage("{not json");
  CHECK_THROWS_AS(read_json(garbage), InvalidParameter);
  std::istringstream missing(R"({"algebra": "A2", "weight": [1, 0]})");
  CHECK_THROWS_AS(read_json(missing), InvalidParameter);
  std::istringstream unknown(R"({"algebra": "E8", "weight": [1, 0], "t": 0.3, "dim": 1, "basis": [], "matrices": {}})");
  CHECK_THROWS(read_json(unknown));

  auto j = nlohmann::json::parse(to_json(build_representation(AlgebraKind::A2, {1, 0}, 0.3)));
  j["matrices"]["xp1"]["triplets"].push_back({7, 0, 1.0});
  std::istringstream out_of_range(j.dump());
  CHECK_THROWS_AS(read_json(out_of_range), ShapeError);
}

TEST_CASE("CSV stream layout") {
  const auto g = build_representation(AlgebraKind::G2, {1, 0}, 0.3);
  std::ostringstream out;
  write_csv(out, g);
  std::istringstream in(out.str());
  std::vector<std::string> headers;
  int data_rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# ", 0) == 0) {
      headers.push_back(line.substr(2));
      continue;
    }
    ++data_rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(headers == std::vector<std::string>{"xp1", "xm1", "xp2", "xm2", "h1", "h2"});
  CHECK(data_rows == 6 * 7);
}

TEST_CASE("CSV files") {
  const auto dir = std::filesystem::temp_directory_path() / "qrep_test_io";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "a1").string();
  write_csv_files(prefix, build_representation(AlgebraKind::A1, {2, 0}, 0.3));
  for (const char* name : {"xp1", "xm1", "h1"}) {
    std::ifstream in(prefix + "_" + name + ".csv");
    REQUIRE(in.good());
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 3);
  }
  CHECK_FALSE(std::filesystem::exists(prefix + "_xp2.csv"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_csv_files("/nonexistent/dir/x", build_representation(AlgebraKind::A1, {1, 0}, 0.3)),
                  InvalidParameter);
}
