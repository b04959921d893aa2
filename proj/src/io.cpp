#include "qrep/io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

struct NamedMatrix {
  std::string name;
  Eigen::MatrixXd value;
};

std::vector<NamedMatrix> exported_matrices(const GeneratorSet& g) {
  const int rank = g.rank();
  std::vector<NamedMatrix> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back({fmt::format("xp{}", i + 1), g.xp[i]});
    out.push_back({fmt::format("xm{}", i + 1), g.xm[i]});
  }
  for (int i = 0; i < rank; ++i) out.push_back({fmt::format("h{}", i + 1), g.h_matrix(i)});
  return out;
}

void write_matrix_json(std::ostream& out, const Eigen::MatrixXd& m) {
  fmt::print(out, "{{\"rows\": {}, \"cols\": {}, \"triplets\": [", m.rows(), m.cols());
  bool first = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0.0) continue;
      fmt::print(out, "{}[{}, {}, {:.17g}]", first ? "" : ", ", i, j, m(i, j));
      first = false;
    }
  out << "]}";
}

Eigen::MatrixXd read_matrix_json(const nlohmann::json& j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& tr : j.at("triplets")) {
    const int r = tr.at(0).get<int>();
    const int c = tr.at(1).get<int>();
    if (r < 0 || c < 0 || r >= m.rows() || c >= m.cols()) throw ShapeError("triplet index out of range");
    m(r, c) = tr.at(2).get<double>();
  }
  return m;
}

}  // namespace

void write_json(std::ostream& out, const GeneratorSet& g) {
  fmt::print(out, "{{\n  \"algebra\": \"{}\",\n", to_string(g.algebra));
  if (g.rank() == 1)
    fmt::print(out, "  \"weight\": [{}],\n", g.hw[0]);
  else
    fmt::print(out, "  \"weight\": [{}, {}],\n", g.hw[0], g.hw[1]);
  fmt::print(out, "  \"t\": {:.17g},\n  \"dim\": {},\n  \"basis\": [", g.t, g.dim());
  for (std::size_t k = 0; k < g.basis.size(); ++k) {
    const auto& b = g.basis[k];
    fmt::print(out, "{}\n    {{\"level\": {}, \"alpha_exp\": {}, \"copy\": {}}}", k == 0 ? "" : ",", b.level,
               b.alpha_exp, b.copy);
  }
  out << (g.basis.empty() ? "],\n" : "\n  ],\n");
  out << "  \"matrices\": {";
  const auto mats = exported_matrices(g);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    fmt::print(out, "{}\n    \"{}\": ", k == 0 ? "" : ",", mats[k].name);
    write_matrix_json(out, mats[k].value);
  }
  out << "\n  }\n}\n";
}

GeneratorSet read_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto algebra = parse_algebra(j.at("algebra").get<std::string>());
    const auto weight = j.at("weight").get<std::vector<int>>();
    Weight hw{0, 0};
    for (std::size_t k = 0; k < weight.size() && k < 2; ++k) hw[k] = weight[k];
    const int dim = j.at("dim").get<int>();
    GeneratorSet g = zero_generators(algebra, hw, j.at("t").get<double>(), dim);
    for (const auto& b : j.at("basis"))
      g.basis.push_back({b.at("level").get<int>(), b.at("alpha_exp").get<int>(), b.at("copy").get<int>(), {0, 0}});
    const auto& mats = j.at("matrices");
    const int rank = g.rank();
    for (int i = 0; i < rank; ++i) {
      g.xp[i] = read_matrix_json(mats.at(fmt::format("xp{}", i + 1)));
      g.xm[i] = read_matrix_json(mats.at(fmt::format("xm{}", i + 1)));
      const Eigen::MatrixXd h = read_matrix_json(mats.at(fmt::format("h{}", i + 1)));
      if (g.xp[i].rows() != dim || g.xm[i].rows() != dim || h.rows() != dim) throw ShapeError("matrix size differs from dim");
      for (int k = 0; k < dim; ++k) g.h[i][k] = static_cast<int>(std::lround(h(k, k)));
    }
    for (int k = 0; k < dim && k < static_cast<int>(g.basis.size()); ++k) g.basis[k].weight = {g.h[0][k], g.h[1][k]};
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("JSON does not describe a generator set: ") + e.what());
  }
}

namespace {

void write_dense_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) fmt::print(out, "{}{:.17g}", j == 0 ? "" : ",", m(i, j));
    out << '\n';
  }
}

}  // namespace

void write_csv(std::ostream& out, const GeneratorSet& g) {
  for (const auto& [name, value] : exported_matrices(g)) {
    out << "# " << name << '\n';
    write_dense_csv(out, value);
  }
}

void write_csv_files(const std::string& prefix, const GeneratorSet& g) {
  for (const auto& [name, value] : exported_matrices(g)) {
    const std::string path = prefix + "_" + name + ".csv";
    std::ofstream out(path);
    if (!out) throw InvalidParameter("cannot open " + path);
    write_dense_csv(out, value);
  }
}

}  // namespace qrep
