#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qrep/characters.hpp"
#include "qrep/errors.hpp"
#include "qrep/io.hpp"
#include "qrep/log.hpp"
#include "qrep/oracle.hpp"
#include "qrep/pipeline.hpp"
#include "qrep/spectra.hpp"
#include "qrep/verifier.hpp"

namespace {

enum class Mode { Build, Verify, Character, Spectra };
enum class Format { Json, Csv };

struct RunConfig {
  qrep::AlgebraKind algebra = qrep::AlgebraKind::A2;
  qrep::Weight weight{0, 0};
  double t = 0.0;
  double tol = 1e-9;
  std::optional<std::string> output;
  Format format = Format::Json;
  Mode mode = Mode::Build;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

qrep::Weight parse_weight(const std::string& text, int rank) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("weight components must be integers");
    }
    if (used != item.size() || value < 0) throw UsageError("weight components must be non-negative integers");
    parts.push_back(value);
  }
  if (static_cast<int>(parts.size()) != rank)
    throw UsageError(fmt::format("weight needs {} component(s) for this algebra", rank));
  return {parts[0], rank == 2 ? parts[1] : 0};
}

void emit_character(std::ostream& out, const RunConfig& cfg) {
  const auto rs = qrep::root_system(cfg.algebra);
  const auto ch = qrep::character(rs, cfg.weight);
  std::vector<std::pair<std::string, std::array<int, 2>>> directions{{"h1", {1, 0}}};
  if (rs.rank == 2) {
    directions.push_back({"h2", {0, 1}});
    directions.push_back({"grading", rs.grading});
  }
  if (cfg.format == Format::Json) {
    fmt::print(out, "{{\n  \"algebra\": \"{}\",\n  \"dim\": {},\n  \"terms\": [", qrep::to_string(cfg.algebra),
               ch.total_mass());
    bool first = true;
    for (auto it = ch.terms().rbegin(); it != ch.terms().rend(); ++it) {
      fmt::print(out, "{}[{}, {}, {}]", first ? "" : ", ", it->first[0], it->first[1], it->second);
      first = false;
    }
    out << "],\n  \"reductions\": {";
    for (std::size_t d = 0; d < directions.size(); ++d) {
      fmt::print(out, "{}\n    \"{}\": [", d == 0 ? "" : ",", directions[d].first);
      const auto hist = qrep::reduce_to_a1(ch, directions[d].second);
      bool f = true;
      for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
        fmt::print(out, "{}[{}, {}]", f ? "" : ", ", it->first, it->second);
        f = false;
      }
      out << "]";
    }
    out << "\n  }\n}\n";
  } else {
    out << "kind,key,exponent1,exponent2,multiplicity\n";
    for (auto it = ch.terms().rbegin(); it != ch.terms().rend(); ++it)
      fmt::print(out, "term,,{},{},{}\n", it->first[0], it->first[1], it->second);
    for (const auto& [name, dir] : directions) {
      const auto hist = qrep::reduce_to_a1(ch, dir);
      for (auto it = hist.rbegin(); it != hist.rend(); ++it)
        fmt::print(out, "reduction,{},{},,{}\n", name, it->first, it->second);
    }
  }
}

void emit_spectra(std::ostream& out, const RunConfig& cfg) {
  const auto rs = qrep::root_system(cfg.algebra);
  const auto st = qrep::build_spectra(rs, qrep::character(rs, cfg.weight));
  if (cfg.format == Format::Json) {
    fmt::print(out, "{{\n  \"algebra\": \"{}\",\n  \"dim\": {},\n  \"levels\": [", qrep::to_string(cfg.algebra),
               st.total_dim);
    for (std::size_t n = 0; n < st.levels.size(); ++n) {
      const auto& level = st.levels[n];
      fmt::print(out, "{}\n    {{\"n\": {}, \"lambda_exp\": {}, \"classes\": [", n == 0 ? "" : ",", level.n,
                 level.lambda_exp);
      for (std::size_t s = 0; s < level.alpha_classes.size(); ++s) {
        const auto& c = level.alpha_classes[s];
        fmt::print(out, "{}{{\"alpha_exp\": {}, \"beta_exp\": {}, \"multiplicity\": {}}}", s == 0 ? "" : ", ",
                   c.alpha_exp, c.beta_exp(level.lambda_exp), c.multiplicity);
      }
      out << "]}";
    }
    out << "\n  ]\n}\n";
  } else {
    out << "level,lambda_exp,class,alpha_exp,beta_exp,multiplicity\n";
    for (const auto& level : st.levels) {
      int s = 1;
      for (const auto& c : level.alpha_classes)
        fmt::print(out, "{},{},{},{},{},{}\n", level.n, level.lambda_exp, s++, c.alpha_exp,
                   c.beta_exp(level.lambda_exp), c.multiplicity);
    }
  }
}

int emit_verify(std::ostream& out, const RunConfig& cfg) {
  const auto g = qrep::build_representation(cfg.algebra, cfg.weight, cfg.t, {cfg.tol});
  const auto report = qrep::check_relations(g, cfg.tol);
  std::optional<double> oracle_gap;
  try {
    const auto oracle = qrep::build_oracle(qrep::root_system(cfg.algebra), cfg.weight, cfg.t);
    oracle_gap = qrep::compare_invariants(g, oracle, qrep::default_words(g.rank()));
  } catch (const qrep::CapExceeded&) {
  }
  const double oracle_tol = 1e-8;
  const bool ok = report.passed() && (!oracle_gap || *oracle_gap <= oracle_tol);
  if (cfg.format == Format::Json) {
    fmt::print(out, "{{\n  \"algebra\": \"{}\",\n  \"dim\": {},\n  \"tol\": {:.17g},\n  \"residuals\": [",
               qrep::to_string(cfg.algebra), g.dim(), cfg.tol);
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
      const auto& e = report.entries[k];
      fmt::print(out, "{}\n    {{\"relation\": \"{}\", \"absolute\": {:.6e}, \"relative\": {:.6e}}}", k == 0 ? "" : ",",
                 e.name, e.absolute, e.relative);
    }
    out << "\n  ],\n";
    if (oracle_gap)
      fmt::print(out, "  \"oracle_deviation\": {:.6e},\n", *oracle_gap);
    else
      out << "  \"oracle_deviation\": null,\n";
    fmt::print(out, "  \"passed\": {}\n}}\n", ok);
  } else {
    out << "relation,absolute,relative\n";
    for (const auto& e : report.entries) fmt::print(out, "\"{}\",{:.6e},{:.6e}\n", e.name, e.absolute, e.relative);
    if (oracle_gap) fmt::print(out, "\"oracle deviation\",,{:.6e}\n", *oracle_gap);
    fmt::print(out, "\"passed\",,{}\n", ok);
  }
  if (!ok)
    std::cerr << fmt::format("verification failed: worst relation '{}' at {:.3e}{}\n", report.worst().name,
                             report.worst().relative,
                             oracle_gap ? fmt::format(", oracle deviation {:.3e}", *oracle_gap) : std::string());
  return ok ? 0 : 1;
}

int run(const RunConfig& cfg) {
  std::ofstream file;
  if (cfg.output && !(cfg.mode == Mode::Build && cfg.format == Format::Csv)) {
    file.open(*cfg.output);
    if (!file) throw UsageError("cannot open output file " + *cfg.output);
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  switch (cfg.mode) {
    case Mode::Character: emit_character(out, cfg); return 0;
    case Mode::Spectra: emit_spectra(out, cfg); return 0;
    case Mode::Verify: return emit_verify(out, cfg);
    case Mode::Build: {
      const auto g = qrep::build_representation(cfg.algebra, cfg.weight, cfg.t, {cfg.tol});
      if (cfg.format == Format::Json)
        qrep::write_json(out, g);
      else if (cfg.output)
        qrep::write_csv_files(*cfg.output, g);
      else
        qrep::write_csv(out, g);
      return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  qrep::init_logging_from_env();
  CLI::App app{"Generator matrices for quantum rank-one and rank-two algebras"};
  std::string algebra;
  std::string weight;
  double t = 0.0;
  RunConfig cfg;
  std::string output;
  const std::map<std::string, Mode> modes{
      {"build", Mode::Build}, {"verify", Mode::Verify}, {"character", Mode::Character}, {"spectra", Mode::Spectra}};
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--algebra", algebra, "A1, A2, B2, C2, D2 or G2")->required();
  app.add_option("--weight", weight, "comma-separated highest weight")->required();
  app.add_option("--t", t, "deformation parameter");
  app.add_option("--tol", cfg.tol, "relative tolerance")->capture_default_str();
  app.add_option("--mode", cfg.mode, "build, verify, character or spectra")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--format", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", output, "output path (default stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.algebra = qrep::parse_algebra(algebra);
    cfg.weight = parse_weight(weight, qrep::root_system(cfg.algebra).rank);
    const bool needs_t = cfg.mode == Mode::Build || cfg.mode == Mode::Verify;
    if (needs_t && !(t > 0.0 && std::isfinite(t))) throw UsageError("--t must be a positive number");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    cfg.t = t;
    if (!output.empty()) cfg.output = output;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const qrep::InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
