#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "golden.hpp"
#include "qrep/characters.hpp"
#include "qrep/errors.hpp"
#include "qrep/io.hpp"
#include "qrep/oracle.hpp"
#include "qrep/pipeline.hpp"
#include "qrep/verifier.hpp"

using namespace qrep;

namespace {

constexpr double kGoldenTol = 1e-10;
constexpr double kResidualTol = 1e-9;
constexpr double kOracleTol = 1e-8;
constexpr double kTraceTol = 1e-9;
constexpr double kRatioTarget = 4.0;
constexpr double kRatioBand = 0.5;
constexpr double kSpectrumTol = 1e-10;
constexpr int kOracleCap = 200;

struct Rep {
  AlgebraKind kind;
  Weight hw;
};

struct Outcome {
  bool passed;
  std::string detail;
};

std::string label(const Rep& r) {
  if (r.kind == AlgebraKind::A1) return fmt::format("A1({})", r.hw[0]);
  return fmt::format("{}({},{})", to_string(r.kind), r.hw[0], r.hw[1]);
}

std::vector<Rep> residual_reps() {
  std::vector<Rep> reps;
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) reps.push_back({AlgebraKind::A2, {p, q}});
  for (Weight w : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}, Weight{0, 2}}) reps.push_back({AlgebraKind::B2, w});
  for (Weight w : {Weight{1, 0}, Weight{0, 1}}) reps.push_back({AlgebraKind::G2, w});
  for (int l = 0; l <= 8; ++l) reps.push_back({AlgebraKind::A1, {l, 0}});
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) reps.push_back({AlgebraKind::D2, {p, q}});
  return reps;
}

const std::vector<double> kTs{0.1, 0.3, 1.0};

Outcome dimensions() {
  bool ok = dimension(root_system(AlgebraKind::A2), {2, 1}) == 15 &&
            dimension(root_system(AlgebraKind::B2), {1, 1}) == 16 &&
            dimension(root_system(AlgebraKind::G2), {1, 0}) == 7;
  int checked = 0;
  for (auto kind : {AlgebraKind::A2, AlgebraKind::B2, AlgebraKind::G2}) {
    const auto rs = root_system(kind);
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        ok = ok && character(rs, {p, q}).total_mass() == dimension(rs, {p, q});
        ++checked;
      }
  }
  return {ok, fmt::format("{} weights, named dimensions 15/16/7", checked)};
}

Outcome reductions() {
  const auto a2 = reduce_to_a1(character(root_system(AlgebraKind::A2), {2, 1}), {1, 1});
  const auto b2 = reduce_to_a1(character(root_system(AlgebraKind::B2), {1, 1}), {1, 2});
  const bool ok = a2 == std::map<int, long long>{{3, 1}, {2, 2}, {1, 3}, {0, 3}, {-1, 3}, {-2, 2}, {-3, 1}} &&
                  b2 == std::map<int, long long>{{3, 2}, {1, 6}, {-1, 6}, {-3, 2}};
  return {ok, "A2(2,1) at (t,t), B2(1,1) at (t,2t)"};
}

Outcome golden_invariants() {
  double worst = 0.0;
  std::string worst_name;
  double slowest = 0.0;
  for (double t : {0.3, 1.0}) {
    for (const auto& fn : {golden::a2_21, golden::b2_11, golden::g2_10}) {
      const auto start = std::chrono::steady_clock::now();
      const auto values = fn(t, {});
      slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      for (const auto& v : values) {
        const double e = golden::relative_error(v);
        if (!(e <= worst)) {
          worst = e;
          worst_name = fmt::format("{} at t={}", v.name, t);
        }
      }
    }
  }
  return {worst <= kGoldenTol && slowest < 1.0,
          fmt::format("max rel {:.2e} ({}), slowest {:.3f}s", worst, worst_name, slowest)};
}

Outcome residuals() {
  double worst = 0.0;
  std::string where;
  for (const auto& r : residual_reps())
    for (double t : kTs) {
      double rel = INFINITY;
      std::string name = "exception";
      try {
        const auto report = check_relations(build_representation(r.kind, r.hw, t), kResidualTol);
        rel = report.max_relative();
        name = report.worst().name;
      } catch (const Error& e) {
        name = e.what();
      }
      if (!(rel <= worst)) {
        worst = rel;
        where = fmt::format("{} t={} {}", label(r), t, name);
      }
    }
  return {worst <= kResidualTol, fmt::format("max rel {:.2e} at {}", worst, where)};
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  std::string where;
  int compared = 0;
  for (const auto& r : residual_reps()) {
    const auto rs = root_system(r.kind);
    if (dimension(rs, r.hw) > kOracleCap) continue;
    for (double t : kTs) {
      double dev = INFINITY;
      std::string note;
      try {
        const auto g = build_representation(r.kind, r.hw, t);
        const auto o = build_oracle(rs, r.hw, t, {kOracleCap});
        dev = compare_invariants(g, o, default_words(rs.rank));
      } catch (const Error& e) {
        note = e.what();
      }
      ++compared;
      if (!(dev <= worst)) {
        worst = dev;
        where = fmt::format("{} t={} {}", label(r), t, note);
      }
    }
  }
  return {worst <= kOracleTol, fmt::format("{} runs, max rel {:.2e} at {}", compared, worst, where)};
}

Outcome traces() {
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  double worst = 0.0;
  std::string where;
  for (const auto& r : residual_reps()) {
    const auto rs = root_system(r.kind);
    const auto ch = character(rs, r.hw);
    const auto g = build_representation(r.kind, r.hw, 0.3);
    for (int k = 0; k < 5; ++k) {
      std::array<double, 2> tau{dist(rng), rs.rank == 2 ? dist(rng) : 0.0};
      const double expected = ch.evaluate(tau);
      const double rel = std::abs(weight_trace(g, tau) - expected) / std::abs(expected);
      if (!(rel <= worst)) {
        worst = rel;
        where = label(r);
      }
    }
  }
  return {worst <= kTraceTol, fmt::format("max rel {:.2e} at {}", worst, where)};
}

Outcome classical_limit() {
  const auto ratio = [](AlgebraKind kind, Weight hw) {
    return classical_residual(build_representation(kind, hw, 2e-3)) /
           classical_residual(build_representation(kind, hw, 1e-3));
  };
  const double a2 = ratio(AlgebraKind::A2, {1, 1});
  const double b2_vector = ratio(AlgebraKind::B2, {0, 1});
  const double spinor = std::max(classical_residual(build_representation(AlgebraKind::B2, {1, 0}, 2e-3)),
                                 classical_residual(build_representation(AlgebraKind::B2, {1, 0}, 1e-3)));
  const bool ok = std::abs(a2 - kRatioTarget) <= kRatioBand && std::abs(b2_vector - kRatioTarget) <= kRatioBand &&
                  spinor < 1e-13;
  return {ok, fmt::format("A2(1,1) ratio {:.4f}, B2 5-dim (0,1) ratio {:.4f}, B2 spinor (1,0) residual {:.1e}", a2,
                          b2_vector, spinor)};
}

Outcome determinism() {
  const auto json = [](const Rep& r) {
    std::ostringstream out;
    write_json(out, build_representation(r.kind, r.hw, 0.3));
    return out.str();
  };
  bool identical = true;
  double worst = 0.0;
  for (const auto& r : residual_reps()) {
    identical = identical && json(r) == json(r);
    if (r.kind == AlgebraKind::A1 || r.kind == AlgebraKind::D2) continue;
    const auto rs = root_system(r.kind);
    const auto st = build_spectra(rs, character(rs, r.hw));
    for (double t : kTs) {
      const auto base = block_singular_values(solve_for(rs, st, t, {}));
      for (const SolveOptions& opts : {SolveOptions{1e-9, Gauge::Echelon, Execution::Serial, NodeOrder::Reverse},
                                       SolveOptions{1e-9, Gauge::Spectral, Execution::Parallel, NodeOrder::Reverse}}) {
        const auto other = block_singular_values(solve_for(rs, st, t, opts));
        for (std::size_t e = 0; e < base.size(); ++e)
          for (Eigen::Index k = 0; k < base[e].size(); ++k)
            worst = std::max(worst, std::abs(base[e][k] - other[e][k]) / std::max(1.0, base[e][k]));
      }
    }
  }
  return {identical && worst <= kSpectrumTol,
          fmt::format("JSON {}, max spectrum drift {:.2e}", identical ? "byte-identical" : "differs", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dimensions", dimensions},
      {"character reductions", reductions},
      {"golden invariants", golden_invariants},
      {"relation residuals", residuals},
      {"oracle equivalence", oracle_equivalence},
      {"trace vs character", traces},
      {"classical limit", classical_limit},
      {"determinism and gauge stability", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.passed) ++failures;
    std::cout << fmt::format("{} {} {}: {} [{:.2f}s]\n", outcome.passed ? "PASS" : "FAIL", k + 1, criteria[k].first,
                             outcome.detail, seconds);
  }
  return failures == 0 ? 0 : 1;
}
