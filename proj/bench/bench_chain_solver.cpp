#include <chrono>
#include <cstdio>
#include <vector>

#include <fmt/format.h>

#include "qrep/chain_solver.hpp"
#include "qrep/characters.hpp"
#include "qrep/spectra.hpp"

namespace {

struct Case {
  qrep::AlgebraKind kind;
  qrep::Weight hw;
};

double seconds_per_solve(const qrep::RootSystem& rs, const qrep::SpectraTable& st, qrep::Execution exec, int reps) {
  qrep::SolveOptions opts;
  opts.execution = exec;
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) {
    auto bs = qrep::solve_blocks(rs, st, 0.3, opts);
    if (bs.values.empty() && st.total_dim > 1) std::puts("empty");
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count() / reps;
}

}  // namespace

int main() {
  const std::vector<Case> cases{
      {qrep::AlgebraKind::A2, {4, 4}}, {qrep::AlgebraKind::A2, {6, 3}}, {qrep::AlgebraKind::B2, {3, 3}},
      {qrep::AlgebraKind::G2, {2, 1}}, {qrep::AlgebraKind::G2, {1, 2}},
  };
  fmt::print("{:<10} {:>6} {:>14} {:>14} {:>8}\n", "algebra", "dim", "serial [ms]", "parallel [ms]", "speedup");
  for (const auto& c : cases) {
    const auto rs = qrep::root_system(c.kind);
    const auto st = qrep::build_spectra(rs, qrep::character(rs, c.hw));
    const int reps = 5;
    const double serial = seconds_per_solve(rs, st, qrep::Execution::Serial, reps);
    const double parallel = seconds_per_solve(rs, st, qrep::Execution::Parallel, reps);
    fmt::print("{}({},{}) {:>6} {:>14.3f} {:>14.3f} {:>8.2f}\n", qrep::to_string(c.kind), c.hw[0], c.hw[1],
               st.total_dim, serial * 1e3, parallel * 1e3, serial / parallel);
  }
}
