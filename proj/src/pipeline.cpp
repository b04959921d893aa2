#include "qrep/pipeline.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "qrep/assembler.hpp"
#include "qrep/characters.hpp"
#include "qrep/errors.hpp"
#include "qrep/rank_one.hpp"
#include "qrep/spectra.hpp"

namespace qrep {

GeneratorSet build_representation(AlgebraKind algebra, const Weight& hw, double t, const SolveOptions& opts) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("deformation parameter must be positive");
  const auto rs = root_system(algebra);
  require_dominant(rs, hw);
  GeneratorSet g;
  switch (rs.kind) {
    case AlgebraKind::A1: g = build_a1(hw[0], t); break;
    case AlgebraKind::D2: g = build_d2(hw, t); break;
    default: {
      const auto st = build_spectra(rs, character(rs, hw));
      spdlog::debug("{} ({},{}): dimension {}, {} levels", to_string(rs.kind), hw[0], hw[1], st.total_dim,
                   st.levels.size());
      const auto bs = solve_for(rs, st, t, opts);
      g = to_generators(assemble_sr(bs), st, t);
    }
  }
  g.algebra = algebra;
  return g;
}

}  // namespace qrep
