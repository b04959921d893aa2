#pragma once

#include <iosfwd>
#include <string>

#include "qrep/generator_set.hpp"

namespace qrep {

/// Sparse JSON export; values carry 17 significant digits so doubles survive
/// a round trip exactly.
void write_json(std::ostream& out, const GeneratorSet& g);
GeneratorSet read_json(std::istream& in);

/// Dense CSV, one block per matrix preceded by a "# name" line.
void write_csv(std::ostream& out, const GeneratorSet& g);
/// One file per matrix: <prefix>_xp1.csv and so on.
void write_csv_files(const std::string& prefix, const GeneratorSet& g);

}  // namespace qrep
