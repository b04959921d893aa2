#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qrep/generator_set.hpp"

namespace qrep {

struct RelationResidual {
  std::string name;
  double absolute = 0.0;
  /// Absolute residual over the largest norm among the relation's terms.
  double relative = 0.0;
};

struct RelationReport {
  std::vector<RelationResidual> entries;
  double tol = 0.0;

  double max_relative() const;
  const RelationResidual& worst() const;
  bool passed() const { return max_relative() <= tol; }
};

/// Residuals of every defining relation: the Cartan action, the ladder
/// commutators, the R/T form and the five Q+-/R rows, each in all index
/// combinations that apply to the algebra.
RelationReport check_relations(const GeneratorSet& g, double tol);

/// max_i || [X+_i, X-_i] - h_i ||, which vanishes in the classical limit.
double classical_residual(const GeneratorSet& g);

enum class Letter { XPlus1, XMinus1, XPlus2, XMinus2, H1, H2, ExpH1, ExpH2 };

struct Word {
  std::string name;
  std::vector<Letter> letters;  ///< multiplied left to right
};

Eigen::MatrixXd evaluate_word(const GeneratorSet& g, const Word& word);

/// Fixed list of words whose traces are compared between constructions.
std::vector<Word> default_words(int rank);

/// Largest relative gap |tr w(a) - tr w(b)| / max(|tr w(a)|, |tr w(b)|, 1e-9 N)
/// over the words. Throws DimensionMismatch on different sizes.
double compare_invariants(const GeneratorSet& a, const GeneratorSet& b, const std::vector<Word>& words);

/// Trace of exp(tau_1 h_1 + tau_2 h_2).
double weight_trace(const GeneratorSet& g, std::array<double, 2> tau);

}  // namespace qrep
