#include "qrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <unordered_map>

#include <fmt/format.h>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

// A lowering word X-_{l_0} X-_{l_1} ... X-_{l_{k-1}} v, letters in {0, 1},
// packed as length in the top byte and letter bits below.
using Packed = std::uint64_t;

constexpr int kMaxLength = 56;

int length(Packed w) { return static_cast<int>(w >> 56); }
int letter(Packed w, int pos) { return static_cast<int>((w >> pos) & 1U); }

Packed make_word(const std::vector<int>& letters) {
  Packed w = static_cast<Packed>(letters.size()) << 56;
  for (std::size_t p = 0; p < letters.size(); ++p) w |= static_cast<Packed>(letters[p]) << p;
  return w;
}

std::vector<int> unpack(Packed w) {
  std::vector<int> out(length(w));
  for (int p = 0; p < length(w); ++p) out[p] = letter(w, p);
  return out;
}

Packed prepend(int first, Packed rest) {
  auto letters = unpack(rest);
  letters.insert(letters.begin(), first);
  return make_word(letters);
}

struct PairHash {
  std::size_t operator()(const std::pair<Packed, Packed>& p) const {
    return std::hash<Packed>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

/// Value of the form together with the same recursion run on absolute
/// values, which bounds the size of the terms that cancel in the value.
struct FormValue {
  double value = 0.0;
  double magnitude = 0.0;
};

class ContravariantForm {
 public:
  ContravariantForm(const RootSystem& rs, const Weight& hw, double t) : rs_(rs), hw_(hw), t_(t) {}

  double operator()(Packed u, Packed w) { return evaluate(u, w).value; }

  // <u v, w v> with X+_i the adjoint of X-_i and <v, v> = 1.
  FormValue evaluate(Packed u, Packed w) {
    if (length(u) != length(w)) return {};
    if (length(u) == 0) return {1.0, 1.0};
    const auto key = std::make_pair(u, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int i = letter(u, 0);
    const auto rest_u = unpack(u);
    const Packed u_tail = make_word({rest_u.begin() + 1, rest_u.end()});
    const auto letters = unpack(w);
    const int len = static_cast<int>(letters.size());
    // X+_i X-_{w_0} ... X-_{w_{k-1}} v: each X-_i it passes contributes
    // [h_i] evaluated on the weight of the suffix to its right.
    std::vector<Weight> suffix_weight(len + 1);
    suffix_weight[len] = hw_;
    for (int p = len - 1; p >= 0; --p) {
      const Weight a = rs_.simple_root(letters[p]);
      suffix_weight[p] = {suffix_weight[p + 1][0] - a[0], suffix_weight[p + 1][1] - a[1]};
    }
    FormValue sum;
    for (int p = 0; p < len; ++p) {
      if (letters[p] != i) continue;
      const int hval = suffix_weight[p + 1][i];
      const int wi = rs_.symmetrizers[i];
      const double qn = std::sinh(wi * t_ * hval) / std::sinh(wi * t_);
      if (qn == 0.0) continue;
      std::vector<int> removed = letters;
      removed.erase(removed.begin() + p);
      const FormValue sub = evaluate(u_tail, make_word(removed));
      sum.value += qn * sub.value;
      sum.magnitude += std::abs(qn) * sub.magnitude;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  const RootSystem& rs_;
  Weight hw_;
  double t_;
  std::unordered_map<std::pair<Packed, Packed>, FormValue, PairHash> memo_;
};

struct WeightSpace {
  Weight weight;
  std::vector<Packed> words;
  Eigen::MatrixXd gram;
  /// L^{-1} with gram = L L^T; row k gives the orthonormal vector e_k in words.
  Eigen::MatrixXd inv_chol;
  int offset = 0;
};

}  // namespace

GeneratorSet build_oracle(const RootSystem& rs, const Weight& hw, double t, const OracleOptions& opts) {
  if (!(t > 0.0)) throw InvalidParameter("deformation parameter must be positive");
  for (int i = 0; i < rs.rank; ++i)
    if (hw[i] < 0) throw InvalidParameter("highest weight must be dominant");
  if (rs.rank == 1 && hw[1] != 0) throw InvalidParameter("rank-one weight has a second component");

  ContravariantForm form(rs, hw, t);
  std::map<Weight, WeightSpace> spaces;
  spaces[hw] = {hw, {make_word({})}, Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Ones(1, 1), 0};
  std::vector<Weight> frontier{hw};
  int total = 1;

  for (int depth = 1; !frontier.empty(); ++depth) {
    if (depth > kMaxLength) throw CapExceeded("lowering words exceed the supported length");
    // Candidate X-_i u_b for every kept word u_b one step above, with its origin.
    struct Candidate {
      Packed word;
      int root;
      int parent_index;
    };
    std::map<Weight, std::vector<Candidate>> candidates;
    for (const auto& mu : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        const Weight a = rs.simple_root(i);
        const Weight below{mu[0] - a[0], mu[1] - a[1]};
        const auto& parent = spaces.at(mu).words;
        for (std::size_t b = 0; b < parent.size(); ++b)
          candidates[below].push_back({prepend(i, parent[b]), i, static_cast<int>(b)});
      }
    }
    std::vector<Weight> next;
    for (auto& [nu, cands] : candidates) {
      const auto m = static_cast<Eigen::Index>(cands.size());
      Eigen::MatrixXd gram(m, m);
      Eigen::MatrixXd magnitude(m, m);
      for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b) {
          const FormValue v = form.evaluate(cands[a].word, cands[b].word);
          gram(a, b) = gram(b, a) = v.value;
          magnitude(a, b) = magnitude(b, a) = v.magnitude;
        }

      // Rewrite the candidates as X-_i e_k with e_k orthonormal one step above.
      // This Gram is well scaled, so null vectors show up at roundoff level.
      Eigen::MatrixXd to_frame = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) {
          if (cands[r].root != cands[c].root) continue;
          const Weight a = rs.simple_root(cands[r].root);
          const auto& parent = spaces.at({nu[0] + a[0], nu[1] + a[1]});
          to_frame(r, c) = parent.inv_chol(cands[r].parent_index, cands[c].parent_index);
        }
      const Eigen::MatrixXd framed = to_frame * gram * to_frame.transpose();
      // A space outside the module leaves only cancellation noise, small next
      // to the terms it was summed from.
      const Eigen::MatrixXd framed_magnitude = to_frame.cwiseAbs() * magnitude * to_frame.cwiseAbs().transpose();
      const double noise_scale = framed_magnitude.diagonal().maxCoeff();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(framed, Eigen::EigenvaluesOnly);
      const double top = full.eigenvalues().maxCoeff();
      if (top <= 1e3 * std::numeric_limits<double>::epsilon() * noise_scale) continue;
      if (top <= opts.ambiguity_floor * noise_scale)
        throw NumericalRankAmbiguity(
            fmt::format("weight ({},{}) is too close to the null space of the form", nu[0], nu[1]));
      const Eigen::MatrixXd normalized = framed / top;

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normalized, Eigen::EigenvaluesOnly);
      int rank = 0;
      for (double ev : eig.eigenvalues()) {
        if (ev < -opts.rank_tol)
          throw InternalError(fmt::format("contravariant form is negative ({:.3g}) at weight ({},{})", ev, nu[0], nu[1]));
        if (ev > opts.ambiguity_floor && ev <= opts.rank_tol)
          throw NumericalRankAmbiguity(fmt::format("eigenvalue {:.3g} at weight ({},{}) is too close to the rank cut",
                                                   ev, nu[0], nu[1]));
        if (ev > opts.rank_tol) ++rank;
      }
      if (rank == 0) continue;

      // Words are kept as the basis, so pick them from the raw Gram scaled by
      // the norms of the parent words, with diagonal pivoting.
      Eigen::VectorXd parent_norm(m);
      for (Eigen::Index c = 0; c < m; ++c) {
        const Weight a = rs.simple_root(cands[c].root);
        const auto& parent = spaces.at({nu[0] + a[0], nu[1] + a[1]});
        parent_norm[c] = std::sqrt(parent.gram(cands[c].parent_index, cands[c].parent_index));
      }
      Eigen::MatrixXd schur = parent_norm.cwiseInverse().asDiagonal() * gram * parent_norm.cwiseInverse().asDiagonal();
      const double schur_scale = schur.diagonal().maxCoeff();
      std::vector<Eigen::Index> kept;
      std::vector<bool> used(m, false);
      for (int r = 0; r < rank; ++r) {
        Eigen::Index best = -1;
        for (Eigen::Index c = 0; c < m; ++c)
          if (!used[c] && (best == -1 || schur(c, c) > schur(best, best))) best = c;
        if (schur(best, best) <= opts.rank_tol * schur_scale) break;
        used[best] = true;
        kept.push_back(best);
        const Eigen::VectorXd col = schur.col(best) / std::sqrt(schur(best, best));
        schur -= col * col.transpose();
      }
      std::sort(kept.begin(), kept.end());
      if (static_cast<int>(kept.size()) != rank)
        throw NumericalRankAmbiguity(fmt::format("could not select {} independent vectors at weight ({},{})", rank,
                                                 nu[0], nu[1]));
      WeightSpace space;
      space.weight = nu;
      for (auto c : kept) space.words.push_back(cands[c].word);
      space.gram.resize(rank, rank);
      for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) space.gram(a, b) = gram(kept[a], kept[b]);
      Eigen::LLT<Eigen::MatrixXd> llt(space.gram);
      if (llt.info() != Eigen::Success) throw InternalError("Gram matrix of kept vectors is not positive definite");
      Eigen::MatrixXd l = llt.matrixL();
      space.inv_chol = l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(rank, rank));
      total += rank;
      if (total > opts.cap)
        throw CapExceeded(fmt::format("representation dimension exceeds the cap of {}", opts.cap));
      spaces[nu] = std::move(space);
      next.push_back(nu);
    }
    frontier = std::move(next);
  }

  // Basis order: Q exponent descending, class exponent descending.
  std::vector<Weight> order;
  for (const auto& [w, s] : spaces) order.push_back(w);
  const int k = rs.class_root;
  auto level_exp = [&](const Weight& w) { return rs.grading[0] * w[0] + rs.grading[1] * w[1]; };
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    if (level_exp(a) != level_exp(b)) return level_exp(a) > level_exp(b);
    return a[k] > b[k];
  });

  GeneratorSet g = zero_generators(rs.kind, hw, t, total);
  int offset = 0;
  int level = 0;
  int last_level_exp = 0;
  for (const auto& w : order) {
    auto& space = spaces.at(w);
    space.offset = offset;
    if (offset == 0 || level_exp(w) != last_level_exp) ++level;
    last_level_exp = level_exp(w);
    for (std::size_t c = 0; c < space.words.size(); ++c) {
      g.basis.push_back({level, rs.symmetrizers[k] * w[k], static_cast<int>(c), w});
      g.h[0][offset] = w[0];
      g.h[1][offset] = w[1];
      ++offset;
    }
  }

  // <f_a, X-_i e_b> with e = L^{-1} u above and f = L'^{-1} u' below, using
  // <u'_j, X-_i u_c> = <u'_j, (i, u_c)>.
  for (const auto& [mu, upper] : spaces) {
    for (int i = 0; i < rs.rank; ++i) {
      const Weight a = rs.simple_root(i);
      auto it = spaces.find({mu[0] - a[0], mu[1] - a[1]});
      if (it == spaces.end()) continue;
      const auto& lower = it->second;
      Eigen::MatrixXd raw(lower.words.size(), upper.words.size());
      for (std::size_t j = 0; j < lower.words.size(); ++j)
        for (std::size_t c = 0; c < upper.words.size(); ++c) raw(j, c) = form(lower.words[j], prepend(i, upper.words[c]));
      const Eigen::MatrixXd block = lower.inv_chol * raw * upper.inv_chol.transpose();
      g.xm[i].block(lower.offset, upper.offset, block.rows(), block.cols()) = block;
    }
  }
  for (int i = 0; i < rs.rank; ++i) g.xp[i] = g.xm[i].transpose();
  return g;
}

}  // namespace qrep
