#include "qrep/verifier.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qrep/errors.hpp"

namespace qrep {

double RelationReport::max_relative() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.relative);
  return m;
}

const RelationResidual& RelationReport::worst() const {
  if (entries.empty()) throw InternalError("empty relation report");
  return *std::max_element(entries.begin(), entries.end(),
                           [](const auto& a, const auto& b) { return a.relative < b.relative; });
}

namespace {

using Mat = Eigen::MatrixXd;

class Recorder {
 public:
  explicit Recorder(RelationReport& report) : report_(report) {}

  void add(std::string name, const Mat& residual, std::initializer_list<double> term_norms) {
    const double abs = residual.norm();
    const double scale = std::max(term_norms);
    const double rel = abs == 0.0 ? 0.0 : abs / std::max(scale, 1e-300);
    report_.entries.push_back({std::move(name), abs, rel});
  }

 private:
  RelationReport& report_;
};

}  // namespace

RelationReport check_relations(const GeneratorSet& g, double tol) {
  const auto rs = root_system(g.algebra);
  const int rank = rs.rank;
  const double t = g.t;
  const auto n = g.dim();
  const Mat id = Mat::Identity(n, n);
  RelationReport report;
  report.tol = tol;
  Recorder rec(report);

  std::array<Mat, 2> h, r, tp, tm, qp, qm;
  for (int i = 0; i < rank; ++i) {
    h[i] = g.h_matrix(i);
    r[i] = g.r_matrix(i);
    tp[i] = g.t_plus(i);
    tm[i] = g.t_minus(i);
    qp[i] = g.q_plus(i);
    qm[i] = g.q_minus(i);
  }
  auto w = [&](int i) { return rs.symmetrizers[i]; };
  auto kt = [&](int j, int i) { return rs.sym_cartan[j][i] * t; };

  for (int i = 0; i < rank; ++i) {
    rec.add(fmt::format("transpose X{}", i + 1), g.xp[i] - g.xm[i].transpose(), {g.xp[i].norm(), g.xm[i].norm()});
    for (int j = 0; j < rank; ++j) {
      const double k = rs.cartan[j][i];
      for (int sign : {1, -1}) {
        const Mat& x = sign > 0 ? g.xp[j] : g.xm[j];
        const Mat hx = h[i] * x;
        const Mat xh = x * h[i];
        rec.add(fmt::format("[h{}, X{}{}] = {}K X", i + 1, sign > 0 ? '+' : '-', j + 1, sign > 0 ? '+' : '-'),
                hx - xh - sign * k * x, {hx.norm(), xh.norm(), std::abs(k) * x.norm()});
      }
      const Mat pm = g.xp[i] * g.xm[j];
      const Mat mp = g.xm[j] * g.xp[i];
      Mat rhs = Mat::Zero(n, n);
      if (i == j) {
        for (Eigen::Index a = 0; a < n; ++a)
          rhs(a, a) = std::sinh(t * w(i) * g.h[i][a]) / std::sinh(w(i) * t);
      }
      rec.add(fmt::format("[X+{}, X-{}]", i + 1, j + 1), pm - mp - rhs, {pm.norm(), mp.norm(), rhs.norm()});
    }
  }

  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      for (int sign : {1, -1}) {
        const Mat& tj = sign > 0 ? tp[j] : tm[j];
        const double f = std::exp(sign * kt(j, i));
        const Mat lhs = r[i] * tj;
        const Mat rhs = f * tj * r[i];
        rec.add(fmt::format("R{} T{}{} conjugation", i + 1, sign > 0 ? '+' : '-', j + 1), lhs - rhs,
                {lhs.norm(), rhs.norm()});
      }
      const Mat a = std::exp(kt(j, i) / 2.0) * tp[i] * tm[j];
      const Mat b = std::exp(-kt(j, i) / 2.0) * tm[j] * tp[i];
      const Mat c = i == j ? Mat((r[i] * r[i] - id) / (2.0 * std::sinh(w(i) * t))) : Mat::Zero(n, n);
      rec.add(fmt::format("T+{} T-{} exchange", i + 1, j + 1), a - b - c, {a.norm(), b.norm(), c.norm()});
    }
  }

  for (int i = 0; i < rank; ++i) {
    const Mat a = std::exp(w(i) * t) * qp[i] * qm[i];
    const Mat b = std::exp(-w(i) * t) * qm[i] * qp[i];
    const Mat c = -id / (2.0 * std::sinh(w(i) * t));
    rec.add(fmt::format("Q{} quadratic", i + 1), a - b - c, {a.norm(), b.norm(), c.norm()});
  }
  if (rank == 2) {
    const int i = 0;
    const int j = 1;
    const double k = rs.sym_cartan[j][i];
    if (k != 0) {
      const double ep = std::exp(k * t / 2.0);
      const double em = std::exp(-k * t / 2.0);
      const Mat a = ep * (qp[i] * qm[j] - qp[j] * qm[i]);
      const Mat b = em * (qm[j] * qp[i] - qm[i] * qp[j]);
      rec.add("Q mixed antisymmetric", a - b, {a.norm(), b.norm()});
      const Mat c = ep * (qp[i] * qm[j] + qp[j] * qm[i]);
      const Mat d = em * (qm[j] * qp[i] + qm[i] * qp[j]);
      const Mat e = -std::sinh(k * t / 2.0) / (std::sinh(w(i) * t) * std::sinh(w(j) * t)) * r[i] * r[j];
      rec.add("Q mixed symmetric", c - d - e, {c.norm(), d.norm(), e.norm()});
    } else {
      for (auto [x, y] : {std::pair{0, 1}, std::pair{1, 0}}) {
        const Mat a = qp[x] * qm[y];
        const Mat b = qm[y] * qp[x];
        rec.add(fmt::format("[Q+{}, Q-{}]", x + 1, y + 1), a - b, {a.norm(), b.norm()});
      }
    }
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      for (int sign : {1, -1}) {
        const Mat& q = sign > 0 ? qp[j] : qm[j];
        const double f = std::exp(sign * kt(j, i));
        const Mat lhs = r[i] * q;
        const Mat a = f * q * r[i];
        const Mat b = -sign * (f - 1.0) * r[j] * r[i] / (2.0 * std::sinh(w(j) * t));
        rec.add(fmt::format("R{} Q{}{} exchange", i + 1, sign > 0 ? '+' : '-', j + 1), lhs - a - b,
                {lhs.norm(), a.norm(), b.norm()});
      }
    }
  }
  return report;
}

double classical_residual(const GeneratorSet& g) {
  const int rank = g.rank();
  double worst = 0.0;
  for (int i = 0; i < rank; ++i) {
    const Eigen::MatrixXd c = g.xp[i] * g.xm[i] - g.xm[i] * g.xp[i] - g.h_matrix(i);
    worst = std::max(worst, c.norm());
  }
  return worst;
}

Eigen::MatrixXd evaluate_word(const GeneratorSet& g, const Word& word) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(g.dim(), g.dim());
  for (Letter l : word.letters) {
    switch (l) {
      case Letter::XPlus1: m = m * g.xp[0]; break;
      case Letter::XMinus1: m = m * g.xm[0]; break;
      case Letter::XPlus2: m = m * g.xp[1]; break;
      case Letter::XMinus2: m = m * g.xm[1]; break;
      case Letter::H1: m = m * g.h[0].cast<double>().asDiagonal(); break;
      case Letter::H2: m = m * g.h[1].cast<double>().asDiagonal(); break;
      case Letter::ExpH1: m = m * g.h[0].cast<double>().array().exp().matrix().asDiagonal(); break;
      case Letter::ExpH2: m = m * g.h[1].cast<double>().array().exp().matrix().asDiagonal(); break;
    }
  }
  return m;
}

std::vector<Word> default_words(int rank) {
  using L = Letter;
  const L p1 = L::XPlus1, m1 = L::XMinus1, p2 = L::XPlus2, m2 = L::XMinus2;
  std::vector<Word> words{
      {"I", {}},
      {"X+1 X-1", {p1, m1}},
      {"X-1 X+1", {m1, p1}},
      {"(X+1 X-1)^2", {p1, m1, p1, m1}},
      {"X+1 X+1 X-1 X-1", {p1, p1, m1, m1}},
      {"h1 h1", {L::H1, L::H1}},
      {"h1 X+1 X-1", {L::H1, p1, m1}},
      {"exp h1", {L::ExpH1}},
      {"(X+1 X-1)^3", {p1, m1, p1, m1, p1, m1}},
  };
  if (rank == 2) {
    const std::vector<Word> mixed{
        {"X+2 X-2", {p2, m2}},
        {"X-2 X+2", {m2, p2}},
        {"(X+2 X-2)^2", {p2, m2, p2, m2}},
        {"X+1 X+2 X-2 X-1", {p1, p2, m2, m1}},
        {"X+2 X+1 X-1 X-2", {p2, p1, m1, m2}},
        {"X+1 X+2 X-1 X-2", {p1, p2, m1, m2}},
        {"X+1 X-1 X+2 X-2", {p1, m1, p2, m2}},
        {"h1 h2", {L::H1, L::H2}},
        {"h2 h2", {L::H2, L::H2}},
        {"exp h2", {L::ExpH2}},
        {"exp h1 X+2 X-2", {L::ExpH1, p2, m2}},
        {"h2 X+1 X-1 X+2 X-2", {L::H2, p1, m1, p2, m2}},
        {"X+1 X+1 X+2 X-2 X-1 X-1", {p1, p1, p2, m2, m1, m1}},
        {"X+1 X+2 X+1 X-1 X-2 X-1", {p1, p2, p1, m1, m2, m1}},
        {"X+2 X+1 X+2 X-2 X-1 X-2", {p2, p1, p2, m2, m1, m2}},
        {"X+2 X+1 X+1 X-1 X-1 X-2", {p2, p1, p1, m1, m1, m2}},
        {"X+1 X-1 X+2 X-2 X+1 X-1", {p1, m1, p2, m2, p1, m1}},
    };
    words.insert(words.end(), mixed.begin(), mixed.end());
  }
  return words;
}

double compare_invariants(const GeneratorSet& a, const GeneratorSet& b, const std::vector<Word>& words) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(fmt::format("dimensions differ: {} vs {}", a.dim(), b.dim()));
  const double floor = 1e-9 * a.dim();
  double worst = 0.0;
  for (const auto& word : words) {
    const double ta = evaluate_word(a, word).trace();
    const double tb = evaluate_word(b, word).trace();
    const double scale = std::max({std::abs(ta), std::abs(tb), floor});
    worst = std::max(worst, std::abs(ta - tb) / scale);
  }
  return worst;
}

double weight_trace(const GeneratorSet& g, std::array<double, 2> tau) {
  double sum = 0.0;
  for (int k = 0; k < g.dim(); ++k) sum += std::exp(tau[0] * g.h[0][k] + tau[1] * g.h[1][k]);
  return sum;
}

}  // namespace qrep
