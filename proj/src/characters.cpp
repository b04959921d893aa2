#include "qrep/characters.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qrep/errors.hpp"

namespace qrep {

WeightPolynomial::WeightPolynomial(Terms terms) {
  for (const auto& [w, c] : terms) add(w, c);
}

void WeightPolynomial::add(const Weight& exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

long long WeightPolynomial::coefficient(const Weight& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

long long WeightPolynomial::total_mass() const {
  long long sum = 0;
  for (const auto& [w, c] : terms_) sum += c;
  return sum;
}

double WeightPolynomial::evaluate(std::array<double, 2> tau) const {
  double sum = 0.0;
  for (const auto& [w, c] : terms_)
    sum += static_cast<double>(c) * std::exp(tau[0] * w[0] + tau[1] * w[1]);
  return sum;
}

WeightPolynomial WeightPolynomial::transformed(const IntMatrix2& w) const {
  WeightPolynomial out;
  for (const auto& [e, c] : terms_) out.add(apply(w, e), c);
  return out;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
  WeightPolynomial out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add({wa[0] + wb[0], wa[1] + wb[1]}, ca * cb);
  return out;
}

WeightPolynomial weyl_alternant(const RootSystem& rs, const Weight& weight) {
  WeightPolynomial out;
  for (const auto& [w, sign] : weyl_orbit(rs, weight)) out.add(w, sign);
  return out;
}

namespace {

// Monomial order: (n1 + n2, n1), lexicographic. It is additive, so the leading
// term of a product is the product of leading terms.
using OrderKey = std::pair<int, int>;

OrderKey order_key(const Weight& w) { return {w[0] + w[1], w[0]}; }
Weight from_key(const OrderKey& k) { return {k.second, k.first - k.second}; }
OrderKey operator-(const OrderKey& a, const OrderKey& b) { return {a.first - b.first, a.second - b.second}; }

}  // namespace

WeightPolynomial divide_exact(const WeightPolynomial& numerator, const WeightPolynomial& denominator) {
  if (denominator.empty()) throw InternalError("division by the zero polynomial");
  if (numerator.empty()) return {};

  std::map<OrderKey, long long> rem;
  for (const auto& [w, c] : numerator.terms()) rem[order_key(w)] += c;
  std::map<OrderKey, long long> den;
  for (const auto& [w, c] : denominator.terms()) den[order_key(w)] += c;

  const auto [lead_key, lead_coef] = *den.rbegin();
  const OrderKey floor = rem.begin()->first - den.begin()->first;

  WeightPolynomial quotient;
  while (!rem.empty()) {
    const auto [top_key, top_coef] = *rem.rbegin();
    const OrderKey q_key = top_key - lead_key;
    if (q_key < floor || top_coef % lead_coef != 0)
      throw InternalError("Weyl alternant division left a remainder");
    const long long q_coef = top_coef / lead_coef;
    quotient.add(from_key(q_key), q_coef);
    for (const auto& [k, c] : den) {
      OrderKey target{q_key.first + k.first, q_key.second + k.second};
      auto& slot = rem[target];
      slot -= q_coef * c;
      if (slot == 0) rem.erase(target);
    }
  }
  return quotient;
}

void require_dominant(const RootSystem& rs, const Weight& hw) {
  for (int i = 0; i < rs.rank; ++i)
    if (hw[i] < 0) throw InvalidParameter("highest weight must be dominant");
  if (rs.rank == 1 && hw[1] != 0) throw InvalidParameter("rank-one weight has a second component");
}

WeightPolynomial character(const RootSystem& rs, const Weight& hw) {
  require_dominant(rs, hw);
  const Weight shifted{hw[0] + rs.rho[0], hw[1] + rs.rho[1]};
  return divide_exact(weyl_alternant(rs, shifted), weyl_alternant(rs, rs.rho));
}

long long dimension(const RootSystem& rs, const Weight& hw) {
  require_dominant(rs, hw);
  // (lambda, alpha^v) / (rho, alpha^v) reduces to sum_i c_i w_i lambda_i over
  // sum_i c_i w_i rho_i; the common factor 2/(alpha, alpha) cancels.
  long long num = 1;
  long long den = 1;
  for (const auto& c : rs.positive_roots) {
    long long a = 0;
    long long b = 0;
    for (int i = 0; i < rs.rank; ++i) {
      a += static_cast<long long>(c[i]) * rs.symmetrizers[i] * (hw[i] + rs.rho[i]);
      b += static_cast<long long>(c[i]) * rs.symmetrizers[i] * rs.rho[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula is not integral");
  return num / den;
}

std::map<int, long long> reduce_to_a1(const WeightPolynomial& ch, std::array<int, 2> direction) {
  std::map<int, long long> hist;
  for (const auto& [w, c] : ch.terms()) hist[w[0] * direction[0] + w[1] * direction[1]] += c;
  return hist;
}

}  // namespace qrep
