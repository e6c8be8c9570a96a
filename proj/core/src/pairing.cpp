#include "bsfan/pairing.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace bsfan {

BettiTable pair(const BettiTable& betti, const CohomologyEvaluator& sheaf, int n) {
  if (n < 0) throw ValidationError("ambient dimension must be >= 0");
  if (sheaf.ambient() >= 0 && sheaf.ambient() != n)
    throw ValidationError("sheaf lives on P^" + std::to_string(sheaf.ambient()) + " but the table is over P^" +
                          std::to_string(n));

  std::set<int> missing_j;
  for (const auto& [cell, _] : betti.entries())
    if (!sheaf.defined_at(-cell.j)) missing_j.insert(-cell.j);
  if (!missing_j.empty()) {
    std::string list;
    for (int j : missing_j)
      for (int q = 0; q <= n; ++q) list += (list.empty() ? "" : ", ") + ("(" + std::to_string(q) + "," + std::to_string(j) + ")");
    throw RangeError("cohomology evaluator undefined at (q,j) = " + list);
  }

  BettiTable out;
  for (const auto& [cell, value] : betti.entries())
    for (int q = 0; q <= n; ++q) {
      Rational g = sheaf.gamma(q, -cell.j);
      if (g != 0) out.add(cell.i - q, cell.j, value * g);
    }
  return out;
}

BettiTable pair(const PairingInput& in) { return pair(in.betti, in.sheaf, in.n); }

bool pure_pair_support(const DegreeSequence& d, const std::vector<int>& roots, int i, int j) {
  const int s = static_cast<int>(roots.size());
  // f_k with the +inf / -inf conventions, as (rank, value) pairs.
  auto f = [&](int k) -> std::pair<int, long> {
    if (k <= 0) return {2, 0};
    if (k > s) return {0, 0};
    return {1, roots[static_cast<std::size_t>(k - 1)]};
  };
  for (int p = d.start(); p <= d.end(); ++p) {
    if (d.at(p) != j) continue;
    const int q = p - i;
    if (q < 0 || q > s) continue;
    const std::pair<int, long> minus_j{1, -static_cast<long>(j)};
    if (f(q) > minus_j && minus_j > f(q + 1)) return true;
  }
  return false;
}

int es_nu(const std::vector<int>& roots, int tau, int kappa) {
  const int s = static_cast<int>(roots.size());
  if (tau < 1 || tau > s) throw ValidationError("tau must lie in [1, " + std::to_string(s) + "]");
  int nu = std::max(kappa, -roots[static_cast<std::size_t>(tau - 1)] - 1);
  if (tau < s) nu = std::min(nu, -roots[static_cast<std::size_t>(tau)] - 1);
  return nu;
}

Rational es_functional(const BettiTable& table, const std::vector<int>& roots, const Rational& rank_scale, int n,
                       int tau, int kappa) {
  const int nu = es_nu(roots, tau, kappa);
  return chi(pair(table, SupernaturalSheaf(roots, rank_scale, n), n), 0, nu);
}

std::vector<Verdict> pair_check(const BettiTable& table, const std::vector<CohomologyEvaluator>& sheaves, int n,
                                bool widen) {
  const auto all_one = CodimensionSequence::constant(CodimValue::finite(1), 0);
  std::vector<Verdict> out;
  out.reserve(sheaves.size());
  for (const auto& sheaf : sheaves) out.push_back(membership_a(pair(table, sheaf, n), all_one, widen));
  return out;
}

}  // namespace bsfan
