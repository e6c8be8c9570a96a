#pragma once

#include <vector>

#include "bsfan/cone_a.hpp"
#include "bsfan/diagrams.hpp"
#include "bsfan/table.hpp"

namespace bsfan {

/// Betti table over S (ambient P^n) together with a cohomology evaluator.
struct PairingInput {
  BettiTable betti;
  CohomologyEvaluator sheaf;
  int n = 0;
};

/// Betti table over A of F . E:
///   result_{i,j} = sum_{p - q = i, 0 <= q <= n} betti_{p,j} * gamma(q, -j).
/// Throws ValidationError when the sheaf's ambient differs from n, and
/// RangeError listing every missing (q, j) for an out-of-range window.
BettiTable pair(const PairingInput& in);
BettiTable pair(const BettiTable& betti, const CohomologyEvaluator& sheaf, int n);

/// Whether the pure diagram of d paired with a supernatural sheaf of type f
/// is nonzero at (i, j): some position p has d_p = j and
/// f_{p-i} > -j > f_{p-i+1}, with f_0 = +inf and f_{s+1} = -inf.
bool pure_pair_support(const DegreeSequence& d, const std::vector<int>& roots, int i, int j);

/// The Eisenbud-Schreyer functional <B, E>_{tau,kappa}, computed as
/// chi_{0,nu}(B . E) with nu = min(max(kappa, -f_tau - 1), -f_{tau+1} - 1).
Rational es_functional(const BettiTable& table, const std::vector<int>& roots, const Rational& rank_scale, int n,
                       int tau, int kappa);
/// The nu above (f_{s+1} = -inf drops the upper bound when tau = s).
int es_nu(const std::vector<int>& roots, int tau, int kappa);

/// Pairs `table` against every sheaf and checks membership of each result in
/// B^1(A). Results keep the order of `sheaves`.
std::vector<Verdict> pair_check(const BettiTable& table, const std::vector<CohomologyEvaluator>& sheaves, int n,
                                bool widen = false);

}  // namespace bsfan
