#pragma once

#include <optional>
#include <vector>

#include "bsfan/diagrams.hpp"
#include "bsfan/rational.hpp"
#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

// Slow, independent reimplementations used to cross-check the library.

namespace bsfan::oracle {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination. Returns the unique solution of A x = b, or
/// nullopt when the system is inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_exact(Matrix a, std::vector<Rational> b);

/// Pure diagram from the Herzog-Kuhl equations sum_p (-1)^p beta_p d_p^m = 0,
/// m = 0..l-1, scaled to the smallest positive integer vector.
BettiTable herzog_kuhl_pure(const DegreeSequence& d);

/// Binomial coefficient C(top, k) with C = 0 for top < k.
Integer binomial(long top, long k);

/// h^q(P^n, O(a)) from the binomial formulas.
Rational line_bundle_cohomology(int n, int q, int a);

/// The pairing convolution written as a loop over result cells.
BettiTable pair_by_cells(const BettiTable& betti, const CohomologyEvaluator& sheaf, int n);

/// chi_{i,j} as a dot product with an explicit weight function.
Rational chi_by_weights(const BettiTable& table, int i, int j);

/// Coefficients of table along a fixed chain by solving the full linear
/// system over every cell; nullopt when not uniquely solvable.
std::optional<std::vector<Rational>> chain_coefficients(const BettiTable& table,
                                                        const std::vector<DegreeSequence>& chain);

}  // namespace bsfan::oracle
