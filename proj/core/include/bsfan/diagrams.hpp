#pragma once

#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "bsfan/rational.hpp"
#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

namespace bsfan {

/// Pure Betti diagram of type d, normalized to the smallest positive integer
/// vector. Entry at (k, d_k) is proportional to prod_{m != k} 1/|d_m - d_k|.
/// Throws ValidationError when codim(d) > n + 1 (pass n < 0 to skip the check).
BettiTable pure_diagram(const DegreeSequence& d, int n = -1);

/// Cohomology table data of a supernatural sheaf of type `roots` on P^n.
class SupernaturalSheaf {
 public:
  /// Throws ValidationError unless roots strictly decrease, rank_scale > 0 and
  /// roots.size() <= n.
  SupernaturalSheaf(std::vector<int> roots, Rational rank_scale, int n);

  const std::vector<int>& roots() const { return roots_; }
  const Rational& rank_scale() const { return rank_scale_; }
  int ambient() const { return n_; }
  int dimension() const { return static_cast<int>(roots_.size()); }

  /// h^q(E(j)). At most one q is nonzero for each j: the index q0 with
  /// f_{q0} > j > f_{q0+1} (f_0 = +inf, f_{s+1} = -inf); zero when j is a root.
  Rational gamma(int q, int j) const;
  /// The unique q0 above, or -1 when j is a root.
  int nonvanishing_row(int j) const;

 private:
  std::vector<int> roots_;
  Rational rank_scale_;
  int n_;
  Rational magnitude_scale_;  // rank_scale / s!
};

/// Explicit finite piece of a cohomology table, valid for j in [jmin, jmax].
struct CohomologyWindow {
  int dim = 0;
  int jmin = 0;
  int jmax = -1;
  std::map<std::pair<int, int>, Rational> values;  // (q, j) -> value
};

class CohomologyEvaluator;

struct FormalTerm {
  Rational coeff;
  std::shared_ptr<const CohomologyEvaluator> evaluator;
};

/// Finite signed combination of evaluators.
struct FormalCombination {
  std::vector<FormalTerm> terms;
};

/// Exact evaluator gamma(q, j) = h^q(E(j)) for one sheaf class.
class CohomologyEvaluator {
 public:
  using Kind = std::variant<SupernaturalSheaf, CohomologyWindow, FormalCombination>;

  CohomologyEvaluator(SupernaturalSheaf s) : kind_(std::move(s)) {}
  /// Throws ValidationError on negative values or values outside [jmin, jmax].
  CohomologyEvaluator(CohomologyWindow w);
  CohomologyEvaluator(FormalCombination f) : kind_(std::move(f)) {}

  /// Throws RangeError when a window evaluator is queried outside its range.
  Rational gamma(int q, int j) const;
  /// True iff gamma(q, j) would not throw.
  bool defined_at(int j) const;
  int dimension() const;
  /// Ambient n for supernatural sheaves (and formal combinations of them);
  /// -1 when the evaluator carries no ambient.
  int ambient() const;

  const Kind& kind() const { return kind_; }

 private:
  Kind kind_;
};

/// O_{P^n}(a) as the supernatural sheaf with roots (-a-1, ..., -a-n), r = 1.
CohomologyEvaluator twist_evaluator(int n, int a);

}  // namespace bsfan
