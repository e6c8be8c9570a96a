#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bsfan/rational.hpp"

namespace bsfan {

using Multidegree = std::vector<int>;

struct MultiCell {
  int i = 0;
  Multidegree alpha;
  friend auto operator<=>(const MultiCell&, const MultiCell&) = default;
};

/// Sparse Z^m-graded table; zeros are never stored.
class MultiBettiTable {
 public:
  using Map = std::map<MultiCell, Rational>;

  /// Throws ValidationError when m < 1.
  explicit MultiBettiTable(int m);

  int m() const { return m_; }
  /// Throws ValidationError when alpha has the wrong length.
  Rational at(int i, const Multidegree& alpha) const;
  void set(int i, const Multidegree& alpha, const Rational& value);
  void add(int i, const Multidegree& alpha, const Rational& delta);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool is_nonnegative() const;
  /// Precondition: !empty().
  int min_column() const;
  int max_column() const;

  friend bool operator==(const MultiBettiTable&, const MultiBettiTable&) = default;

 private:
  void check_rank(const Multidegree& alpha) const;
  int m_;
  Map entries_;
};

/// Total order on Z^m: positive weighted sum first, then lexicographic.
class GradedOrder {
 public:
  /// Throws ValidationError unless every weight is > 0.
  explicit GradedOrder(std::vector<int> weights);
  static GradedOrder uniform(int m) { return GradedOrder(std::vector<int>(static_cast<std::size_t>(m), 1)); }

  const std::vector<int>& weights() const { return weights_; }
  std::strong_ordering compare(const Multidegree& a, const Multidegree& b) const;

 private:
  std::vector<int> weights_;
};

std::strong_ordering order_compare(const GradedOrder& o, const Multidegree& a, const Multidegree& b);

/// chi_{i,alpha}(B) = sum_{g < alpha} B_{i,g} - sum_{g <= alpha} B_{i+1,g}
///                  + sum_{l > i+1} (-1)^{l-i} sum_g B_{l,g}.
Rational multi_chi(const MultiBettiTable& table, int i, const Multidegree& alpha, const GradedOrder& o);

/// Index box on which multi_chi is checked: alpha over the support box padded
/// by one in every coordinate, i from min column - 3 to max column.
struct MultiChiWindow {
  int i_lo = 0, i_hi = -1;
  Multidegree alpha_lo, alpha_hi;
};
MultiChiWindow multi_chi_window(const MultiBettiTable& table);

struct MultiChiValue {
  int i = 0;
  Multidegree alpha;
  Rational value;
};
/// Every point of the window with a negative value, in (i, alpha) order.
std::vector<MultiChiValue> multi_chi_negatives(const MultiBettiTable& table, const GradedOrder& o);
std::optional<MultiChiValue> multi_chi_min(const MultiBettiTable& table, const GradedOrder& o);

/// gamma(q, alpha) = h^q(E(alpha)).
using MultiEvaluator = std::function<Rational(int q, const Multidegree& alpha)>;

/// result_{i,alpha} = sum_{0 <= q <= qmax} B_{i+q,alpha} * gamma(q, -alpha).
MultiBettiTable multi_pair(const MultiBettiTable& table, const MultiEvaluator& gamma, int qmax);

/// Direct sum of line bundles on P^{n_1} x ... x P^{n_r}.
struct ProductSpace {
  struct Summand {
    Multidegree twist;
    Rational mult = 1;
  };
  std::vector<int> factor_dims;
  std::vector<Summand> summands;

  /// Throws ValidationError on a factor of dimension < 1, a twist of the
  /// wrong length or a negative multiplicity.
  void validate() const;
  int total_dim() const;
};

/// sum over summands of sum_{q_1+...+q_r = q} prod_t h^{q_t}(P^{n_t}, O(alpha_t + c_t)).
Rational kunneth_gamma(const ProductSpace& x, int q, const Multidegree& alpha);

/// multi_pair with the Kunneth evaluator and qmax = sum of the factor dimensions.
MultiBettiTable multi_pair(const MultiBettiTable& table, const ProductSpace& x);

}  // namespace bsfan
