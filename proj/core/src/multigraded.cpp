#include "bsfan/multigraded.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bsfan/diagrams.hpp"
#include "bsfan/errors.hpp"

namespace bsfan {

MultiBettiTable::MultiBettiTable(int m) : m_(m) {
  if (m < 1) throw ValidationError("grading rank m must be >= 1");
}

void MultiBettiTable::check_rank(const Multidegree& alpha) const {
  if (static_cast<int>(alpha.size()) != m_)
    throw ValidationError("multidegree of length " + std::to_string(alpha.size()) + " in a table graded by Z^" +
                          std::to_string(m_));
}

Rational MultiBettiTable::at(int i, const Multidegree& alpha) const {
  check_rank(alpha);
  auto it = entries_.find(MultiCell{i, alpha});
  return it == entries_.end() ? Rational(0) : it->second;
}

void MultiBettiTable::set(int i, const Multidegree& alpha, const Rational& value) {
  check_rank(alpha);
  if (value == 0)
    entries_.erase(MultiCell{i, alpha});
  else
    entries_[MultiCell{i, alpha}] = value;
}

void MultiBettiTable::add(int i, const Multidegree& alpha, const Rational& delta) {
  check_rank(alpha);
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace(MultiCell{i, alpha}, delta);
  if (inserted) return;
  it->second += delta;
  if (it->second == 0) entries_.erase(it);
}

bool MultiBettiTable::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

int MultiBettiTable::min_column() const { return entries_.begin()->first.i; }
int MultiBettiTable::max_column() const { return entries_.rbegin()->first.i; }

GradedOrder::GradedOrder(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("order needs at least one weight");
  for (std::size_t k = 0; k < weights_.size(); ++k)
    if (weights_[k] <= 0)
      throw ValidationError("weight " + std::to_string(k) + " is " + std::to_string(weights_[k]) +
                            "; weights must be positive to refine the effective cone");
}

std::strong_ordering GradedOrder::compare(const Multidegree& a, const Multidegree& b) const {
  if (a.size() != weights_.size() || b.size() != weights_.size())
    throw ValidationError("multidegree length does not match the number of weights");
  long wa = 0, wb = 0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    wa += static_cast<long>(weights_[k]) * a[k];
    wb += static_cast<long>(weights_[k]) * b[k];
  }
  if (auto c = wa <=> wb; c != 0) return c;
  return a <=> b;
}

std::strong_ordering order_compare(const GradedOrder& o, const Multidegree& a, const Multidegree& b) {
  return o.compare(a, b);
}

Rational multi_chi(const MultiBettiTable& table, int i, const Multidegree& alpha, const GradedOrder& o) {
  Rational sum = 0;
  for (const auto& [cell, value] : table.entries()) {
    if (cell.i == i) {
      if (o.compare(cell.alpha, alpha) < 0) sum += value;
    } else if (cell.i == i + 1) {
      if (o.compare(cell.alpha, alpha) <= 0) sum -= value;
    } else if (cell.i > i + 1) {
      if ((cell.i - i) % 2 == 0)
        sum += value;
      else
        sum -= value;
    }
  }
  return sum;
}

MultiChiWindow multi_chi_window(const MultiBettiTable& table) {
  MultiChiWindow w;
  if (table.empty()) return w;
  const auto m = static_cast<std::size_t>(table.m());
  w.alpha_lo.assign(m, std::numeric_limits<int>::max());
  w.alpha_hi.assign(m, std::numeric_limits<int>::min());
  for (const auto& [cell, _] : table.entries())
    for (std::size_t k = 0; k < m; ++k) {
      w.alpha_lo[k] = std::min(w.alpha_lo[k], cell.alpha[k] - 1);
      w.alpha_hi[k] = std::max(w.alpha_hi[k], cell.alpha[k] + 1);
    }
  w.i_lo = table.min_column() - 3;
  w.i_hi = table.max_column();
  return w;
}

namespace {

template <class F>
void for_each_point(const MultiChiWindow& w, F&& f) {
  if (w.i_lo > w.i_hi || w.alpha_lo.empty()) return;
  for (int i = w.i_lo; i <= w.i_hi; ++i) {
    Multidegree a = w.alpha_lo;
    bool more = true;
    while (more) {
      f(i, a);
      more = false;
      for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] < w.alpha_hi[k]) {
          ++a[k];
          more = true;
          break;
        }
        a[k] = w.alpha_lo[k];
      }
    }
  }
}

}  // namespace

std::vector<MultiChiValue> multi_chi_negatives(const MultiBettiTable& table, const GradedOrder& o) {
  std::vector<MultiChiValue> out;
  for_each_point(multi_chi_window(table), [&](int i, const Multidegree& a) {
    Rational v = multi_chi(table, i, a, o);
    if (v < 0) out.push_back({i, a, v});
  });
  return out;
}

std::optional<MultiChiValue> multi_chi_min(const MultiBettiTable& table, const GradedOrder& o) {
  std::optional<MultiChiValue> best;
  for_each_point(multi_chi_window(table), [&](int i, const Multidegree& a) {
    Rational v = multi_chi(table, i, a, o);
    if (!best || v < best->value) best = MultiChiValue{i, a, v};
  });
  return best;
}

MultiBettiTable multi_pair(const MultiBettiTable& table, const MultiEvaluator& gamma, int qmax) {
  if (qmax < 0) throw ValidationError("qmax must be >= 0");
  MultiBettiTable out(table.m());
  for (const auto& [cell, value] : table.entries()) {
    Multidegree neg = cell.alpha;
    for (int& x : neg) x = -x;
    for (int q = 0; q <= qmax; ++q) {
      Rational g = gamma(q, neg);
      if (g != 0) out.add(cell.i - q, cell.alpha, value * g);
    }
  }
  return out;
}

void ProductSpace::validate() const {
  if (factor_dims.empty()) throw ValidationError("product space needs at least one factor");
  for (int n : factor_dims)
    if (n < 1) throw ValidationError("factor dimensions must be >= 1");
  for (const auto& s : summands) {
    if (s.twist.size() != factor_dims.size())
      throw ValidationError("twist has " + std::to_string(s.twist.size()) + " entries for " +
                            std::to_string(factor_dims.size()) + " factors");
    if (s.mult < 0) throw ValidationError("summand multiplicity must be >= 0");
  }
}

int ProductSpace::total_dim() const {
  int d = 0;
  for (int n : factor_dims) d += n;
  return d;
}

namespace {

Rational line_bundle_h(int n, int q, int a) {
  if (q < 0 || q > n) return 0;
  return twist_evaluator(n, a).gamma(q, 0);
}

/// Sum over q_t >= 0 with q_t <= n_t and total q of the product of factor cohomologies.
Rational convolve(const std::vector<int>& dims, const Multidegree& twist, std::size_t t, int q) {
  if (t == dims.size()) return q == 0 ? Rational(1) : Rational(0);
  Rational sum = 0;
  for (int qt = 0; qt <= std::min(q, dims[t]); ++qt) {
    Rational h = line_bundle_h(dims[t], qt, twist[t]);
    if (h != 0) sum += h * convolve(dims, twist, t + 1, q - qt);
  }
  return sum;
}

}  // namespace

Rational kunneth_gamma(const ProductSpace& x, int q, const Multidegree& alpha) {
  x.validate();
  if (alpha.size() != x.factor_dims.size())
    throw ValidationError("multidegree length does not match the number of factors");
  if (q < 0 || q > x.total_dim()) return 0;
  Rational total = 0;
  for (const auto& s : x.summands) {
    if (s.mult == 0) continue;
    Multidegree tw(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) tw[k] = alpha[k] + s.twist[k];
    total += s.mult * convolve(x.factor_dims, tw, 0, q);
  }
  return total;
}

MultiBettiTable multi_pair(const MultiBettiTable& table, const ProductSpace& x) {
  x.validate();
  if (table.m() != static_cast<int>(x.factor_dims.size()))
    throw ValidationError("table graded by Z^" + std::to_string(table.m()) + " paired with a product of " +
                          std::to_string(x.factor_dims.size()) + " factors");
  return multi_pair(
      table, [&](int q, const Multidegree& a) { return kunneth_gamma(x, q, a); }, x.total_dim());
}

}  // namespace bsfan
