#include "bsfan/diagrams.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsfan/errors.hpp"

namespace bsfan {

BettiTable pure_diagram(const DegreeSequence& d, int n) {
  if (n >= 0 && d.codimension() > n + 1)
    throw ValidationError("pure diagram of codimension " + std::to_string(d.codimension()) +
                          " does not exist over " + std::to_string(n + 1) + " variables");

  const auto& deg = d.degrees();
  std::vector<Rational> weights;
  weights.reserve(deg.size());
  for (std::size_t k = 0; k < deg.size(); ++k) {
    Integer denom = 1;
    for (std::size_t m = 0; m < deg.size(); ++m)
      if (m != k) denom *= std::abs(deg[m] - deg[k]);
    weights.push_back(make_rational(1, denom));
  }

  // Clear denominators, then divide out the content.
  Integer l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& w : weights) {
    Integer v = w.get_num() * (l / w.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }

  BettiTable out;
  for (std::size_t k = 0; k < deg.size(); ++k)
    out.set(d.start() + static_cast<int>(k), deg[k], Rational(ints[k] / g));
  return out;
}

SupernaturalSheaf::SupernaturalSheaf(std::vector<int> roots, Rational rank_scale, int n)
    : roots_(std::move(roots)), rank_scale_(std::move(rank_scale)), n_(n) {
  for (std::size_t k = 1; k < roots_.size(); ++k)
    if (roots_[k - 1] <= roots_[k]) throw ValidationError("root sequence must be strictly decreasing");
  if (rank_scale_ <= 0) throw ValidationError("rank scale must be positive");
  if (n_ < 0) throw ValidationError("ambient dimension must be >= 0");
  if (dimension() > n_)
    throw ValidationError("supernatural sheaf of dimension " + std::to_string(dimension()) +
                          " does not fit in P^" + std::to_string(n_));
  Integer fact = 1;
  for (int k = 2; k <= dimension(); ++k) fact *= k;
  magnitude_scale_ = rank_scale_ / Rational(fact);
}

int SupernaturalSheaf::nonvanishing_row(int j) const {
  // roots_ is decreasing; count the roots strictly greater than j.
  int above = 0;
  for (int f : roots_) {
    if (f == j) return -1;
    if (f > j) ++above;
  }
  return above;
}

Rational SupernaturalSheaf::gamma(int q, int j) const {
  if (q < 0 || q > n_) return 0;
  if (nonvanishing_row(j) != q) return 0;
  Integer prod = 1;
  for (int f : roots_) prod *= std::abs(j - f);
  return magnitude_scale_ * Rational(prod);
}

namespace {

CohomologyWindow checked(CohomologyWindow w) {
  for (const auto& [key, value] : w.values) {
    if (value < 0) throw ValidationError("cohomology window has a negative value");
    if (key.second < w.jmin || key.second > w.jmax)
      throw ValidationError("cohomology window entry at j=" + std::to_string(key.second) +
                            " lies outside the declared range");
  }
  return w;
}

}  // namespace

CohomologyEvaluator::CohomologyEvaluator(CohomologyWindow w) : kind_(checked(std::move(w))) {}

Rational CohomologyEvaluator::gamma(int q, int j) const {
  struct Visitor {
    int q, j;
    Rational operator()(const SupernaturalSheaf& s) const { return s.gamma(q, j); }
    Rational operator()(const CohomologyWindow& w) const {
      if (j < w.jmin || j > w.jmax)
        throw RangeError("cohomology window queried at (q,j)=(" + std::to_string(q) + "," + std::to_string(j) +
                         ") outside j-range [" + std::to_string(w.jmin) + "," + std::to_string(w.jmax) + "]");
      auto it = w.values.find({q, j});
      return it == w.values.end() ? Rational(0) : it->second;
    }
    Rational operator()(const FormalCombination& f) const {
      Rational sum = 0;
      for (const auto& t : f.terms) sum += t.coeff * t.evaluator->gamma(q, j);
      return sum;
    }
  };
  return std::visit(Visitor{q, j}, kind_);
}

bool CohomologyEvaluator::defined_at(int j) const {
  struct Visitor {
    int j;
    bool operator()(const SupernaturalSheaf&) const { return true; }
    bool operator()(const CohomologyWindow& w) const { return j >= w.jmin && j <= w.jmax; }
    bool operator()(const FormalCombination& f) const {
      return std::all_of(f.terms.begin(), f.terms.end(), [&](const auto& t) { return t.evaluator->defined_at(j); });
    }
  };
  return std::visit(Visitor{j}, kind_);
}

int CohomologyEvaluator::dimension() const {
  struct Visitor {
    int operator()(const SupernaturalSheaf& s) const { return s.dimension(); }
    int operator()(const CohomologyWindow& w) const { return w.dim; }
    int operator()(const FormalCombination& f) const {
      int d = 0;
      for (const auto& t : f.terms) d = std::max(d, t.evaluator->dimension());
      return d;
    }
  };
  return std::visit(Visitor{}, kind_);
}

int CohomologyEvaluator::ambient() const {
  struct Visitor {
    int operator()(const SupernaturalSheaf& s) const { return s.ambient(); }
    int operator()(const CohomologyWindow&) const { return -1; }
    int operator()(const FormalCombination& f) const {
      int n = -1;
      for (const auto& t : f.terms) n = std::max(n, t.evaluator->ambient());
      return n;
    }
  };
  return std::visit(Visitor{}, kind_);
}

CohomologyEvaluator twist_evaluator(int n, int a) {
  if (n < 1) throw ValidationError("twist evaluator needs n >= 1");
  std::vector<int> roots;
  for (int k = 1; k <= n; ++k) roots.push_back(-a - k);
  return SupernaturalSheaf(std::move(roots), 1, n);
}

}  // namespace bsfan
