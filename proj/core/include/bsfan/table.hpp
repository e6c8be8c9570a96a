#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsfan/rational.hpp"

namespace bsfan {

/// Position of a Betti number: homological index and absolute internal degree.
struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Sparse table (i, j) -> Rational, keyed by absolute degree j.
///
/// Zero entries are never stored. Tables may be signed ("raw") while they are
/// being manipulated; `is_nonnegative()` tells whether a table is a valid
/// Betti table, and `require_nonnegative()` enforces it at API boundaries.
class BettiTable {
 public:
  using Map = std::map<Cell, Rational>;

  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const Cell, Rational>> init);
  explicit BettiTable(Map entries);

  /// Value at (i, j); zero when absent.
  Rational at(int i, int j) const;
  /// Overwrites (i, j); storing zero erases the entry.
  void set(int i, int j, const Rational& value);
  /// Adds `delta` to (i, j), pruning if the result is zero.
  void add(int i, int j, const Rational& delta);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool is_nonnegative() const;

  /// Smallest and largest homological index with a nonzero entry.
  /// Precondition: !empty().
  int min_column() const;
  int max_column() const;
  /// Smallest and largest degree overall. Precondition: !empty().
  int min_degree() const;
  int max_degree() const;
  /// Nonzero entries of column i in increasing degree.
  std::vector<std::pair<int, Rational>> column(int i) const;
  /// Sum of the entries in column i.
  Rational column_sum(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Map entries_;
};

/// Throws ValidationError naming the first negative entry.
void require_nonnegative(const BettiTable& table, const std::string& what = "table");

struct Term {
  Rational coeff;
  BettiTable table;
};

/// Entrywise sum of coeff * table; zeros pruned, signed result allowed.
BettiTable linear_combine(const std::vector<Term>& terms);
BettiTable scale(const BettiTable& table, const Rational& factor);
BettiTable operator+(const BettiTable& a, const BettiTable& b);
BettiTable operator-(const BettiTable& a, const BettiTable& b);

/// (i, j) -> (-i, -j).
BettiTable dual(const BettiTable& table);
/// (i, j) -> (i + k, j).
BettiTable shift(const BettiTable& table, int k);

/// Grid rendering: one column per homological index, row r holding
/// beta_{i, i + r}, zeros shown as "-". With `mark_origin` the cell of
/// homological position 0 on the displayed row nearest to r = 0 gets a "°"
/// suffix (this is the (0,0) cell whenever row 0 is displayed).
std::string pretty_render(const BettiTable& table, bool mark_origin = true);

/// Canonical JSON, entries ordered by (i, j).
std::string serialize_table(const BettiTable& table);
/// Parses the JSON table format; signed values are accepted (raw tables).
BettiTable parse_table(const std::string& text);

}  // namespace bsfan
