#include "bsfan/table.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bsfan/errors.hpp"
#include "bsfan/json_io.hpp"

namespace bsfan {

BettiTable::BettiTable(std::initializer_list<std::pair<const Cell, Rational>> init) {
  for (const auto& [cell, value] : init) add(cell.i, cell.j, value);
}

BettiTable::BettiTable(Map entries) {
  for (auto& [cell, value] : entries)
    if (value != 0) entries_.emplace(cell, value);
}

Rational BettiTable::at(int i, int j) const {
  auto it = entries_.find(Cell{i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void BettiTable::set(int i, int j, const Rational& value) {
  if (value == 0)
    entries_.erase(Cell{i, j});
  else
    entries_[Cell{i, j}] = value;
}

void BettiTable::add(int i, int j, const Rational& delta) {
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace(Cell{i, j}, delta);
  if (inserted) return;
  it->second += delta;
  if (it->second == 0) entries_.erase(it);
}

bool BettiTable::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

int BettiTable::min_column() const { return entries_.begin()->first.i; }
int BettiTable::max_column() const { return entries_.rbegin()->first.i; }

int BettiTable::min_degree() const {
  int lo = std::numeric_limits<int>::max();
  for (const auto& [cell, _] : entries_) lo = std::min(lo, cell.j);
  return lo;
}

int BettiTable::max_degree() const {
  int hi = std::numeric_limits<int>::min();
  for (const auto& [cell, _] : entries_) hi = std::max(hi, cell.j);
  return hi;
}

std::vector<std::pair<int, Rational>> BettiTable::column(int i) const {
  std::vector<std::pair<int, Rational>> out;
  auto it = entries_.lower_bound(Cell{i, std::numeric_limits<int>::min()});
  for (; it != entries_.end() && it->first.i == i; ++it) out.emplace_back(it->first.j, it->second);
  return out;
}

Rational BettiTable::column_sum(int i) const {
  Rational sum = 0;
  for (const auto& [_, v] : column(i)) sum += v;
  return sum;
}

void require_nonnegative(const BettiTable& table, const std::string& what) {
  for (const auto& [cell, value] : table.entries())
    if (value < 0)
      throw ValidationError(what + " has negative entry " + format_rational(value) + " at (" +
                            std::to_string(cell.i) + "," + std::to_string(cell.j) + ")");
}

BettiTable linear_combine(const std::vector<Term>& terms) {
  BettiTable out;
  for (const auto& term : terms) {
    if (term.coeff == 0) continue;
    for (const auto& [cell, value] : term.table.entries()) out.add(cell.i, cell.j, term.coeff * value);
  }
  return out;
}

BettiTable scale(const BettiTable& table, const Rational& factor) { return linear_combine({{factor, table}}); }

BettiTable operator+(const BettiTable& a, const BettiTable& b) { return linear_combine({{1, a}, {1, b}}); }

BettiTable operator-(const BettiTable& a, const BettiTable& b) { return linear_combine({{1, a}, {-1, b}}); }

BettiTable dual(const BettiTable& table) {
  BettiTable out;
  for (const auto& [cell, value] : table.entries()) out.set(-cell.i, -cell.j, value);
  return out;
}

BettiTable shift(const BettiTable& table, int k) {
  BettiTable out;
  for (const auto& [cell, value] : table.entries()) out.set(cell.i + k, cell.j, value);
  return out;
}

std::string pretty_render(const BettiTable& table, bool mark_origin) {
  if (table.empty()) return "(empty table)\n";

  const int col_lo = std::min(table.min_column(), 0);
  const int col_hi = std::max(table.max_column(), 0);
  int row_lo = std::numeric_limits<int>::max();
  int row_hi = std::numeric_limits<int>::min();
  for (const auto& [cell, _] : table.entries()) {
    row_lo = std::min(row_lo, cell.j - cell.i);
    row_hi = std::max(row_hi, cell.j - cell.i);
  }
  const int origin_row = std::clamp(0, row_lo, row_hi);

  const std::size_t ncols = static_cast<std::size_t>(col_hi - col_lo + 1);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int i = col_lo; i <= col_hi; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (int r = row_lo; r <= row_hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = col_lo; i <= col_hi; ++i) {
      Rational v = table.at(i, i + r);
      std::string s = v == 0 ? "-" : format_rational(v);
      if (mark_origin && i == 0 && r == origin_row) s += "°";
      row.push_back(std::move(s));
    }
    cells.push_back(std::move(row));
  }

  // "°" is two bytes but one column wide.
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++w;
    return w;
  };
  std::vector<std::size_t> widths(ncols + 1, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], width(row[k]));

  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) line += ' ';
      line += std::string(widths[k] - width(row[k]), ' ') + row[k];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string serialize_table(const BettiTable& table) { return table_to_json(table).dump(); }

BettiTable parse_table(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return table_from_json(j);
}

}  // namespace bsfan
