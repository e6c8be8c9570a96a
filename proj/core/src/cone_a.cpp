#include "bsfan/cone_a.hpp"

#include <algorithm>

namespace bsfan {

Rational chi(const BettiTable& table, int i, int j) {
  Rational sum = 0;
  for (const auto& [cell, value] : table.entries()) {
    if (cell.i == i) {
      if (cell.j <= j) sum += value;
    } else if (cell.i == i + 1) {
      if (cell.j <= j + 1) sum -= value;
    } else if (cell.i >= i + 2) {
      if ((cell.i - i) % 2 == 0)
        sum += value;
      else
        sum -= value;
    }
  }
  return sum;
}

Rational euler(const BettiTable& table) {
  Rational sum = 0;
  for (const auto& [cell, value] : table.entries()) {
    if (cell.i % 2 == 0)
      sum += value;
    else
      sum -= value;
  }
  return sum;
}

ChiWindow chi_window(const BettiTable& table, bool widen) {
  if (table.empty()) return {};
  const int f = widen ? 2 : 1;
  return ChiWindow{table.min_column() - 3 * f, table.max_column() + (f - 1), table.min_degree() - 2 * f,
                   table.max_degree() + f};
}

std::optional<ChiMinimum> min_chi(const BettiTable& table, const ChiWindow& window) {
  std::optional<ChiMinimum> best;
  for (int i = window.i_lo; i <= window.i_hi; ++i)
    for (int j = window.j_lo; j <= window.j_hi; ++j) {
      Rational v = chi(table, i, j);
      if (!best || v < best->value) best = ChiMinimum{v, i, j};
    }
  return best;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::ForbiddenColumn: return "forbidden_column";
    case ViolationKind::NegativeEntry: return "negative_entry";
    case ViolationKind::NegativeChi: return "negative_chi";
    case ViolationKind::NonzeroEuler: return "nonzero_euler";
  }
  return "?";
}

namespace {

void require_staircase(const CodimensionSequence& c) {
  if (c.n() != 0)
    throw ValidationError("codimension sequence over A must be validated with n = 0 (values empty, 0, 1, inf)");
}

bool has_zero(const CodimensionSequence& c) {
  const auto& d = c.description();
  if (d.left == CodimValue::finite(0) || d.right == CodimValue::finite(0)) return true;
  return std::find(d.window.begin(), d.window.end(), CodimValue::finite(0)) != d.window.end();
}

}  // namespace

Verdict membership_a(const BettiTable& table, const CodimensionSequence& c, bool widen) {
  require_staircase(c);
  Verdict verdict;
  for (const auto& [cell, value] : table.entries()) {
    if (c.at(cell.i).is_empty())
      verdict.violations.push_back({ViolationKind::ForbiddenColumn, cell.i, cell.j, value});
    if (value < 0) verdict.violations.push_back({ViolationKind::NegativeEntry, cell.i, cell.j, value});
  }
  const ChiWindow w = chi_window(table, widen);
  for (int i = w.i_lo; i <= w.i_hi; ++i) {
    if (!c.at(i).ge(1)) continue;
    for (int j = w.j_lo; j <= w.j_hi; ++j) {
      Rational v = chi(table, i, j);
      if (v < 0) verdict.violations.push_back({ViolationKind::NegativeChi, i, j, v});
    }
  }
  if (!has_zero(c)) {
    Rational e = euler(table);
    if (e != 0) verdict.violations.push_back({ViolationKind::NonzeroEuler, 0, 0, e});
  }
  return verdict;
}

APiece APiece::torsion(int p, int a, int b) {
  if (b <= a) throw ValidationError("torsion piece needs socle degree > generator degree");
  return {Kind::Torsion, p, a, b};
}

BettiTable APiece::table() const {
  BettiTable t;
  t.set(position, gen_degree, 1);
  if (kind == Kind::Torsion) t.set(position + 1, socle_degree, 1);
  return t;
}

DegreeSequence APiece::degree_sequence() const {
  if (kind == Kind::Free) return DegreeSequence(position, {gen_degree});
  return DegreeSequence(position, {gen_degree, socle_degree});
}

std::vector<APieceTerm> decompose_a(const BettiTable& input, const CodimensionSequence& c) {
  require_staircase(c);
  require_nonnegative(input);

  std::vector<APieceTerm> out;
  BettiTable rest = input;
  auto stuck = [&](const std::string& why, Cell at) { throw NotInConeA(why, at, out); };

  while (!rest.empty()) {
    const int s = rest.max_column();
    const auto top = rest.column(s).front();
    const int t = top.first;
    const CodimValue cs = c.at(s);

    APiece piece;
    Rational coeff;
    if (cs.is_empty()) {
      stuck("entry in a column where the codimension sequence is empty", {s, t});
    } else if (cs == CodimValue::finite(0)) {
      piece = APiece::free(s, t);
      coeff = top.second;
    } else {
      const auto left = rest.column(s - 1);
      if (left.empty()) stuck("no generator to the left of the top entry of the rightmost column", {s, t});
      const int r = left.front().first;
      if (r >= t) stuck("top entry of column " + std::to_string(s - 1) + " is not above the top entry of column " +
                            std::to_string(s),
                        {s - 1, r});
      piece = APiece::torsion(s - 1, r, t);
      coeff = std::min(left.front().second, top.second);
    }
    if (!is_compatible(piece.degree_sequence(), c))
      stuck("piece " + to_string(piece.degree_sequence()) + " is not compatible with the codimension sequence",
            {s, t});

    const BettiTable removed = piece.table();
    for (const auto& [cell, value] : removed.entries()) rest.add(cell.i, cell.j, -coeff * value);
    out.push_back({coeff, piece});
  }
  return out;
}

}  // namespace bsfan
