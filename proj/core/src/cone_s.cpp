#include "bsfan/cone_s.hpp"

#include <algorithm>

#include "bsfan/diagrams.hpp"

namespace bsfan {

BettiTable PurePiece::table() const { return scale(pure_diagram(sequence), coeff); }

BettiTable Decomposition::reconstruct() const {
  BettiTable sum = remainder;
  for (const auto& p : pieces) sum = sum + p.table();
  return sum;
}

namespace {

/// Top strand ending at the rightmost nonzero column. Precondition: !t.empty().
DegreeSequence top_strand(const BettiTable& t) {
  const int m = t.max_column();
  std::vector<int> degrees{t.column(m).front().first};
  int start = m;
  for (int i = m - 1;; --i) {
    auto col = t.column(i);
    if (col.empty() || col.front().first >= degrees.back()) break;
    degrees.push_back(col.front().first);
    start = i;
  }
  std::reverse(degrees.begin(), degrees.end());
  return DegreeSequence(start, std::move(degrees));
}

/// Largest-start compatible trim, i.e. the smallest compatible sequence.
/// Compatibility of the trims forms an interval, so scanning from the right
/// and stopping at the first hit is enough.
std::optional<DegreeSequence> minimal_compatible_trim(const DegreeSequence& strand, const CodimensionSequence& c) {
  for (int drop = strand.codimension(); drop >= 0; --drop) {
    DegreeSequence d = strand.trim_left(drop);
    if (is_compatible(d, c)) return d;
  }
  return std::nullopt;
}

}  // namespace

Decomposition decompose_s(const BettiTable& table, const CodimensionSequence& c, int n) {
  require_nonnegative(table);
  if (c.n() != n)
    throw ValidationError("codimension sequence was validated for n = " + std::to_string(c.n()) + ", not n = " +
                          std::to_string(n));

  Decomposition out;
  out.remainder = table;
  const std::size_t max_steps = table.size();
  while (!out.remainder.empty()) {
    const DegreeSequence strand = top_strand(out.remainder);
    const auto d = minimal_compatible_trim(strand, c);
    if (!d)
      throw NotInCone("top strand " + to_string(strand) + " has no trim compatible with the codimension sequence",
                      out, strand);

    const BettiTable pure = pure_diagram(*d, n);
    std::optional<Rational> q;
    for (const auto& [cell, value] : pure.entries()) {
      Rational ratio = out.remainder.at(cell.i, cell.j) / value;
      if (!q || ratio < *q) q = ratio;
    }
    if (*q <= 0) throw NotInCone("pure diagram " + to_string(*d) + " cannot be subtracted", out, strand);

    for (const auto& [cell, value] : pure.entries()) out.remainder.add(cell.i, cell.j, -*q * value);
    out.pieces.push_back({*q, *d});
    // Each step zeroes at least one entry.
    if (out.pieces.size() > max_steps) throw Error("greedy decomposition failed to terminate");
  }
  return out;
}

MembershipS membership_s(const BettiTable& table, const CodimensionSequence& c, int n) {
  MembershipS result;
  try {
    result.decomposition = decompose_s(table, c, n);
    result.in_cone = true;
  } catch (const NotInCone& e) {
    result.decomposition = e.partial();
    result.blocking_strand = e.blocking_strand();
    result.reason = e.what();
  }
  return result;
}

DegreeSequence dual_sequence(const DegreeSequence& d) {
  std::vector<int> degrees;
  for (auto it = d.degrees().rbegin(); it != d.degrees().rend(); ++it) degrees.push_back(-*it);
  return DegreeSequence(-d.end(), std::move(degrees));
}

namespace {

/// Pieces up to and including the last one of positive codimension.
std::vector<PurePiece> positive_codim_prefix(const Decomposition& dec) {
  std::size_t keep = 0;
  for (std::size_t k = 0; k < dec.pieces.size(); ++k)
    if (dec.pieces[k].sequence.codimension() > 0) keep = k + 1;
  return {dec.pieces.begin(), dec.pieces.begin() + static_cast<std::ptrdiff_t>(keep)};
}

BettiTable sum_pieces(const std::vector<PurePiece>& pieces) {
  BettiTable sum;
  for (const auto& p : pieces) sum = sum + p.table();
  return sum;
}

}  // namespace

MonadSplit monad_split(const BettiTable& table, int n) {
  require_nonnegative(table);
  // 0 at positions <= 0 and n+1 at positions >= 1, for the table and for its dual.
  const auto c = validate_codim_sequence(
      CodimDescription{n, CodimValue::finite(0), 1, {}, CodimValue::finite(n + 1)});

  MonadSplit split;
  split.pieces1 = positive_codim_prefix(decompose_s(table, c, n));
  split.pieces2 = positive_codim_prefix(decompose_s(dual(table), c, n));
  const BettiTable d1 = sum_pieces(split.pieces1);
  const BettiTable d2 = sum_pieces(split.pieces2);

  split.e_column = table - d1 - dual(d2);
  for (const auto& [cell, value] : split.e_column.entries()) {
    if (cell.i != 0)
      throw MonadViolation("E has support outside column 0 at (" + std::to_string(cell.i) + "," +
                               std::to_string(cell.j) + ")",
                           split.e_column);
    if (value < 0)
      throw MonadViolation("E has negative entry " + format_rational(value) + " at degree " + std::to_string(cell.j),
                           split.e_column);
  }

  split.tableF1 = d1 + split.e_column;
  split.tableF2 = d2;
  split.lambda1 = split.tableF1.empty() ? 0 : 1;
  split.lambda2 = split.tableF2.empty() ? 0 : 1;
  return split;
}

namespace {

/// Stable prefix (in dual orientation) of the decomposition of dual(truncation to columns <= e).
std::vector<PurePiece> stable_dual_prefix(const BettiTable& truncated, int e, int n) {
  BettiTable cut;
  for (const auto& [cell, value] : truncated.entries())
    if (cell.i <= e) cut.set(cell.i, cell.j, value);
  // 0 at positions <= -e, n+1 after.
  const auto c = validate_codim_sequence(
      CodimDescription{n, CodimValue::finite(0), -e + 1, {}, CodimValue::finite(n + 1)});
  const Decomposition dec = decompose_s(dual(cut), c, n);

  std::vector<PurePiece> stable;
  for (const auto& p : dec.pieces) {
    const bool clear_of_boundary = p.sequence.start() > -e;
    const bool full_codim_at_boundary = p.sequence.start() == -e && p.sequence.codimension() == n + 1;
    if (!clear_of_boundary && !full_codim_at_boundary) break;
    stable.push_back(p);
  }
  return stable;
}

}  // namespace

InfinitePrefix infinite_prefix(const BettiTable& truncated, int e, int n) {
  require_nonnegative(truncated);
  if (e <= n + 1) throw ValidationError("truncation length e must exceed n + 1");
  if (!truncated.empty() && (truncated.min_column() < 0 || truncated.max_column() > e))
    throw ValidationError("truncated resolution must live in columns 0.." + std::to_string(e));

  const auto longer = stable_dual_prefix(truncated, e, n);
  const auto shorter = stable_dual_prefix(truncated, e - 1, n);

  InfinitePrefix result;
  for (const auto& p : longer) result.prefix.pieces.push_back({p.coeff, dual_sequence(p.sequence)});
  for (std::size_t k = 0; k < shorter.size(); ++k) {
    if (k >= longer.size() || shorter[k].coeff != longer[k].coeff || !(shorter[k].sequence == longer[k].sequence))
      throw Error("decomposition prefix is not stable: truncations at " + std::to_string(e - 1) + " and " +
                  std::to_string(e) + " disagree at piece " + std::to_string(k));
  }
  result.confirmed = shorter.size();
  result.prefix.remainder = truncated - sum_pieces(result.prefix.pieces);
  return result;
}

}  // namespace bsfan
