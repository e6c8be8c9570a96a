#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsfan/errors.hpp"
#include "bsfan/rational.hpp"
#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

namespace bsfan {

struct PurePiece {
  Rational coeff;
  DegreeSequence sequence;

  /// coeff * pure_diagram(sequence).
  BettiTable table() const;
};

/// Chain decomposition: sum coeff * pure_diagram(d) + remainder = input.
struct Decomposition {
  std::vector<PurePiece> pieces;
  BettiTable remainder;

  BettiTable reconstruct() const;
};

class NotInCone : public Error {
 public:
  NotInCone(const std::string& what, Decomposition partial, std::optional<DegreeSequence> strand)
      : Error(what), partial_(std::move(partial)), strand_(std::move(strand)) {}
  /// Pieces extracted before getting stuck; the remainder is what was left.
  const Decomposition& partial() const { return partial_; }
  /// The top strand that admitted no compatible trim, when there was one.
  const std::optional<DegreeSequence>& blocking_strand() const { return strand_; }

 private:
  Decomposition partial_;
  std::optional<DegreeSequence> strand_;
};

/// Greedy chain decomposition of a nonnegative table relative to c.
///
/// Each step takes the top strand ending at the rightmost nonzero column
/// (minimal degree per column, extended leftwards while the next column has
/// an entry of strictly smaller degree), trims it from the left to the
/// largest start compatible with c, and subtracts the largest multiple of its
/// pure diagram that keeps every entry nonnegative.
///
/// Throws ValidationError for negative input or c.n() != n, NotInCone when a
/// strand has no compatible trim.
Decomposition decompose_s(const BettiTable& table, const CodimensionSequence& c, int n);

struct MembershipS {
  bool in_cone = false;
  /// Full certificate when in_cone, partial chain otherwise.
  Decomposition decomposition;
  std::optional<DegreeSequence> blocking_strand;
  std::string reason;
};

MembershipS membership_s(const BettiTable& table, const CodimensionSequence& c, int n);

class MonadViolation : public Error {
 public:
  MonadViolation(const std::string& what, BettiTable e_column) : Error(what), e_(std::move(e_column)) {}
  const BettiTable& e_column() const { return e_; }

 private:
  BettiTable e_;
};

/// Split of the table of a free monad: lambda1 * tableF1 + dual(lambda2 * tableF2)
/// equals the input, where tableF1 = D' + E (a complex starting in column 0)
/// and tableF2 = D'' (the dual part, before dualizing back).
struct MonadSplit {
  Rational lambda1;
  BettiTable tableF1;
  Rational lambda2;
  BettiTable tableF2;
  BettiTable e_column;
  /// The positive-codimension pieces making up D' and D''.
  std::vector<PurePiece> pieces1;
  std::vector<PurePiece> pieces2;
};

/// Throws MonadViolation when E has a negative entry or lives outside column 0.
MonadSplit monad_split(const BettiTable& table, int n);

struct InfinitePrefix {
  /// Stable pieces in the original (undualized) orientation, in the order the
  /// greedy algorithm produced them; remainder is the undecomposed tail.
  Decomposition prefix;
  /// How many leading pieces the (e-1)-truncation reproduced.
  std::size_t confirmed = 0;
};

/// Stable prefix of the decomposition of a possibly infinite resolution from
/// its truncation to columns 0..e. Pieces of the dualized truncation are kept
/// while they avoid column -e, or touch it with full codimension n+1 (those
/// are unchanged by any longer truncation); the first other piece ends the
/// prefix. The (e-1)-truncation must yield an initial segment of the result.
InfinitePrefix infinite_prefix(const BettiTable& truncated, int e, int n);

/// Degree sequence of the dual pure diagram.
DegreeSequence dual_sequence(const DegreeSequence& d);

}  // namespace bsfan
