#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsfan/errors.hpp"
#include "bsfan/rational.hpp"
#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

// Tables over A = k[t]: the chi functionals, half-space membership and the
// constructive chain decomposition into shifted free and torsion pieces.

namespace bsfan {

/// chi_{i,j}(B) = sum_{g <= j} B_{i,g} - sum_{g <= j+1} B_{i+1,g}
///              + sum_{l >= i+2} (-1)^{l-i} sum_g B_{l,g}.
Rational chi(const BettiTable& table, int i, int j);

/// sum (-1)^i B_{i,j}.
Rational euler(const BettiTable& table);

/// Finite index box on which chi has to be checked.
///
/// With columns in [lo, hi] and degrees in [dlo, dhi]: chi vanishes for
/// i > hi; for i <= lo - 2 it only sees the alternating total sum, whose sign
/// flips with the parity of i, so lo - 3 and lo - 2 cover every value; in j
/// both partial sums are constant below dlo - 1 and above dhi, so
/// [dlo - 2, dhi + 1] covers them. `widen` doubles every pad.
struct ChiWindow {
  int i_lo = 0, i_hi = -1, j_lo = 0, j_hi = -1;
};
ChiWindow chi_window(const BettiTable& table, bool widen = false);

struct ChiMinimum {
  Rational value;
  int i = 0, j = 0;
};
/// Smallest chi over the window (first witness in (i, j) order); nullopt for
/// an empty window.
std::optional<ChiMinimum> min_chi(const BettiTable& table, const ChiWindow& window);

enum class ViolationKind { ForbiddenColumn, NegativeEntry, NegativeChi, NonzeroEuler };

struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  Rational value;
};

std::string to_string(ViolationKind k);

struct Verdict {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// Codimension sequences over A take values in {empty, 0, 1, inf} with the
/// staircase shape (..., empty, 0, ..., 0, 1, ..., 1, inf, ...). Sequences
/// validated with n = 0 have exactly this shape.
Verdict membership_a(const BettiTable& table, const CodimensionSequence& c, bool widen = false);

/// Indecomposable summand over A: a shifted free module A(-a) at position p,
/// or the resolution A(-a) <- A(-b) of A(-a)/t^{b-a} at positions p, p+1.
struct APiece {
  enum class Kind { Free, Torsion };
  Kind kind = Kind::Free;
  int position = 0;
  int gen_degree = 0;
  int socle_degree = 0;  // torsion only; > gen_degree

  static APiece free(int p, int a) { return {Kind::Free, p, a, 0}; }
  static APiece torsion(int p, int a, int b);

  BettiTable table() const;
  DegreeSequence degree_sequence() const;
  friend bool operator==(const APiece&, const APiece&) = default;
};

struct APieceTerm {
  Rational coeff;
  APiece piece;
};

class NotInConeA : public Error {
 public:
  NotInConeA(const std::string& what, Cell blocking, std::vector<APieceTerm> partial)
      : Error(what), blocking_(blocking), partial_(std::move(partial)) {}
  Cell blocking() const { return blocking_; }
  const std::vector<APieceTerm>& partial() const { return partial_; }

 private:
  Cell blocking_;
  std::vector<APieceTerm> partial_;
};

/// Greedy decomposition: repeatedly take the top entry (smallest degree) of
/// the rightmost column and subtract the maximal multiple of the free or
/// torsion piece it determines. Throws NotInConeA when stuck.
std::vector<APieceTerm> decompose_a(const BettiTable& table, const CodimensionSequence& c);

}  // namespace bsfan
