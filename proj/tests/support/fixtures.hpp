#pragma once

#include "bsfan/sequences.hpp"
#include "bsfan/table.hpp"

// Tables and codimension sequences shared by the unit and acceptance tests.

namespace bsfan::fixtures {

inline BettiTable koszul_p2() { return {{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}}; }

/// Resolution-like table over three variables with a two-row middle.
inline BettiTable table_1_44_44_1() {
  return {{{0, 0}, 1}, {{1, 3}, 4}, {{1, 4}, 4}, {{2, 4}, 4}, {{2, 5}, 4}, {{3, 8}, 1}};
}

/// Rows [1; -,5,4,1; -,-,4,4,1].
inline BettiTable table_three_rows() {
  return {{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 4}, {{3, 4}, 1}, {{2, 4}, 4}, {{3, 5}, 4}, {{4, 6}, 1}};
}

/// Rows [1; -,4,4,1].
inline BettiTable table_1_441() { return {{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}}; }

/// 2 11 20° 10 on a single row.
inline BettiTable monad_table() { return {{{-2, 1}, 2}, {{-1, 2}, 11}, {{0, 3}, 20}, {{1, 4}, 10}}; }

/// Truncation through column 4 of an infinite linear-ish resolution.
inline BettiTable infinite_truncation() {
  return {{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 16}, {{3, 4}, 38}, {{4, 5}, 92}};
}

/// (empty at i <= -1, 2 at i = 0, 1, inf at i >= 2), n = 2.
inline CodimensionSequence c_empty_22_inf() {
  return validate_codim_sequence(
      {2, CodimValue::empty(), 0, {CodimValue::finite(2), CodimValue::finite(2)}, CodimValue::infinity()});
}

/// (empty at i <= -1, 2 at i = 0, inf at i >= 1), n = 2.
inline CodimensionSequence c_empty_2_inf() {
  return validate_codim_sequence({2, CodimValue::empty(), 0, {CodimValue::finite(2)}, CodimValue::infinity()});
}

inline CodimensionSequence c_constant(int value, int n) {
  return CodimensionSequence::constant(CodimValue::finite(value), n);
}

}  // namespace bsfan::fixtures
