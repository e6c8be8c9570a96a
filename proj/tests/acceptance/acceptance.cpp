#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bsfan/cone_a.hpp"
#include "bsfan/cone_s.hpp"
#include "bsfan/diagrams.hpp"
#include "bsfan/json_io.hpp"
#include "bsfan/multigraded.hpp"
#include "bsfan/pairing.hpp"
#include "cli.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bsfan;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in milliseconds.
constexpr double kPureLimitMs = 1.0;
constexpr double kPairLimitMs = 10.0;
constexpr double kDecomposeLimitMs = 100.0;
constexpr double kPositivityLimitMs = 30000.0;
constexpr double kMultigradedLimitMs = 5000.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return elapsed_ms(t0);
}

SupernaturalSheaf supernatural(std::vector<int> roots, long r, int n) { return SupernaturalSheaf(std::move(roots), r, n); }

bool all_chi_nonnegative(const BettiTable& b) {
  if (b.empty()) return true;
  const auto m = min_chi(b, chi_window(b));
  return !m || m->value >= 0;
}

int cli_exit(std::vector<std::string> args) {
  std::ostringstream out, err;
  return cli::dispatch(args, out, err);
}

MultiBettiTable koszul_p1p1() {
  MultiBettiTable b(2);
  b.set(0, {0, 0}, 1);
  b.set(1, {1, 0}, 2);
  b.set(1, {0, 1}, 2);
  b.set(2, {2, 0}, 1);
  b.set(2, {1, 1}, 4);
  b.set(2, {0, 2}, 1);
  b.set(3, {2, 1}, 2);
  b.set(3, {1, 2}, 2);
  b.set(4, {2, 2}, 1);
  return b;
}

Outcome pure_diagrams() {
  Outcome o;
  struct Case {
    DegreeSequence d;
    BettiTable want;
  };
  const std::vector<Case> cases{
      {DegreeSequence(0, {0, 2, 3, 5}), {{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}}},
      {DegreeSequence(0, {0, 2, 3}), {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}},
      {DegreeSequence(0, {2, 3, 5}), {{{0, 2}, 2}, {{1, 3}, 3}, {{2, 5}, 1}}},
  };
  for (const auto& c : cases) {
    BettiTable got;
    const double ms = timed([&] { got = pure_diagram(c.d); });
    o.require(got == c.want, "pure diagram of " + to_string(c.d) + " is " + serialize_table(got));
    o.require(ms < kPureLimitMs, "pure diagram took " + std::to_string(ms) + " ms");
  }
  return o;
}

Outcome pairing_golden() {
  Outcome o;
  BettiTable a, b;
  const double ms = timed([&] {
    a = pair(fixtures::table_1_44_44_1(), supernatural({0, -8}, 8, 2), 2);
    b = pair(fixtures::koszul_p2(), twist_evaluator(2, 0), 2);
  });
  o.require(a == BettiTable{{{0, 3}, 240}, {{0, 4}, 256}, {{1, 4}, 256}, {{1, 5}, 240}},
            "two-row pairing gave " + serialize_table(a));
  o.require(b == BettiTable{{{0, 0}, 1}, {{1, 3}, 1}}, "Koszul pairing gave " + serialize_table(b));
  o.require(ms < kPairLimitMs, "pairing took " + std::to_string(ms) + " ms");
  return o;
}

Outcome weight_matrix() {
  Outcome o;
  const auto e = supernatural({1, -3}, 2, 2);
  // Rows r = -3..0 of the grid, columns i = 0..3, cell (i, i + r).
  const int want[4][4] = {{12, -5, 0, 3}, {5, 0, -3, 4}, {0, 3, -4, 3}, {0, 0, 0, 0}};
  for (int row = 0; row < 4; ++row)
    for (int i = 0; i < 4; ++i) {
      const int r = row - 3;
      const Rational w = chi(pair(BettiTable{{{i, i + r}, 1}}, e, 2), 0, 0);
      o.require(w == want[row][i], "weight at (" + std::to_string(i) + "," + std::to_string(i + r) + ") is " +
                                       format_rational(w));
    }
  return o;
}

Outcome decomposition_golden() {
  Outcome o;
  auto check = [&](const std::string& name, const BettiTable& t, const CodimensionSequence& c,
                   const std::vector<BettiTable>& pieces) {
    Decomposition dec;
    const double ms = timed([&] { dec = decompose_s(t, c, 2); });
    o.require(dec.pieces.size() == pieces.size(), name + ": " + std::to_string(dec.pieces.size()) + " pieces");
    for (std::size_t k = 0; k < std::min(pieces.size(), dec.pieces.size()); ++k)
      o.require(dec.pieces[k].table() == pieces[k],
                name + ": piece " + std::to_string(k) + " is " + serialize_table(dec.pieces[k].table()));
    o.require(dec.remainder.empty(), name + ": nonzero remainder");
    for (std::size_t k = 1; k < dec.pieces.size(); ++k)
      o.require(compare_degree_sequences(dec.pieces[k - 1].sequence, dec.pieces[k].sequence) == PartialOrdering::Less,
                name + ": pieces do not form a chain");
    o.require(ms < kDecomposeLimitMs, name + " took " + std::to_string(ms) + " ms");
  };
  check("three rows", fixtures::table_three_rows(), fixtures::c_empty_22_inf(),
        {{{{1, 2}, rat(1, 2)}, {{2, 3}, rat(4, 3)}, {{3, 4}, 1}, {{4, 6}, rat(1, 6)}},
         {{{1, 2}, rat(5, 6)}, {{2, 3}, rat(5, 3)}, {{3, 5}, rat(5, 3)}, {{4, 6}, rat(5, 6)}},
         scale(pure_diagram(DegreeSequence(1, {2, 3, 5})), rat(1, 3)),
         pure_diagram(DegreeSequence(1, {2, 4, 5})),
         pure_diagram(DegreeSequence(0, {0, 2, 4}))});
  check("[1; -,4,4,1] under c", fixtures::table_1_441(), fixtures::c_empty_2_inf(),
        {scale(BettiTable{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}}, rat(1, 3)),
         scale(BettiTable{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}, rat(2, 3))});
  check("[1; -,4,4,1] under c'", fixtures::table_1_441(), fixtures::c_constant(2, 2),
        {{{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 1}}, {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}});
  check("two rows", fixtures::table_1_44_44_1(), fixtures::c_constant(2, 2),
        {{{{1, 3}, rat(16, 5)}, {{2, 4}, 4}, {{3, 8}, rat(4, 5)}},
         {{{1, 3}, rat(3, 10)}, {{2, 5}, rat(1, 2)}, {{3, 8}, rat(1, 5)}},
         {{{0, 0}, rat(1, 5)}, {{1, 3}, rat(1, 2)}, {{2, 5}, rat(3, 10)}},
         {{{0, 0}, rat(4, 5)}, {{1, 4}, 4}, {{2, 5}, rat(16, 5)}}});
  return o;
}

Outcome membership_contrast() {
  Outcome o;
  const std::string table = table_to_json(fixtures::table_1_44_44_1()).dump();
  const int three = cli_exit({"check", "--table", table, "--codim", R"({"n":2,"value":3})", "--n", "2"});
  const int two = cli_exit({"check", "--table", table, "--codim", R"({"n":2,"value":2})", "--n", "2"});
  o.require(three == 1, "exit code against c = 3 was " + std::to_string(three));
  o.require(two == 0, "exit code against c = 2 was " + std::to_string(two));
  return o;
}

Outcome monad() {
  Outcome o;
  const auto m = monad_split(fixtures::monad_table(), 4);
  o.require(m.lambda1 * m.tableF1.at(0, 3) == 11 && m.lambda1 * m.tableF1.at(1, 4) == 10 && m.tableF1.size() == 2,
            "first summand is " + serialize_table(m.tableF1));
  o.require(dual(scale(m.tableF2, m.lambda2)) == BettiTable{{{-2, 1}, 2}, {{-1, 2}, 11}, {{0, 3}, 9}},
            "second summand is " + serialize_table(dual(m.tableF2)));
  o.require(scale(m.tableF1, m.lambda1) + dual(scale(m.tableF2, m.lambda2)) == fixtures::monad_table(),
            "summands do not add up");
  std::vector<BettiTable> refined;
  for (const auto& p : m.pieces1) refined.push_back(scale(p.table(), m.lambda1));
  for (const auto& p : m.pieces2) refined.push_back(dual(scale(p.table(), m.lambda2)));
  refined.push_back(m.e_column);
  const std::vector<BettiTable> want{{{{0, 3}, 10}, {{1, 4}, 10}},
                                     {{{0, 3}, 2}, {{-1, 2}, 4}, {{-2, 1}, 2}},
                                     {{{0, 3}, 7}, {{-1, 2}, 7}},
                                     {{{0, 3}, 1}}};
  o.require(refined.size() == want.size(), std::to_string(refined.size()) + " refined pieces");
  for (const auto& w : want) {
    bool found = false;
    for (const auto& r : refined) found = found || r == w;
    o.require(found, "missing refined piece " + serialize_table(w));
  }
  o.require(m.e_column.column_sum(0) == 1, "E sum is " + format_rational(m.e_column.column_sum(0)));
  return o;
}

Outcome infinite() {
  Outcome o;
  const auto p = infinite_prefix(fixtures::infinite_truncation(), 4, 1);
  const std::vector<BettiTable> want{{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}},
                                     {{{1, 2}, 3}, {{2, 3}, 6}, {{3, 4}, 3}},
                                     {{{2, 3}, 8}, {{3, 4}, 16}, {{4, 5}, 8}}};
  o.require(p.prefix.pieces.size() == want.size(), std::to_string(p.prefix.pieces.size()) + " prefix pieces");
  for (std::size_t k = 0; k < std::min(want.size(), p.prefix.pieces.size()); ++k)
    o.require(p.prefix.pieces[k].table() == want[k], "prefix piece " + std::to_string(k) + " is " +
                                                         serialize_table(p.prefix.pieces[k].table()));
  BettiTable through3 = fixtures::infinite_truncation();
  through3.set(4, 5, 0);
  const auto q = infinite_prefix(through3, 3, 1);
  for (std::size_t k = 0; k < std::min(q.prefix.pieces.size(), p.prefix.pieces.size()); ++k)
    o.require(q.prefix.pieces[k].table() == p.prefix.pieces[k].table(),
              "column-3 truncation disagrees at piece " + std::to_string(k));
  o.require(p.confirmed >= 2, "only " + std::to_string(p.confirmed) + " pieces confirmed");
  return o;
}

Outcome positivity() {
  Outcome o;
  gen::Rng rng(2024);
  const double ms = timed([&] {
    for (int t = 0; t < 1000; ++t) {
      const BettiTable b = gen::random_torsion_combination(rng, rng.uniform(1, 6));
      o.require(all_chi_nonnegative(b), "negative chi on torsion combination " + serialize_table(b));
    }
    for (int t = 0; t < 200; ++t) {
      const int n = rng.uniform(1, 4);
      const int s = rng.uniform(0, n);
      const auto d = gen::random_sequence(rng, rng.uniform(-2, 2), s + 1);
      std::vector<int> roots;
      int f = rng.uniform(-4, 6);
      for (int k = 0; k < s; ++k) {
        roots.push_back(f);
        f -= rng.uniform(1, 4);
      }
      const BettiTable p = pair(pure_diagram(d, n), supernatural(roots, 1, n), n);
      o.require(all_chi_nonnegative(p), "negative chi pairing " + to_string(d) + " on P^" + std::to_string(n));
    }
  });
  o.require(ms < kPositivityLimitMs, "positivity suite took " + std::to_string(ms) + " ms");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  gen::Rng rng(777);
  int done = 0;
  for (int attempt = 0; done < 200 && attempt < 5000; ++attempt) {
    const int n = rng.uniform(0, 3);
    const auto c = gen::random_codim(rng, n);
    const auto chain = gen::random_compatible_chain(rng, c, n, rng.uniform(1, 6));
    if (chain.empty()) continue;
    BettiTable b;
    for (const auto& d : chain) b = b + scale(pure_diagram(d), rng.positive_rational(9, 5));
    const auto dec = decompose_s(b, c, n);
    std::vector<DegreeSequence> found;
    for (const auto& p : dec.pieces) found.push_back(p.sequence);
    o.require(found == chain, "recovered chain differs from the generating chain");
    const auto solved = oracle::chain_coefficients(b, found);
    o.require(solved.has_value(), "oracle system not uniquely solvable");
    if (solved)
      for (std::size_t k = 0; k < found.size(); ++k)
        o.require((*solved)[k] == dec.pieces[k].coeff, "greedy and oracle coefficients differ");
    ++done;
  }
  o.require(done == 200, "only " + std::to_string(done) + " chains generated");
  return o;
}

Outcome multigraded() {
  Outcome o;
  gen::Rng rng(99);
  const auto order = GradedOrder::uniform(2);
  const double ms = timed([&] {
    const auto p = multi_pair(koszul_p1p1(), ProductSpace{{1, 1}, {{{0, 0}, 1}}});
    MultiBettiTable want(2);
    want.set(0, {0, 0}, 1);
    want.set(1, {2, 0}, 1);
    want.set(1, {0, 2}, 1);
    want.set(2, {2, 2}, 1);
    o.require(p == want, "pairing with O gave " + multi_table_to_json(p).dump());
    o.require(multi_chi_negatives(p, order).empty(), "negative multi_chi on the pairing with O");
    for (int t = 0; t < 20; ++t) {
      const int a = rng.uniform(-4, 4), b = rng.uniform(-4, 4);
      const auto q = multi_pair(koszul_p1p1(), ProductSpace{{1, 1}, {{{a, b}, 1}}});
      o.require(multi_chi_negatives(q, order).empty(),
                "negative multi_chi against O(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  });
  o.require(ms < kMultigradedLimitMs, "multigraded checks took " + std::to_string(ms) + " ms");
  return o;
}

Outcome round_trips() {
  Outcome o;
  gen::Rng rng(31337);
  for (int t = 0; t < 500; ++t) {
    const BettiTable b = gen::random_table(rng, rng.uniform(0, 10), rng.coin());
    o.require(parse_table(serialize_table(b)) == b, "text round trip failed");
    o.require(table_from_json(parse_json(table_to_json(b).dump())) == b, "JSON round trip failed");
  }
  for (int t = 0; t < 500; ++t) {
    const BettiTable b = gen::random_table(rng, rng.uniform(0, 10), false);
    o.require(dual(dual(b)) == b, "dual is not an involution");
  }
  for (int t = 0; t < 500; ++t) {
    const BettiTable b = gen::random_table(rng, rng.uniform(0, 10), false);
    const int k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
    o.require(shift(shift(b, k), l) == shift(b, k + l), "shift is not additive");
  }
  for (int t = 0; t < 500; ++t) {
    const int n = rng.uniform(1, 4);
    std::vector<int> roots;
    int f = rng.uniform(-3, 6);
    for (int k = rng.uniform(0, n); k > 0; --k) {
      roots.push_back(f);
      f -= rng.uniform(1, 4);
    }
    const CohomologyEvaluator e = supernatural(roots, rng.uniform(1, 5), n);
    const BettiTable x = gen::random_table(rng, 5, false), y = gen::random_table(rng, 5, false);
    const Rational a = rng.rational(5, 3), c = rng.rational(5, 3);
    o.require(pair(linear_combine({{a, x}, {c, y}}), e, n) == linear_combine({{a, pair(x, e, n)}, {c, pair(y, e, n)}}),
              "pairing is not bilinear");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pure diagrams", pure_diagrams},
      {"pairing golden values", pairing_golden},
      {"chi_{0,0} weight matrix of a supernatural bundle", weight_matrix},
      {"greedy decomposition golden values", decomposition_golden},
      {"membership contrast exit codes", membership_contrast},
      {"monad split", monad},
      {"infinite resolution prefix", infinite},
      {"chi positivity suite", positivity},
      {"greedy versus linear-solve oracle", oracle_equivalence},
      {"multigraded pairing and positivity", multigraded},
      {"round trips and algebra", round_trips},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(t0);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " (" << ms
              << " ms)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << '\n';
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
