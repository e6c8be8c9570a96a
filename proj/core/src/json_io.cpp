#include "bsfan/json_io.hpp"

#include <memory>
#include <set>

#include "bsfan/errors.hpp"

namespace bsfan {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError("expected an object holding '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key '" + key + "'");
  return *it;
}

int int_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError("key '" + key + "' must be an integer");
  auto x = v.get<long long>();
  if (x < -(1LL << 29) || x > (1LL << 29)) throw ParseError("key '" + key + "' is out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError("key '" + key + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError("key '" + key + "' must be an array of integers");
    auto y = x.get<long long>();
    if (y < -(1LL << 29) || y > (1LL << 29)) throw ParseError("key '" + key + "' has an out-of-range entry");
    out.push_back(static_cast<int>(y));
  }
  return out;
}

const Json& array_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError("key '" + key + "' must be an array");
  return v;
}

Json codim_value_to_json(CodimValue v) {
  if (v.is_empty()) return "empty";
  if (v.is_infinite()) return "inf";
  return v.value();
}

CodimValue codim_value_from_json(const Json& v, const std::string& key) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "empty") return CodimValue::empty();
    if (s == "inf") return CodimValue::infinity();
  } else if (v.is_number_integer()) {
    auto x = v.get<long long>();
    if (x >= 0 && x <= (1LL << 20)) return CodimValue::finite(static_cast<int>(x));
  }
  throw ParseError("key '" + key + "' must be \"empty\", \"inf\" or a nonnegative integer");
}

Json piece_list(const std::vector<PurePiece>& pieces) {
  Json out = Json::array();
  for (const auto& p : pieces)
    out.push_back({{"coeff", rational_to_json(p.coeff)}, {"degree_sequence", sequence_to_json(p.sequence)}});
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j, const std::string& key) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("key '" + key + "': " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("key '" + key + "' must be a rational string like \"3/2\"");
}

Json table_to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [cell, value] : table.entries())
    entries.push_back({{"i", cell.i}, {"j", cell.j}, {"value", rational_to_json(value)}});
  return {{"entries", entries}};
}

BettiTable table_from_json(const Json& j) {
  const Json& entries = array_field(j, "entries");
  BettiTable out;
  std::set<Cell> seen;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Json& e = entries[k];
    const std::string where = "entries[" + std::to_string(k) + "]";
    if (!e.is_object()) throw ParseError(where + " must be an object");
    const int i = int_field(e, "i");
    const int deg = int_field(e, "j");
    if (!seen.insert({i, deg}).second)
      throw ParseError("duplicate entry for (i,j) = (" + std::to_string(i) + "," + std::to_string(deg) + ") in " +
                       where);
    out.set(i, deg, rational_from_json(field(e, "value"), where + ".value"));
  }
  return out;
}

Json sequence_to_json(const DegreeSequence& d) { return {{"start", d.start()}, {"degrees", d.degrees()}}; }

DegreeSequence sequence_from_json(const Json& j) { return DegreeSequence(int_field(j, "start"), int_list(j, "degrees")); }

Json codim_to_json(const CodimensionSequence& c) {
  const auto& d = c.description();
  Json window = Json::array();
  for (auto v : d.window) window.push_back(codim_value_to_json(v));
  return {{"n", d.n},
          {"left", codim_value_to_json(d.left)},
          {"window_start", d.window_start},
          {"window", window},
          {"right", codim_value_to_json(d.right)}};
}

CodimensionSequence codim_from_json(const Json& j) {
  CodimDescription d;
  d.n = int_field(j, "n");
  if (j.contains("value")) {
    const auto v = codim_value_from_json(j["value"], "value");
    d.left = d.right = v;
    return validate_codim_sequence(d);
  }
  d.left = codim_value_from_json(field(j, "left"), "left");
  d.right = codim_value_from_json(field(j, "right"), "right");
  if (j.contains("window_start")) d.window_start = int_field(j, "window_start");
  if (j.contains("window")) {
    const Json& w = array_field(j, "window");
    for (std::size_t k = 0; k < w.size(); ++k)
      d.window.push_back(codim_value_from_json(w[k], "window[" + std::to_string(k) + "]"));
  }
  return validate_codim_sequence(d);
}

CohomologyEvaluator evaluator_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("key 'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "supernatural") {
    Rational rank = j.contains("rank_scale") ? rational_from_json(j["rank_scale"], "rank_scale") : Rational(1);
    return SupernaturalSheaf(int_list(j, "roots"), rank, int_field(j, "n"));
  }
  if (k == "twist") return twist_evaluator(int_field(j, "n"), int_field(j, "a"));
  if (k == "window") {
    CohomologyWindow w;
    w.dim = int_field(j, "dim");
    w.jmin = int_field(j, "jmin");
    w.jmax = int_field(j, "jmax");
    const Json& values = array_field(j, "entries");
    for (std::size_t n = 0; n < values.size(); ++n) {
      const std::string where = "entries[" + std::to_string(n) + "]";
      const int q = int_field(values[n], "q");
      const int deg = int_field(values[n], "j");
      if (!w.values.emplace(std::pair{q, deg}, rational_from_json(field(values[n], "value"), where + ".value")).second)
        throw ParseError("duplicate window entry for (q,j) = (" + std::to_string(q) + "," + std::to_string(deg) +
                         ") in " + where);
    }
    return CohomologyEvaluator(std::move(w));
  }
  if (k == "combination") {
    FormalCombination f;
    const Json& terms = array_field(j, "terms");
    for (std::size_t n = 0; n < terms.size(); ++n)
      f.terms.push_back({rational_from_json(field(terms[n], "coeff"), "terms[" + std::to_string(n) + "].coeff"),
                         std::make_shared<const CohomologyEvaluator>(evaluator_from_json(field(terms[n], "evaluator")))});
    return CohomologyEvaluator(std::move(f));
  }
  throw ParseError("unknown evaluator kind '" + k + "'");
}

Json decomposition_to_json(const Decomposition& d) {
  return {{"pieces", piece_list(d.pieces)}, {"remainder", table_to_json(d.remainder)}};
}

Json membership_to_json(const MembershipS& m) {
  Json out = {{"in_cone", m.in_cone}, {"decomposition", decomposition_to_json(m.decomposition)}};
  if (!m.in_cone) {
    out["reason"] = m.reason;
    out["blocking_strand"] = m.blocking_strand ? sequence_to_json(*m.blocking_strand) : Json(nullptr);
  }
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json list = Json::array();
  for (const auto& x : v.violations)
    list.push_back({{"kind", to_string(x.kind)}, {"i", x.i}, {"j", x.j}, {"value", rational_to_json(x.value)}});
  return {{"pass", v.pass()}, {"violations", list}};
}

Json a_pieces_to_json(const std::vector<APieceTerm>& pieces) {
  Json list = Json::array();
  for (const auto& t : pieces) {
    Json p = {{"coeff", rational_to_json(t.coeff)},
              {"kind", t.piece.kind == APiece::Kind::Free ? "free" : "torsion"},
              {"position", t.piece.position},
              {"gen_degree", t.piece.gen_degree}};
    if (t.piece.kind == APiece::Kind::Torsion) p["socle_degree"] = t.piece.socle_degree;
    list.push_back(p);
  }
  return {{"pieces", list}};
}

Json monad_to_json(const MonadSplit& m) {
  return {{"lambda1", rational_to_json(m.lambda1)}, {"tableF1", table_to_json(m.tableF1)},
          {"lambda2", rational_to_json(m.lambda2)}, {"tableF2", table_to_json(m.tableF2)},
          {"E", table_to_json(m.e_column)},         {"pieces1", piece_list(m.pieces1)},
          {"pieces2", piece_list(m.pieces2)}};
}

Json infinite_prefix_to_json(const InfinitePrefix& p) {
  return {{"pieces", piece_list(p.prefix.pieces)},
          {"confirmed", p.confirmed},
          {"remainder", table_to_json(p.prefix.remainder)}};
}

Json multi_table_to_json(const MultiBettiTable& table) {
  Json entries = Json::array();
  for (const auto& [cell, value] : table.entries())
    entries.push_back({{"i", cell.i}, {"alpha", cell.alpha}, {"value", rational_to_json(value)}});
  return {{"m", table.m()}, {"entries", entries}};
}

MultiBettiTable multi_table_from_json(const Json& j) {
  MultiBettiTable out(int_field(j, "m"));
  const Json& entries = array_field(j, "entries");
  std::set<MultiCell> seen;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "entries[" + std::to_string(k) + "]";
    const int i = int_field(entries[k], "i");
    auto alpha = int_list(entries[k], "alpha");
    if (static_cast<int>(alpha.size()) != out.m())
      throw ParseError(where + ".alpha has length " + std::to_string(alpha.size()) + ", expected " +
                       std::to_string(out.m()));
    if (!seen.insert({i, alpha}).second) throw ParseError("duplicate entry in " + where);
    out.set(i, alpha, rational_from_json(field(entries[k], "value"), where + ".value"));
  }
  return out;
}

GradedOrder order_from_json(const Json& j) { return GradedOrder(int_list(j, "weights")); }

ProductSpace product_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind != "product") throw ParseError("key 'kind' must be \"product\" for a multigraded evaluator");
  ProductSpace x;
  x.factor_dims = int_list(j, "dims");
  const Json& summands = array_field(j, "summands");
  for (std::size_t k = 0; k < summands.size(); ++k) {
    ProductSpace::Summand s;
    s.twist = int_list(summands[k], "twist");
    if (summands[k].contains("mult"))
      s.mult = rational_from_json(summands[k]["mult"], "summands[" + std::to_string(k) + "].mult");
    x.summands.push_back(std::move(s));
  }
  x.validate();
  return x;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace bsfan
