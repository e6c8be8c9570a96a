#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bsfan/cone_a.hpp"
#include "bsfan/cone_s.hpp"
#include "bsfan/diagrams.hpp"
#include "bsfan/json_io.hpp"
#include "bsfan/multigraded.hpp"
#include "bsfan/pairing.hpp"

namespace bsfan::cli {

namespace {

enum class Format { Json, Pretty };

struct Options {
  Format format = Format::Json;
  bool mark_origin = true;
  std::string table, codim, sheaf, sheaves;
  int n = -1;
  int start = 0;
  std::vector<int> degrees, roots, weights, alpha;
  std::string rank = "1";
  int i = 0, j = 0, k = 0, e = 0, tau = 0, kappa = 0;
  int jmin = 0, jmax = 0;
  bool have_i = false, have_j = false, have_jrange = false;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  const Options& opt;
};

/// Inline JSON when the argument starts like a JSON value, otherwise a path.
Json load_json(const std::string& arg, const std::string& what) {
  if (arg.empty()) throw ValidationError("missing --" + what);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + what + " file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

bool widen_from_env() {
  const char* v = std::getenv("BSFAN_DEBUG_WIDEN");
  return v != nullptr && std::string(v) == "1";
}

int require_n(const Options& o) {
  if (o.n < 0) throw ValidationError("--n is required and must be >= 0");
  return o.n;
}

void emit(const Io& io, const Json& j) { io.out << j.dump() << '\n'; }

std::string render_pieces(const std::vector<PurePiece>& pieces, bool mark) {
  std::string s;
  for (const auto& p : pieces) {
    s += format_rational(p.coeff) + " * " + to_string(p.sequence) + "\n";
    s += pretty_render(p.table(), mark);
  }
  return s;
}

std::string render_decomposition(const Decomposition& d, bool mark) {
  std::string s = render_pieces(d.pieces, mark);
  if (!d.remainder.empty()) s += "remainder:\n" + pretty_render(d.remainder, mark);
  return s;
}

std::string render_verdict(const Verdict& v) {
  if (v.pass()) return "pass\n";
  std::string s;
  for (const auto& x : v.violations)
    s += to_string(x.kind) + " at (" + std::to_string(x.i) + "," + std::to_string(x.j) + "): " +
         format_rational(x.value) + "\n";
  return s;
}

void emit_table(const Io& io, const BettiTable& t) {
  if (io.opt.format == Format::Pretty)
    io.out << pretty_render(t, io.opt.mark_origin);
  else
    emit(io, table_to_json(t));
}

void emit_value(const Io& io, const Rational& v) {
  if (io.opt.format == Format::Pretty)
    io.out << format_rational(v) << '\n';
  else
    emit(io, {{"value", rational_to_json(v)}});
}

/// Failure path: JSON certificate on stdout, summary on stderr.
int fail(const Io& io, const Json& certificate, const std::string& summary) {
  emit(io, certificate);
  io.err << summary << '\n';
  return 1;
}

BettiTable load_table(const Options& o) { return table_from_json(load_json(o.table, "table")); }

int cmd_pure(const Io& io) {
  const auto& o = io.opt;
  DegreeSequence d(o.start, o.degrees);
  emit_table(io, pure_diagram(d, o.n));
  return 0;
}

int cmd_supernatural(const Io& io) {
  const auto& o = io.opt;
  const int n = require_n(o);
  SupernaturalSheaf s(o.roots, parse_rational(o.rank), n);
  int lo = o.jmin, hi = o.jmax;
  if (!o.have_jrange) {
    lo = (o.roots.empty() ? 0 : o.roots.back()) - n - 1;
    hi = (o.roots.empty() ? 0 : o.roots.front()) + n + 1;
  }
  if (lo > hi) throw ValidationError("--jmin must not exceed --jmax");
  if (o.format == Format::Pretty) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"q\\j"};
    for (int j = lo; j <= hi; ++j) head.push_back(std::to_string(j));
    rows.push_back(head);
    for (int q = n; q >= 0; --q) {
      std::vector<std::string> row{std::to_string(q) + ":"};
      for (int j = lo; j <= hi; ++j) {
        Rational v = s.gamma(q, j);
        row.push_back(v == 0 ? "-" : format_rational(v));
      }
      rows.push_back(row);
    }
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c)
        line += (c ? " " : "") + std::string(w[c] - r[c].size(), ' ') + r[c];
      io.out << line << '\n';
    }
    return 0;
  }
  Json values = Json::array();
  for (int j = lo; j <= hi; ++j)
    for (int q = 0; q <= n; ++q) {
      Rational v = s.gamma(q, j);
      if (v != 0) values.push_back({{"q", q}, {"j", j}, {"value", rational_to_json(v)}});
    }
  emit(io, {{"roots", o.roots}, {"rank", rational_to_json(s.rank_scale())}, {"n", n}, {"jmin", lo}, {"jmax", hi},
            {"values", values}});
  return 0;
}

int cmd_pair(const Io& io) {
  const auto& o = io.opt;
  const auto sheaf = evaluator_from_json(load_json(o.sheaf, "sheaf"));
  emit_table(io, pair(load_table(o), sheaf, require_n(o)));
  return 0;
}

int cmd_chi(const Io& io) {
  const auto& o = io.opt;
  if (!o.have_i || !o.have_j) throw ValidationError("chi needs --i and --j");
  emit_value(io, chi(load_table(o), o.i, o.j));
  return 0;
}

int cmd_euler(const Io& io) {
  emit_value(io, euler(load_table(io.opt)));
  return 0;
}

int cmd_check_a(const Io& io) {
  const auto& o = io.opt;
  const auto c = codim_from_json(load_json(o.codim, "codim"));
  const Verdict v = membership_a(load_table(o), c, widen_from_env());
  if (!v.pass()) return fail(io, verdict_to_json(v), render_verdict(v));
  if (o.format == Format::Pretty)
    io.out << render_verdict(v);
  else
    emit(io, verdict_to_json(v));
  return 0;
}

int cmd_decompose_a(const Io& io) {
  const auto& o = io.opt;
  const auto c = codim_from_json(load_json(o.codim, "codim"));
  try {
    const auto pieces = decompose_a(load_table(o), c);
    if (o.format == Format::Pretty) {
      for (const auto& t : pieces) {
        io.out << format_rational(t.coeff) << " * " << to_string(t.piece.degree_sequence()) << '\n';
        io.out << pretty_render(t.piece.table(), o.mark_origin);
      }
    } else {
      emit(io, a_pieces_to_json(pieces));
    }
    return 0;
  } catch (const NotInConeA& e) {
    Json cert = a_pieces_to_json(e.partial());
    cert["blocking"] = {{"i", e.blocking().i}, {"j", e.blocking().j}};
    cert["reason"] = e.what();
    return fail(io, cert, std::string("not in cone: ") + e.what());
  }
}

int cmd_decompose(const Io& io) {
  const auto& o = io.opt;
  const int n = require_n(o);
  const auto c = codim_from_json(load_json(o.codim, "codim"));
  const MembershipS m = membership_s(load_table(o), c, n);
  if (!m.in_cone) return fail(io, membership_to_json(m), "not in cone: " + m.reason);
  if (o.format == Format::Pretty)
    io.out << render_decomposition(m.decomposition, o.mark_origin);
  else
    emit(io, decomposition_to_json(m.decomposition));
  return 0;
}

int cmd_check(const Io& io) {
  const auto& o = io.opt;
  const int n = require_n(o);
  const auto c = codim_from_json(load_json(o.codim, "codim"));
  const MembershipS m = membership_s(load_table(o), c, n);
  if (!m.in_cone) return fail(io, membership_to_json(m), "not in cone: " + m.reason);
  if (o.format == Format::Pretty)
    io.out << "in cone\n" << render_decomposition(m.decomposition, o.mark_origin);
  else
    emit(io, membership_to_json(m));
  return 0;
}

int cmd_monad(const Io& io) {
  const auto& o = io.opt;
  try {
    const MonadSplit m = monad_split(load_table(o), require_n(o));
    if (o.format == Format::Pretty) {
      io.out << "lambda1 = " << format_rational(m.lambda1) << '\n' << pretty_render(m.tableF1, o.mark_origin);
      io.out << "lambda2 = " << format_rational(m.lambda2) << '\n' << pretty_render(m.tableF2, o.mark_origin);
      io.out << "E:\n" << pretty_render(m.e_column, o.mark_origin);
    } else {
      emit(io, monad_to_json(m));
    }
    return 0;
  } catch (const MonadViolation& e) {
    return fail(io, {{"reason", e.what()}, {"E", table_to_json(e.e_column())}},
                std::string("not a monad table: ") + e.what());
  } catch (const NotInCone& e) {
    return fail(io, {{"reason", e.what()}, {"partial", decomposition_to_json(e.partial())}},
                std::string("not a monad table: ") + e.what());
  }
}

int cmd_infinite(const Io& io) {
  const auto& o = io.opt;
  try {
    const InfinitePrefix p = infinite_prefix(load_table(o), o.e, require_n(o));
    if (o.format == Format::Pretty) {
      io.out << render_pieces(p.prefix.pieces, o.mark_origin);
      io.out << "confirmed by the shorter truncation: " << p.confirmed << '\n';
    } else {
      emit(io, infinite_prefix_to_json(p));
    }
    return 0;
  } catch (const NotInCone& e) {
    return fail(io, {{"reason", e.what()}, {"partial", decomposition_to_json(e.partial())}},
                std::string("not in cone: ") + e.what());
  }
}

int cmd_es(const Io& io) {
  const auto& o = io.opt;
  const BettiTable t = load_table(o);
  const int nu = es_nu(o.roots, o.tau, o.kappa);
  const Rational v = es_functional(t, o.roots, parse_rational(o.rank), require_n(o), o.tau, o.kappa);
  if (o.format == Format::Pretty)
    io.out << format_rational(v) << '\n';
  else
    emit(io, {{"nu", nu}, {"value", rational_to_json(v)}});
  return 0;
}

int cmd_pair_check(const Io& io) {
  const auto& o = io.opt;
  const Json list = load_json(o.sheaves, "sheaves");
  if (!list.is_array()) throw ParseError("--sheaves must be a JSON array of evaluators");
  std::vector<CohomologyEvaluator> sheaves;
  for (const auto& s : list) sheaves.push_back(evaluator_from_json(s));
  const auto verdicts = pair_check(load_table(o), sheaves, require_n(o), widen_from_env());
  Json results = Json::array();
  bool all = true;
  std::string summary;
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    results.push_back(verdict_to_json(verdicts[k]));
    all = all && verdicts[k].pass();
    summary += "sheaf " + std::to_string(k) + ": " + render_verdict(verdicts[k]);
  }
  Json out = {{"pass", all}, {"results", results}};
  if (!all) return fail(io, out, summary);
  if (o.format == Format::Pretty)
    io.out << summary;
  else
    emit(io, out);
  return 0;
}

int cmd_dual(const Io& io) {
  emit_table(io, dual(load_table(io.opt)));
  return 0;
}

int cmd_shift(const Io& io) {
  emit_table(io, shift(load_table(io.opt), io.opt.k));
  return 0;
}

int cmd_render(const Io& io) {
  io.out << pretty_render(load_table(io.opt), io.opt.mark_origin);
  return 0;
}

GradedOrder load_order(const Options& o, int m) {
  if (o.weights.empty()) return GradedOrder::uniform(m);
  if (static_cast<int>(o.weights.size()) != m)
    throw ValidationError("--weights needs " + std::to_string(m) + " entries");
  return GradedOrder(o.weights);
}

int cmd_multi_chi(const Io& io) {
  const auto& o = io.opt;
  const MultiBettiTable t = multi_table_from_json(load_json(o.table, "table"));
  const GradedOrder order = load_order(o, t.m());
  if (o.have_i) {
    if (static_cast<int>(o.alpha.size()) != t.m())
      throw ValidationError("--alpha needs " + std::to_string(t.m()) + " entries");
    emit_value(io, multi_chi(t, o.i, o.alpha, order));
    return 0;
  }
  // Whole-window positivity report.
  const auto negatives = multi_chi_negatives(t, order);
  Json list = Json::array();
  std::string summary;
  for (const auto& v : negatives) {
    list.push_back({{"i", v.i}, {"alpha", v.alpha}, {"value", rational_to_json(v.value)}});
    summary += "negative chi at i=" + std::to_string(v.i) + ": " + format_rational(v.value) + "\n";
  }
  Json out = {{"pass", negatives.empty()}, {"negatives", list}};
  if (!negatives.empty()) return fail(io, out, summary);
  if (o.format == Format::Pretty)
    io.out << "pass\n";
  else
    emit(io, out);
  return 0;
}

int cmd_multi_pair(const Io& io) {
  const auto& o = io.opt;
  const MultiBettiTable t = multi_table_from_json(load_json(o.table, "table"));
  const ProductSpace x = product_from_json(load_json(o.sheaf, "sheaf"));
  const MultiBettiTable r = multi_pair(t, x);
  if (o.format == Format::Pretty) {
    for (const auto& [cell, value] : r.entries()) {
      io.out << cell.i << " (";
      for (std::size_t k = 0; k < cell.alpha.size(); ++k) io.out << (k ? "," : "") << cell.alpha[k];
      io.out << "): " << format_rational(value) << '\n';
    }
  } else {
    emit(io, multi_table_to_json(r));
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int(const Io&)> handler;

  CLI::App app{"Exact Betti table and cohomology table computations", "bsfan"};
  app.require_subcommand(1);
  std::map<std::string, Format> formats{{"json", Format::Json}, {"pretty", Format::Pretty}};

  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(const Io&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "json or pretty")->transform(CLI::CheckedTransformer(formats));
    s->add_flag("--mark-origin,!--no-mark-origin", o.mark_origin, "mark position 0 in pretty grids");
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  auto table_opt = [&](CLI::App* s) { s->add_option("--table", o.table, "table JSON file or inline JSON")->required(); };
  auto n_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--n", o.n, "ambient dimension n (S has n+1 variables)");
    if (required) opt->required();
  };
  auto codim_opt = [&](CLI::App* s) { s->add_option("--codim", o.codim, "codimension sequence JSON")->required(); };

  auto* pure = sub("pure", "pure diagram of a degree sequence", cmd_pure);
  pure->add_option("--start", o.start, "homological position of the first degree");
  pure->add_option("--degrees", o.degrees, "strictly increasing degrees")->delimiter(',')->required();
  n_opt(pure, false);

  auto* super = sub("supernatural", "cohomology table of a supernatural sheaf", cmd_supernatural);
  super->add_option("--roots", o.roots, "strictly decreasing roots")->delimiter(',');
  super->add_option("--rank", o.rank, "rank scale r");
  n_opt(super, true);
  auto* jmin = super->add_option("--jmin", o.jmin, "first twist shown");
  auto* jmax = super->add_option("--jmax", o.jmax, "last twist shown");
  jmin->needs(jmax);
  jmax->needs(jmin);

  auto* pr = sub("pair", "Betti table over A of a complex paired with a sheaf", cmd_pair);
  table_opt(pr);
  pr->add_option("--sheaf", o.sheaf, "cohomology evaluator JSON")->required();
  n_opt(pr, true);

  auto* ch = sub("chi", "chi functional at (i, j)", cmd_chi);
  table_opt(ch);
  ch->add_option("--i", o.i)->required();
  ch->add_option("--j", o.j)->required();

  auto* eu = sub("euler", "alternating sum of the table", cmd_euler);
  table_opt(eu);

  auto* ca = sub("check-a", "membership of a table over A", cmd_check_a);
  table_opt(ca);
  codim_opt(ca);

  auto* da = sub("decompose-a", "decomposition of a table over A into free and torsion pieces", cmd_decompose_a);
  table_opt(da);
  codim_opt(da);

  auto* de = sub("decompose", "greedy pure-diagram decomposition", cmd_decompose);
  table_opt(de);
  codim_opt(de);
  n_opt(de, true);

  auto* ck = sub("check", "cone membership with certificate", cmd_check);
  table_opt(ck);
  codim_opt(ck);
  n_opt(ck, true);

  auto* mo = sub("monad", "split the table of a free monad", cmd_monad);
  table_opt(mo);
  n_opt(mo, true);

  auto* in = sub("infinite", "stable decomposition prefix of a truncated resolution", cmd_infinite);
  table_opt(in);
  in->add_option("--e", o.e, "last column of the truncation")->required();
  n_opt(in, true);

  auto* es = sub("es", "Eisenbud-Schreyer functional via chi", cmd_es);
  table_opt(es);
  es->add_option("--roots", o.roots)->delimiter(',')->required();
  es->add_option("--rank", o.rank);
  es->add_option("--tau", o.tau)->required();
  es->add_option("--kappa", o.kappa)->required();
  n_opt(es, true);

  auto* pc = sub("pair-check", "pair with each sheaf and check the results over A", cmd_pair_check);
  table_opt(pc);
  pc->add_option("--sheaves", o.sheaves, "JSON array of cohomology evaluators")->required();
  n_opt(pc, true);

  table_opt(sub("dual", "(i, j) -> (-i, -j)", cmd_dual));

  auto* sh = sub("shift", "(i, j) -> (i + k, j)", cmd_shift);
  table_opt(sh);
  sh->add_option("--k", o.k)->required();

  table_opt(sub("render", "pretty grid of a table", cmd_render));

  auto* mc = sub("multi-chi", "multigraded chi at a point, or a positivity scan", cmd_multi_chi);
  table_opt(mc);
  mc->add_option("--weights", o.weights, "positive order weights")->delimiter(',');
  auto* mi = mc->add_option("--i", o.i);
  auto* ma = mc->add_option("--alpha", o.alpha)->delimiter(',');
  mi->needs(ma);
  ma->needs(mi);

  auto* mp = sub("multi-pair", "multigraded pairing with a sum of line bundles on a product", cmd_multi_pair);
  table_opt(mp);
  mp->add_option("--sheaf", o.sheaf, "product evaluator JSON")->required();
  mp->add_option("--weights", o.weights)->delimiter(',');

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const auto subs = app.get_subcommands({});
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args[0]; });
    if (!known) {
      err << "bsfan: unknown subcommand '" << args[0] << "'\n\n" << app.help();
      return 2;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "bsfan: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  for (auto* s : app.get_subcommands()) {
    auto given = [s](const std::string& name) {
      const auto* opt = s->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    o.have_i = given("--i");
    o.have_j = given("--j");
    o.have_jrange = given("--jmin");
  }

  try {
    return handler(Io{out, err, o});
  } catch (const Error& e) {
    err << "bsfan: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bsfan::cli
