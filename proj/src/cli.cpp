#include "lalg/cli.hpp"

#include "lalg/enumerate.hpp"
#include "lalg/json_io.hpp"
#include "lalg/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace lalg::cli {

namespace {

namespace fs = std::filesystem;
using io::OrderedJson;

struct Options {
  std::string command;
  std::string input;
  std::string given;
  std::string xi;
  std::string mode = "strict";
  std::string format = "text";
  std::string out;
  std::string log_base = "2";
  std::optional<double> tolerance;
  std::size_t truncation = kDefaultTruncation;
  std::size_t max_blocks = kDefaultMaxBlocks;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t order = 0;
  bool up_to_iso = false;
  bool enumerate = false;
  bool records = false;
  std::string bundle = "paper";

  Mode parsed_mode() const {
    return mode == "lenient" ? Mode::lenient : Mode::strict;
  }
  LogBase base() const { return log_base == "e" ? LogBase::e : LogBase::two; }
  double tol(double fallback) const { return tolerance.value_or(fallback); }
};

/// One command's result in every output format.
struct Output {
  OrderedJson json = OrderedJson::object();
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> csv;
  int status = kExitOk;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string names_of(const FiniteLAlgebra& A, const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += A.name(xs[i]);
  }
  return out + ")";
}

OrderedJson name_array(const FiniteLAlgebra& A, const std::vector<Element>& xs) {
  OrderedJson j = OrderedJson::array();
  for (auto x : xs) j.push_back(A.name(x));
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void stamp_mode(Output& o, Mode mode) {
  o.json["mode"] = std::string(to_string(mode));
  if (mode == Mode::lenient) {
    o.text.insert(o.text.begin(), "mode: lenient (axiom 5 not enforced)");
  }
}

fs::path base_of(const std::string& path) {
  return fs::path(path).parent_path();
}

// ---------------------------------------------------------------- check

Output cmd_check(const Options& opt) {
  const auto doc = io::load_document(opt.input);
  const auto table = io::raw_table_from_json(doc);
  const auto report = check_axioms(table);
  const auto mode = opt.parsed_mode();
  const bool ok =
      mode == Mode::strict ? report.passed() : report.passed_except(5);

  Output o;
  auto name = [&](Element x) { return table.names.at(x); };
  o.text.push_back("elements: " + std::to_string(table.size()));
  o.text.push_back("unit: " + name(table.unit));
  o.text.push_back("zero: " + (table.zero ? name(*table.zero) : "none"));
  OrderedJson violations = OrderedJson::array();
  o.csv.push_back({"axiom", "witness"});
  for (const auto& v : report.violations) {
    std::string w = "(";
    OrderedJson wj = OrderedJson::array();
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) w += ",";
      w += name(v.witness[i]);
      wj.push_back(name(v.witness[i]));
    }
    w += ")";
    o.text.push_back("axiom (" + std::to_string(v.axiom) + ") fails at " + w);
    violations.push_back({{"axiom", v.axiom}, {"witness", wj}});
    o.csv.push_back({std::to_string(v.axiom), w});
  }
  o.text.push_back(std::string("L-algebra: ") + (ok ? "valid" : "invalid"));
  o.json["elements"] = table.names;
  o.json["unit"] = name(table.unit);
  o.json["zero"] = table.zero ? OrderedJson(name(*table.zero)) : OrderedJson();
  o.json["valid"] = ok;
  o.json["violations"] = violations;
  stamp_mode(o, mode);
  o.status = ok ? kExitOk : kExitClaimFailed;
  return o;
}

// ---------------------------------------------------------------- order

Output cmd_order(const Options& opt) {
  const auto A = io::algebra_from_json(io::load_document(opt.input),
                                       opt.parsed_mode(), base_of(opt.input));
  const auto rel = induced_order(A);
  Output o;
  OrderedJson pairs = OrderedJson::array();
  o.csv.push_back({"lower", "upper"});
  for (auto [x, y] : rel.pairs()) {
    if (x == y) continue;
    o.text.push_back(A.name(x) + " <= " + A.name(y));
    pairs.push_back({A.name(x), A.name(y)});
    o.csv.push_back({A.name(x), A.name(y)});
  }
  const auto least = least_element(A);
  o.text.push_back(std::string("partial order: ") +
                   (rel.is_partial_order() ? "yes" : "no"));
  o.text.push_back("least element: " + (least ? A.name(*least) : "none"));
  o.json["pairs"] = pairs;
  o.json["partial_order"] = rel.is_partial_order();
  o.json["least"] = least ? OrderedJson(A.name(*least)) : OrderedJson();
  stamp_mode(o, A.mode());
  return o;
}

// ---------------------------------------------------------------- operators

OrderedJson operator_json(const UnaryOperator& l) {
  auto j = io::to_json(l);
  const bool closure = is_closure_operator(l);
  j["closure"] = closure;
  if (closure) j["simple"] = name_array(l.algebra(), simple_elements(l));
  return j;
}

Output cmd_operators(const Options& opt) {
  const auto doc = io::load_document(opt.input);
  const auto mode = opt.parsed_mode();
  Output o;
  if (doc.contains("map")) {
    const auto l = io::operator_from_json(doc, mode, base_of(opt.input));
    const auto& A = l.algebra();
    const bool closure = is_closure_operator(l);
    o.text.push_back("operator: " + describe(l));
    o.text.push_back(std::string("extensive: ") + (is_extensive(l) ? "yes" : "no"));
    o.text.push_back(std::string("monotone: ") + (is_monotone(l) ? "yes" : "no"));
    o.text.push_back(std::string("idempotent: ") + (is_idempotent(l) ? "yes" : "no"));
    o.text.push_back(std::string("closure operator: ") + (closure ? "yes" : "no"));
    o.json["operator"] = io::to_json(l);
    o.json["extensive"] = is_extensive(l);
    o.json["monotone"] = is_monotone(l);
    o.json["idempotent"] = is_idempotent(l);
    o.json["closure"] = closure;
    o.csv.push_back({"property", "value"});
    o.csv.push_back({"closure", closure ? "yes" : "no"});
    if (closure) {
      const auto simple = simple_elements(l);
      const bool inf = check_inf_simple_characterization(l).holds();
      o.text.push_back("simple elements: " + names_of(A, simple));
      o.text.push_back(std::string("l(a) = inf of simple elements above a: ") +
                       (inf ? "holds" : "fails"));
      o.json["simple"] = name_array(A, simple);
      o.json["inf_simple"] = inf;
      o.csv.push_back({"simple", names_of(A, simple)});
    }
    stamp_mode(o, mode);
    o.status = closure ? kExitOk : kExitClaimFailed;
    return o;
  }

  const auto A = io::algebra_from_json(doc, mode, base_of(opt.input));
  o.csv.push_back({"operator", "closure", "maximal", "simple"});
  if (opt.enumerate) {
    const auto omega = enumerate_closure_operators(A, opt.max_order);
    const auto maximal = maximal_operators(omega);
    o.text.push_back("closure operators: " + std::to_string(omega.size()));
    OrderedJson ops = OrderedJson::array();
    for (const auto& l : omega.operators()) {
      const auto simple = names_of(A, simple_elements(l));
      o.text.push_back("  " + describe(l) + "  simple " + simple);
      ops.push_back(operator_json(l));
      const bool is_max =
          std::find(maximal.maximal.begin(), maximal.maximal.end(), l) !=
          maximal.maximal.end();
      o.csv.push_back({describe(l), "yes", is_max ? "yes" : "no", simple});
    }
    o.text.push_back(std::string("constant 1 is greatest: ") +
                     (omega.top_is_greatest() ? "yes" : "no"));
    o.text.push_back("maximal below the top: " +
                     std::to_string(maximal.maximal.size()));
    OrderedJson maxj = OrderedJson::array();
    for (const auto& l : maximal.maximal) {
      o.text.push_back("  " + describe(l));
      maxj.push_back(io::to_json(l));
    }
    o.json["count"] = omega.size();
    o.json["operators"] = ops;
    o.json["top_is_greatest"] = omega.top_is_greatest();
    o.json["maximal"] = maxj;
    OrderedJson two = OrderedJson::array();
    o.text.push_back("two-valued operators l_a:");
    for (const auto& e : maximal.two_valued) {
      o.text.push_back("  l_" + A.name(e.a) + " = " + describe(e.op) +
                       "  closure " + (e.closure ? "yes" : "no") +
                       ", maximal " + (e.maximal ? "yes" : "no"));
      two.push_back({{"a", A.name(e.a)},
                     {"operator", io::to_json(e.op)},
                     {"closure", e.closure},
                     {"maximal", e.maximal}});
    }
    o.json["two_valued"] = two;
  } else {
    OrderedJson two = OrderedJson::array();
    o.text.push_back("two-valued operators l_a:");
    for (Element a = 0; a < A.size(); ++a) {
      if (a == A.unit()) continue;
      const auto l = l_a_operator(A, a);
      const bool closure = is_closure_operator(l);
      o.text.push_back("  l_" + A.name(a) + " = " + describe(l) + "  closure " +
                       (closure ? "yes" : "no"));
      two.push_back({{"a", A.name(a)},
                     {"operator", io::to_json(l)},
                     {"closure", closure}});
      o.csv.push_back({describe(l), closure ? "yes" : "no", "", ""});
    }
    o.json["two_valued"] = two;
  }
  stamp_mode(o, mode);
  return o;
}

// ---------------------------------------------------------------- partitions

std::vector<std::string> partition_row(const Partition& p, LogBase base) {
  std::string measures;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) measures += " ";
    measures += to_string(p.measure(i));
  }
  return {describe(p), measures, num(entropy(p, base).value)};
}

Output cmd_partitions(const Options& opt) {
  const auto doc = io::load_document(opt.input);
  const auto mode = opt.parsed_mode();
  Output o;
  o.csv.push_back({"partition", "measures", "entropy"});
  std::vector<Partition> parts;
  std::optional<State> state;
  if (doc.contains("blocks")) {
    parts.push_back(io::partition_from_json(doc, mode, base_of(opt.input)));
  } else {
    state = io::state_from_json(doc, mode, base_of(opt.input));
    parts = enumerate_partitions(*state, opt.max_blocks);
    o.text.push_back("partitions with at most " +
                     std::to_string(opt.max_blocks) +
                     " blocks: " + std::to_string(parts.size()));
    o.json["max_blocks"] = opt.max_blocks;
  }
  OrderedJson list = OrderedJson::array();
  for (const auto& p : parts) {
    auto row = partition_row(p, opt.base());
    o.text.push_back(row[0] + "  m = " + row[1] + "  H = " + row[2]);
    OrderedJson j;
    j["blocks"] = io::to_json(p);
    j["entropy"] = io::number(entropy(p, opt.base()).value);
    list.push_back(j);
    o.csv.push_back(std::move(row));
  }
  o.json["partitions"] = list;
  o.json["log_base"] = std::string(to_string(opt.base()));
  stamp_mode(o, parts.empty() ? state->algebra().mode()
                              : parts.front().algebra().mode());
  return o;
}

// ---------------------------------------------------------------- entropy

Output cmd_entropy(const Options& opt) {
  const auto mode = opt.parsed_mode();
  const auto xi = io::partition_from_json(io::load_document(opt.input), mode,
                                          base_of(opt.input));
  const auto base = opt.base();
  Output o;
  o.csv.push_back({"quantity", "value"});
  auto put = [&](const std::string& key, const std::string& label, double v) {
    o.text.push_back(label + " = " + num(v));
    o.json[key] = io::number(v);
    o.csv.push_back({key, num(v)});
  };
  o.text.push_back("xi = " + describe(xi));
  o.json["xi"] = io::to_json(xi);
  put("H(xi)", "H(xi)", entropy(xi, base).value);
  if (!opt.given.empty()) {
    const auto eta = io::partition_from_json(io::load_document(opt.given), mode,
                                             base_of(opt.given));
    require_same_state(xi, eta);
    o.text.push_back("eta = " + describe(eta));
    o.json["eta"] = io::to_json(eta);
    put("H(eta)", "H(eta)", entropy(eta, base).value);
    put("H(xi|eta)", "H(xi|eta)", conditional_entropy(xi, eta, base).value);
    put("I(xi,eta)", "I(xi,eta)", info_gain(xi, eta, base).value);
    const auto join = check_join(xi, eta);
    if (join.is_partition) {
      put("H(xi v eta)", "H(xi v eta)",
          entropy(validate_partition(join.blocks, xi.state()), base).value);
    } else {
      o.text.push_back("xi v eta is not a partition");
      o.json["H(xi v eta)"] = nullptr;
    }
    const auto bayes = bayes_against(xi, eta);
    o.text.push_back(std::string("Bayes property of xi against eta: ") +
                     (bayes.def_holds ? "holds" : "fails"));
    o.json["bayes"] = bayes.def_holds;
    o.text.push_back(std::string("interior subset xi <=o eta: ") +
                     (interior_subset(xi, eta) ? "yes" : "no"));
    o.json["interior_subset"] = interior_subset(xi, eta);
  }
  o.json["log_base"] = std::string(to_string(base));
  stamp_mode(o, xi.algebra().mode());
  return o;
}

// ---------------------------------------------------------------- dynamics

Partition load_xi(const std::string& path, const LSystem& sys, Mode mode) {
  const auto doc = io::load_document(path);
  if (doc.contains("state")) {
    auto p = io::partition_from_json(doc, mode, base_of(path));
    if (!(p.state() == sys.state())) {
      throw StructuralError("partition and system carry different states");
    }
    return p;
  }
  return validate_partition(io::blocks_from_json(doc.at("blocks"), sys.algebra()),
                            sys.state());
}

OrderedJson number_array(const std::vector<double>& xs) {
  OrderedJson j = OrderedJson::array();
  for (double x : xs) j.push_back(io::number(x));
  return j;
}

Output cmd_dynamics(const Options& opt) {
  const auto mode = opt.parsed_mode();
  const auto sys = io::system_from_json(io::load_document(opt.input), mode,
                                        base_of(opt.input));
  const double tol = opt.tol(kDynamicalTolerance);
  const auto base = opt.base();
  Output o;
  o.json["system"] = io::to_json(sys);
  o.json["truncation"] = opt.truncation;
  o.json["max_blocks"] = opt.max_blocks;
  o.json["tolerance"] = tol;
  o.text.push_back("T = " + describe(sys.map()));
  o.text.push_back("truncation N = " + std::to_string(opt.truncation) +
                   ", block cap = " + std::to_string(opt.max_blocks));
  o.csv.push_back({"quantity", "n", "value"});

  if (!opt.xi.empty()) {
    const auto xi = load_xi(opt.xi, sys, mode);
    const auto est = entropy_rate(sys, xi, opt.truncation, tol, base);
    o.text.push_back("xi = " + describe(xi));
    for (std::size_t n = 0; n < est.values.size(); ++n) {
      o.text.push_back("  n = " + std::to_string(n + 1) + "  a_n = " +
                       num(est.values[n]) + "  c_n = " + num(est.conditional[n]));
      o.csv.push_back({"a_n", std::to_string(n + 1), num(est.values[n])});
      o.csv.push_back({"c_n", std::to_string(n + 1), num(est.conditional[n])});
    }
    o.text.push_back("h(T, xi) ~ " + num(est.estimate) + " (conditional, " +
                     (est.conditional_converged ? "converged" : "not converged") +
                     ")");
    o.text.push_back("a_N / N = " + num(est.rate) + " (" +
                     (est.converged ? "converged" : "not converged") + ")");
    o.text.push_back(std::string("joins valid: ") + (est.joins_valid ? "yes" : "no"));
    std::string cert = est.subadditive ? "holds" : "fails";
    if (est.subadditivity_witness) {
      cert += " at (n, p) = (" + std::to_string(est.subadditivity_witness->first) +
              ", " + std::to_string(est.subadditivity_witness->second) + ")";
    }
    o.text.push_back("subadditivity a_{n+p} <= a_n + a_p: " + cert);
    o.csv.push_back({"h(T,xi)", std::to_string(opt.truncation), num(est.estimate)});
    OrderedJson e;
    e["xi"] = io::to_json(xi);
    e["a_n"] = number_array(est.values);
    e["c_n"] = number_array(est.conditional);
    e["estimate"] = io::number(est.estimate);
    e["conditional_converged"] = est.conditional_converged;
    e["cesaro"] = io::number(est.rate);
    e["cesaro_converged"] = est.converged;
    e["joins_valid"] = est.joins_valid;
    e["subadditive"] = est.subadditive;
    o.json["rate"] = e;
    if (!est.subadditive) o.status = kExitClaimFailed;
  }

  const auto h = system_entropy(sys, opt.max_blocks, opt.truncation, tol, base);
  o.text.push_back("h(T) ~ " + num(h.value) + " over " +
                   std::to_string(h.evaluated) + " partitions (" +
                   std::to_string(h.excluded) + " excluded, " +
                   (h.all_converged ? "all converged" : "not all converged") +
                   ")");
  if (h.argmax) o.text.push_back("  attained at " + describe(*h.argmax));
  o.csv.push_back({"h(T)", std::to_string(opt.truncation), num(h.value)});
  OrderedJson hj;
  hj["value"] = io::number(h.value);
  hj["argmax"] = h.argmax ? io::to_json(*h.argmax) : OrderedJson();
  hj["evaluated"] = h.evaluated;
  hj["excluded"] = h.excluded;
  hj["all_converged"] = h.all_converged;
  o.json["h"] = hj;
  o.json["log_base"] = std::string(to_string(base));
  stamp_mode(o, sys.algebra().mode());
  return o;
}

// ---------------------------------------------------------------- enumerate

std::string table_line(const RawTable& t) {
  std::string s;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x) s += " | ";
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (y) s += " ";
      s += t.names[t.arrow[x][y]];
    }
  }
  return s;
}

Output cmd_enumerate(const Options& opt) {
  if (opt.order == 0) throw ContractError("--order must be at least 1");
  EnumerateOptions eo;
  eo.up_to_iso = opt.up_to_iso;
  eo.max_order = opt.max_order;
  const auto tables = enumerate_tables(opt.order, eo);
  Output o;
  o.text.push_back("order " + std::to_string(opt.order) + ": " +
                   std::to_string(tables.size()) + " L-algebras" +
                   (opt.up_to_iso ? " up to isomorphism" : " (labeled)"));
  o.csv.push_back({"index", "rows"});
  OrderedJson list = OrderedJson::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    o.text.push_back("  " + std::to_string(i + 1) + ": " + table_line(tables[i]));
    o.csv.push_back({std::to_string(i + 1), table_line(tables[i])});
    OrderedJson j;
    j["elements"] = tables[i].names;
    j["unit"] = tables[i].names[tables[i].unit];
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : tables[i].arrow) {
      OrderedJson r = OrderedJson::array();
      for (auto v : row) r.push_back(tables[i].names[v]);
      rows.push_back(r);
    }
    j["arrow"] = rows;
    list.push_back(j);
  }
  o.json["order"] = opt.order;
  o.json["up_to_iso"] = opt.up_to_iso;
  o.json["count"] = tables.size();
  o.json["tables"] = list;
  return o;
}

// ---------------------------------------------------------------- verify

Output cmd_verify(const Options& opt) {
  VerifyOptions vo;
  vo.base = opt.base();
  vo.tolerance = opt.tol(kStructuralTolerance);
  vo.truncation = opt.truncation;
  vo.max_blocks = opt.max_blocks;
  const auto report = run_bundle(opt.bundle, vo);

  Output o;
  o.text.push_back("bundle: " + report.bundle);
  for (const auto& s : report.lenient_scenarios) {
    o.text.push_back("lenient scenario: " + s);
  }
  o.csv.push_back({"id", "verdict", "holds", "fails", "hypothesis_not_met",
                   "not_assertable", "scenario", "witness", "statement"});
  OrderedJson claims = OrderedJson::array();
  std::map<Verdict, std::size_t> tally;
  for (const auto& c : report.claims) {
    ++tally[c.verdict];
    std::string scenario, detail;
    if (c.representative) {
      scenario = c.representative->scenario;
      detail = !c.representative->witness.empty() ? c.representative->witness
                                                  : c.representative->note;
    }
    std::string line = c.id + "  " + std::string(to_string(c.verdict)) + "  [" +
                       std::to_string(c.holds) + " holds, " +
                       std::to_string(c.fails) + " fails, " +
                       std::to_string(c.not_met) + " not met, " +
                       std::to_string(c.not_assertable) + " not assertable]";
    o.text.push_back(line);
    o.text.push_back("    " + c.statement);
    if (c.verdict == Verdict::fails || c.verdict == Verdict::not_assertable) {
      o.text.push_back("    " + scenario + ": " + detail);
    }
    o.csv.push_back({c.id, std::string(to_string(c.verdict)),
                     std::to_string(c.holds), std::to_string(c.fails),
                     std::to_string(c.not_met), std::to_string(c.not_assertable),
                     scenario, detail, c.statement});
    OrderedJson j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["verdict"] = std::string(to_string(c.verdict));
    j["counts"] = {{"holds", c.holds},
                   {"fails", c.fails},
                   {"hypothesis_not_met", c.not_met},
                   {"not_assertable", c.not_assertable}};
    j["representative"] =
        c.representative ? io::to_json(*c.representative) : OrderedJson();
    claims.push_back(j);
  }
  o.text.push_back("claims: " + std::to_string(report.claims.size()) +
                   ", holds: " + std::to_string(tally[Verdict::holds]) +
                   ", fails: " + std::to_string(tally[Verdict::fails]) +
                   ", hypothesis-not-met: " +
                   std::to_string(tally[Verdict::hypothesis_not_met]) +
                   ", not-assertable: " +
                   std::to_string(tally[Verdict::not_assertable]));
  o.json["bundle"] = report.bundle;
  o.json["lenient_scenarios"] = report.lenient_scenarios;
  o.json["claims"] = claims;
  o.json["failures"] = report.failures();
  if (opt.records) {
    OrderedJson recs = OrderedJson::array();
    for (const auto& r : report.records) recs.push_back(io::to_json(r));
    o.json["records"] = recs;
  }
  o.status = report.passed() ? kExitOk : kExitClaimFailed;
  return o;
}

// ---------------------------------------------------------------- driver

std::string render(const Output& o, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    s << o.json.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& row : o.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s << ",";
        s << csv_field(row[i]);
      }
      s << "\n";
    }
  } else {
    for (const auto& line : o.text) s << line << "\n";
  }
  return s.str();
}

void add_common(CLI::App* app, Options& opt) {
  app->add_option("--mode", opt.mode, "strict or lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));
  app->add_option("--format", opt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", opt.out, "write the report to a file");
  app->add_option("--log-base", opt.log_base, "2 or e")
      ->check(CLI::IsMember({"2", "e"}));
  app->add_option("--tol", opt.tolerance, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option("--N", opt.truncation, "truncation for entropy rates")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-blocks", opt.max_blocks, "block-count cap")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-order", opt.max_order, "carrier-size cap")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Finite L-algebras: axioms, closure operators, entropy, dynamics",
               "lalg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* check = app.add_subcommand("check", "validate an algebra table");
  check->add_option("algebra", opt.input)->required();
  auto* order = app.add_subcommand("order", "print the induced order");
  order->add_option("algebra", opt.input)->required();
  auto* ops = app.add_subcommand("operators", "closure operators");
  ops->add_option("document", opt.input, "algebra or operator document")
      ->required();
  ops->add_flag("--enumerate", opt.enumerate, "materialize every closure operator");
  auto* parts = app.add_subcommand("partitions", "validate or enumerate partitions");
  parts->add_option("document", opt.input, "partition or state document")
      ->required();
  auto* ent = app.add_subcommand("entropy", "entropy and information gain");
  ent->add_option("partition", opt.input)->required();
  ent->add_option("--given", opt.given, "conditioning partition");
  auto* dyn = app.add_subcommand("dynamics", "entropy of a dynamical system");
  dyn->add_option("system", opt.input)->required();
  dyn->add_option("--xi", opt.xi, "partition document");
  auto* en = app.add_subcommand("enumerate", "enumerate L-algebras of one order");
  en->add_option("--order", opt.order)->required()->check(CLI::PositiveNumber);
  en->add_flag("--up-to-iso", opt.up_to_iso, "one table per isomorphism class");
  auto* ver = app.add_subcommand("verify", "run a claim bundle");
  ver->add_option("--bundle", opt.bundle)->check(CLI::IsMember(bundle_names()));
  ver->add_flag("--records", opt.records, "include every record in JSON output");
  for (auto* sub : app.get_subcommands({})) add_common(sub, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto* chosen = app.get_subcommands().front();
  opt.command = chosen->get_name();
  try {
    Output o;
    if (opt.command == "check") o = cmd_check(opt);
    else if (opt.command == "order") o = cmd_order(opt);
    else if (opt.command == "operators") o = cmd_operators(opt);
    else if (opt.command == "partitions") o = cmd_partitions(opt);
    else if (opt.command == "entropy") o = cmd_entropy(opt);
    else if (opt.command == "dynamics") o = cmd_dynamics(opt);
    else if (opt.command == "enumerate") o = cmd_enumerate(opt);
    else o = cmd_verify(opt);

    const auto text = render(o, opt.format);
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw Error("cannot write '" + opt.out + "'");
      f << text;
    }
    return o.status;
  } catch (const AxiomError& e) {
    err << "error: not an L-algebra: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const StateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const SystemError& e) {
    err << "error: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const PartitionError& e) {
    err << "error: not a partition: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace lalg::cli
