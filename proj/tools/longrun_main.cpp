// Command-line front end: parse stream specs, run evaluators, comparisons,
// axiom suites, identity checks, and counterexample searches, and emit
// machine-readable reports. Exit status: 0 success, 1 property failure,
// 2 input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "longrun/axioms.hpp"
#include "longrun/evaluate.hpp"
#include "longrun/ordering.hpp"
#include "longrun/reports.hpp"
#include "longrun/streamspec.hpp"

namespace {

using longrun::AnyStream;
using longrun::AxiomReport;
using longrun::BoundedStream;
using longrun::DeltaGrid;
using longrun::EpStream;
using longrun::HarnessConfig;
using longrun::Interval;
using longrun::Rational;
using longrun::Rule;
using longrun::StreamSpecError;
using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

AnyStream load_stream(const std::string& arg) {
  std::string text = arg;
  const std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    if (!in) throw StreamSpecError("cannot open stream spec file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return longrun::parse_stream_spec_text(text);
}

std::vector<AnyStream> load_streams(const std::vector<std::string>& args) {
  std::vector<AnyStream> out;
  out.reserve(args.size());
  for (const std::string& a : args) out.push_back(load_stream(a));
  return out;
}

const EpStream& require_ep(const AnyStream& s, const char* context) {
  if (const EpStream* ep = std::get_if<EpStream>(&s)) return *ep;
  throw StreamSpecError(std::string(context) +
                        " needs exact eventually-periodic streams, got a generator");
}

DeltaGrid parse_delta_grid(const std::string& text) {
  const std::size_t dots = text.find("..");
  DeltaGrid grid;
  try {
    if (dots == std::string::npos) throw std::invalid_argument("missing '..'");
    grid.j_lo = std::stoi(text.substr(0, dots));
    grid.j_hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw StreamSpecError("--delta-grid expects the form j0..j1, got '" + text + "'");
  }
  if (grid.j_lo < 1 || grid.j_hi < grid.j_lo || grid.j_hi > 40)
    throw StreamSpecError("--delta-grid range must satisfy 1 <= j0 <= j1 <= 40");
  return grid;
}

void write_output(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw StreamSpecError("cannot open output file '" + out_path + "'");
  out << body;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// ---- eval -------------------------------------------------------------------

struct EvalOptions {
  std::vector<std::string> inputs;
  std::vector<std::int64_t> partial_T = {1, 10, 100};
  std::string delta_grid = "4..20";
  int kmax = 4;
  std::int64_t horizon = 1 << 20;
  double tolerance = 1e-8;
  std::string format = "json";
  std::string out;
};

ordered_json eval_ep(const EpStream& s, const EvalOptions& opt, const DeltaGrid& grid) {
  ordered_json entry;
  entry["kind"] = "ep";
  entry["spec"] = longrun::stream_spec_json(s);
  ordered_json mu_T = ordered_json::array();
  for (std::int64_t T : opt.partial_T)
    mu_T.push_back({{"T", T}, {"value", longrun::format_rational(longrun::partial_mean(s, T))}});
  entry["mu_T"] = mu_T;
  entry["mu_inf"] = longrun::format_rational(longrun::cesaro_average(s));
  ordered_json sigma = ordered_json::array();
  int j = grid.j_lo;
  for (double d : grid.deltas()) {
    sigma.push_back({{"j", j++},
                     {"delta", longrun::round_12sig(d)},
                     {"value", longrun::round_12sig(longrun::discounted_value(s, d))},
                     {"approx", true}});
  }
  entry["sigma_delta"] = sigma;
  const Interval iv = longrun::discounted_limit_interval(s, grid);
  const auto [w1, w4] = longrun::kstep_mean_bounds(s, opt.kmax, opt.horizon);
  entry["W"] = ordered_json{{"W1", longrun::format_rational(w1)},
                            {"W2", longrun::round_12sig(iv.lo)},
                            {"W3", longrun::round_12sig(iv.hi)},
                            {"W4", longrun::format_rational(w4)},
                            {"W2_W3_exact", longrun::format_rational(longrun::cesaro_average(s))}};
  return entry;
}

ordered_json eval_gen(const BoundedStream& s, const EvalOptions& opt,
                      const DeltaGrid& grid) {
  ordered_json entry;
  entry["kind"] = "gen";
  entry["label"] = s.label();
  entry["bound"] = longrun::round_12sig(s.bound());
  ordered_json mu_T = ordered_json::array();
  for (std::int64_t T : opt.partial_T)
    mu_T.push_back({{"T", T},
                    {"value", longrun::round_12sig(longrun::partial_mean(s, T))},
                    {"approx", true}});
  entry["mu_T"] = mu_T;
  ordered_json sigma = ordered_json::array();
  int j = grid.j_lo;
  for (double d : grid.deltas()) {
    sigma.push_back(
        {{"j", j++},
         {"delta", longrun::round_12sig(d)},
         {"value", longrun::round_12sig(longrun::discounted_value(s, d, opt.tolerance))},
         {"approx", true}});
  }
  entry["sigma_delta"] = sigma;
  const Interval iv = longrun::discounted_limit_interval(s, grid, opt.tolerance);
  const auto [w1, w4] = longrun::kstep_mean_bounds(s, opt.kmax, opt.horizon);
  entry["W"] = ordered_json{{"W1", longrun::round_12sig(w1)},
                            {"W2", longrun::round_12sig(iv.lo)},
                            {"W3", longrun::round_12sig(iv.hi)},
                            {"W4", longrun::round_12sig(w4)},
                            {"approx", true}};
  return entry;
}

std::string eval_csv(const ordered_json& doc) {
  std::ostringstream os;
  os << "stream,field,key,value\n";
  for (const auto& entry : doc.at("streams")) {
    const auto idx = entry.at("index").get<std::int64_t>();
    for (const auto& row : entry.at("mu_T"))
      os << idx << ",mu_T," << row.at("T").get<std::int64_t>() << ','
         << (row.at("value").is_string() ? row.at("value").get<std::string>()
                                         : format_double(row.at("value").get<double>()))
         << '\n';
    if (entry.contains("mu_inf"))
      os << idx << ",mu_inf,," << entry.at("mu_inf").get<std::string>() << '\n';
    for (const auto& row : entry.at("sigma_delta"))
      os << idx << ",sigma_delta," << format_double(row.at("delta").get<double>()) << ','
         << format_double(row.at("value").get<double>()) << '\n';
    for (const auto& [key, value] : entry.at("W").items()) {
      if (key == "approx") continue;
      os << idx << ",W," << key << ','
         << (value.is_string() ? value.get<std::string>()
                               : format_double(value.get<double>()))
         << '\n';
    }
  }
  return os.str();
}

std::string eval_text(const ordered_json& doc) {
  std::ostringstream os;
  for (const auto& entry : doc.at("streams")) {
    os << "stream " << entry.at("index").get<std::int64_t>() << " ("
       << entry.at("kind").get<std::string>() << ")";
    if (entry.contains("label")) os << " " << entry.at("label").get<std::string>();
    os << '\n';
    if (entry.contains("mu_inf"))
      os << "  mu_inf = " << entry.at("mu_inf").get<std::string>() << '\n';
    for (const auto& row : entry.at("mu_T")) {
      os << "  mu_" << row.at("T").get<std::int64_t>() << " = ";
      if (row.at("value").is_string())
        os << row.at("value").get<std::string>();
      else
        os << format_double(row.at("value").get<double>());
      os << '\n';
    }
    const auto& w = entry.at("W");
    os << "  W1=" << (w.at("W1").is_string() ? w.at("W1").get<std::string>()
                                             : format_double(w.at("W1").get<double>()))
       << " W2=" << format_double(w.at("W2").get<double>())
       << " W3=" << format_double(w.at("W3").get<double>())
       << " W4=" << (w.at("W4").is_string() ? w.at("W4").get<std::string>()
                                            : format_double(w.at("W4").get<double>()))
       << '\n';
  }
  return os.str();
}

int run_eval(const EvalOptions& opt) {
  const DeltaGrid grid = parse_delta_grid(opt.delta_grid);
  const std::vector<AnyStream> streams = load_streams(opt.inputs);
  ordered_json doc;
  doc["command"] = "eval";
  ordered_json arr = ordered_json::array();
  std::int64_t idx = 0;
  for (const AnyStream& s : streams) {
    ordered_json entry = std::holds_alternative<EpStream>(s)
                             ? eval_ep(std::get<EpStream>(s), opt, grid)
                             : eval_gen(std::get<BoundedStream>(s), opt, grid);
    entry.erase("index");
    ordered_json with_index;
    with_index["index"] = idx++;
    for (auto& [k, v] : entry.items()) with_index[k] = v;
    arr.push_back(std::move(with_index));
  }
  doc["streams"] = arr;
  if (opt.format == "json")
    write_output(doc.dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(eval_csv(doc), opt.out);
  else
    write_output(eval_text(doc), opt.out);
  return 0;
}

// ---- compare ----------------------------------------------------------------

struct CompareOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> rules = {"catching_up", "fixed_step"};
  bool brute_force = false;
  std::string criterion = "both";
  std::int64_t horizon = 2000;
  int kmax = 12;
  std::string format = "json";
  std::string out;
};

std::string compare_csv(const ordered_json& doc) {
  std::ostringstream os;
  os << "rule,verdict,step,stable_from,positive_at,negative_at\n";
  for (const auto& [rule, res] : doc.at("results").items()) {
    const auto& w = res.at("witness");
    const auto field = [&](const char* name) {
      return w.contains(name) ? std::to_string(w.at(name).get<std::int64_t>())
                              : std::string();
    };
    os << rule << ',' << res.at("verdict").get<std::string>() << ',' << field("step")
       << ',' << field("stable_from") << ',' << field("positive_at") << ','
       << field("negative_at") << '\n';
  }
  return os.str();
}

std::string compare_text(const ordered_json& doc) {
  std::ostringstream os;
  for (const auto& [rule, res] : doc.at("results").items()) {
    os << rule << ": " << res.at("verdict").get<std::string>();
    const auto& w = res.at("witness");
    if (w.contains("step")) os << " (step k=" << w.at("step").get<std::int64_t>() << ")";
    if (w.contains("stable_from"))
      os << " (settled from T=" << w.at("stable_from").get<std::int64_t>() << ")";
    if (w.contains("positive_at"))
      os << " (D>0 at T=" << w.at("positive_at").get<std::int64_t>()
         << ", D<0 at T=" << w.at("negative_at").get<std::int64_t>() << ")";
    os << '\n';
  }
  return os.str();
}

int run_compare(const CompareOptions& opt) {
  if (opt.inputs.size() != 2)
    throw StreamSpecError("compare expects exactly two stream inputs");
  const std::vector<AnyStream> streams = load_streams(opt.inputs);
  const EpStream& u = require_ep(streams[0], "compare");
  const EpStream& v = require_ep(streams[1], "compare");
  ordered_json doc;
  doc["command"] = "compare";
  doc["u"] = longrun::stream_spec_json(u);
  doc["v"] = longrun::stream_spec_json(v);
  ordered_json results = ordered_json::object();
  for (const std::string& rule_id : opt.rules) {
    const Rule& rule = longrun::builtin_rule(rule_id);
    results[rule_id] = longrun::comparison_json(rule.compare(u, v));
  }
  if (opt.brute_force) {
    if (opt.criterion != "fixed_step")
      results["brute_force_catching_up"] = longrun::comparison_json(
          longrun::brute_force_compare(u, v, longrun::Criterion::CatchingUp, opt.horizon,
                                       opt.kmax));
    if (opt.criterion != "catching_up")
      results["brute_force_fixed_step"] = longrun::comparison_json(
          longrun::brute_force_compare(u, v, longrun::Criterion::FixedStep, opt.horizon,
                                       opt.kmax));
  }
  doc["results"] = results;
  if (opt.format == "json")
    write_output(doc.dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(compare_csv(doc), opt.out);
  else
    write_output(compare_text(doc), opt.out);
  return 0;
}

// ---- axioms -----------------------------------------------------------------

struct AxiomsOptions {
  std::string rule;
  std::vector<std::string> axioms;
  std::string suite;
  std::int64_t trials = 200;
  std::uint64_t seed = 1;
  std::int64_t corpus_size = 500;
  std::string format = "json";
  std::string out;
};

std::string axioms_csv(const ordered_json& doc) {
  std::ostringstream os;
  os << "rule,axiom,mode,trials,failures,seed\n";
  for (const auto& rep : doc.at("reports"))
    os << rep.at("rule").get<std::string>() << ',' << rep.at("axiom").get<std::string>()
       << ',' << rep.at("mode").get<std::string>() << ','
       << rep.at("trials").get<std::int64_t>() << ','
       << rep.at("failures").get<std::int64_t>() << ','
       << rep.at("seed").get<std::uint64_t>() << '\n';
  return os.str();
}

std::string axioms_text(const ordered_json& doc) {
  std::ostringstream os;
  for (const auto& rep : doc.at("reports"))
    os << rep.at("rule").get<std::string>() << " / " << rep.at("axiom").get<std::string>()
       << " [" << rep.at("mode").get<std::string>() << "]: "
       << rep.at("failures").get<std::int64_t>() << " failures in "
       << rep.at("trials").get<std::int64_t>() << " trials\n";
  if (doc.contains("expectations"))
    for (const auto& e : doc.at("expectations"))
      os << "expect " << e.at("rule").get<std::string>() << " / "
         << e.at("axiom").get<std::string>() << " " << e.at("expected").get<std::string>()
         << ": " << (e.at("ok").get<bool>() ? "ok" : "VIOLATED") << '\n';
  return os.str();
}

int run_axioms(const AxiomsOptions& opt) {
  const std::vector<EpStream> corpus =
      longrun::make_corpus(static_cast<std::size_t>(opt.corpus_size), opt.seed);
  HarnessConfig cfg;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;

  ordered_json doc;
  doc["command"] = "axioms";
  ordered_json reports = ordered_json::array();
  ordered_json expectations = ordered_json::array();
  bool ok = true;

  const auto run_one = [&](const Rule& rule, const std::string& axiom_id,
                           const HarnessConfig& c) {
    AxiomReport rep = longrun::test_axiom(rule, axiom_id, corpus, c);
    reports.push_back(longrun::axiom_report_json(rep));
    return rep;
  };

  if (!opt.suite.empty()) {
    if (opt.suite == "theorem1" || opt.suite == "all") {
      const Rule& rule = longrun::builtin_rule(opt.rule.empty() ? "cesaro" : opt.rule);
      for (const std::string& axiom_id : longrun::axiom_ids()) {
        const AxiomReport rep = run_one(rule, axiom_id, cfg);
        const bool pass = rep.failures == 0;
        expectations.push_back({{"rule", rule.id},
                                {"axiom", axiom_id},
                                {"expected", "zero failures"},
                                {"failures", rep.failures},
                                {"ok", pass}});
        ok = ok && pass;
      }
    }
    if (opt.suite == "appendixB" || opt.suite == "all") {
      for (const longrun::IndependenceEntry& entry : longrun::independence_table()) {
        if (!opt.rule.empty() && opt.rule != entry.rule_id && opt.suite == "appendixB")
          continue;
        const Rule& rule = longrun::builtin_rule(entry.rule_id);
        for (const std::string& axiom_id : entry.designated) {
          HarnessConfig designated_cfg = cfg;
          designated_cfg.trials = std::max<std::int64_t>(cfg.trials, 3000);
          const AxiomReport rep = run_one(rule, axiom_id, designated_cfg);
          bool pass = rep.failures > 0 && !rep.witnesses.empty();
          if (pass)
            pass = longrun::replay_axiom_witness(rule, axiom_id, rep.witnesses.front(),
                                                 designated_cfg);
          expectations.push_back({{"rule", rule.id},
                                  {"axiom", axiom_id},
                                  {"expected", "replayable failure"},
                                  {"failures", rep.failures},
                                  {"ok", pass}});
          ok = ok && pass;
        }
        for (const std::string& axiom_id : entry.claimed) {
          const AxiomReport rep = run_one(rule, axiom_id, cfg);
          const bool pass = rep.failures == 0;
          expectations.push_back({{"rule", rule.id},
                                  {"axiom", axiom_id},
                                  {"expected", "zero failures"},
                                  {"failures", rep.failures},
                                  {"ok", pass}});
          ok = ok && pass;
        }
      }
    }
    if (opt.suite != "theorem1" && opt.suite != "appendixB" && opt.suite != "all")
      throw StreamSpecError("unknown suite '" + opt.suite +
                            "' (expected theorem1, appendixB, or all)");
  } else {
    if (opt.rule.empty())
      throw StreamSpecError("axioms needs --rule (or --suite)");
    const Rule& rule = longrun::builtin_rule(opt.rule);
    const std::vector<std::string>& ids =
        opt.axioms.empty() ? longrun::axiom_ids() : opt.axioms;
    for (const std::string& axiom_id : ids) {
      const AxiomReport rep = run_one(rule, axiom_id, cfg);
      ok = ok && rep.failures == 0;
    }
  }

  doc["reports"] = reports;
  if (!expectations.empty()) doc["expectations"] = expectations;
  doc["ok"] = ok;
  if (opt.format == "json")
    write_output(doc.dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(axioms_csv(doc), opt.out);
  else
    write_output(axioms_text(doc), opt.out);
  return ok ? 0 : 1;
}

// ---- identity-check ---------------------------------------------------------

struct IdentityOptions {
  std::vector<std::string> inputs;
  std::vector<double> deltas = {0.5, 0.9, 0.99};
  std::int64_t N = 0;  // 0 = choose automatically from the truncation bound
  std::string format = "json";
  std::string out;
};

std::int64_t abel_auto_N(const EpStream& s, double delta) {
  const double B = std::max(std::fabs(longrun::to_double(s.min_value())),
                            std::fabs(longrun::to_double(s.max_value())));
  for (std::int64_t N = 64; N <= (1LL << 40); N *= 2) {
    const double tail = B * std::exp(static_cast<double>(N) * std::log(delta)) *
                        (static_cast<double>(N + 1) * (1.0 - delta) + delta);
    if (tail < 0.5e-10) return N;
  }
  throw StreamSpecError("delta too close to 1 for the Abel identity check");
}

std::string identity_csv(const ordered_json& doc) {
  std::ostringstream os;
  os << "stream,check,delta,N,value,ok\n";
  for (const auto& c : doc.at("checks")) {
    os << c.at("stream").get<std::int64_t>() << ',' << c.at("check").get<std::string>()
       << ',';
    if (c.contains("delta")) os << format_double(c.at("delta").get<double>());
    os << ',';
    if (c.contains("N")) os << c.at("N").get<std::int64_t>();
    os << ',';
    if (c.contains("residual")) os << format_double(c.at("residual").get<double>());
    os << ',' << (c.at("ok").get<bool>() ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string identity_text(const ordered_json& doc) {
  std::ostringstream os;
  for (const auto& c : doc.at("checks")) {
    os << "stream " << c.at("stream").get<std::int64_t>() << ' '
       << c.at("check").get<std::string>();
    if (c.contains("delta")) os << " delta=" << format_double(c.at("delta").get<double>());
    if (c.contains("residual"))
      os << " residual=" << format_double(c.at("residual").get<double>());
    os << (c.at("ok").get<bool>() ? " ok" : " FAILED") << '\n';
  }
  return os.str();
}

int run_identity(const IdentityOptions& opt) {
  const std::vector<AnyStream> streams = load_streams(opt.inputs);
  ordered_json doc;
  doc["command"] = "identity-check";
  ordered_json checks = ordered_json::array();
  bool ok = true;
  std::int64_t idx = 0;
  for (const AnyStream& any : streams) {
    const EpStream& s = require_ep(any, "identity-check");
    for (double delta : opt.deltas) {
      const std::int64_t N = opt.N > 0 ? opt.N : abel_auto_N(s, delta);
      const double residual = longrun::abel_identity_residual(s, delta, N);
      const bool pass = residual < 1e-9;
      checks.push_back({{"stream", idx},
                        {"check", "abel_identity"},
                        {"delta", longrun::round_12sig(delta)},
                        {"N", N},
                        {"residual", longrun::round_12sig(residual)},
                        {"ok", pass}});
      ok = ok && pass;
    }
    const Rational mu = longrun::cesaro_average(s);
    const bool sandwich = s.min_cycle() <= mu && mu <= s.max_cycle();
    checks.push_back({{"stream", idx}, {"check", "cycle_sandwich"}, {"ok", sandwich}});
    ok = ok && sandwich;
    const EpStream shifted = longrun::tail(s, 1);
    const bool shift_ok =
        longrun::cesaro_average(shifted) == mu &&
        longrun::kstep_mean_bounds(shifted, 4, 1024) == longrun::kstep_mean_bounds(s, 4, 1024);
    checks.push_back({{"stream", idx}, {"check", "shift_invariance_W"}, {"ok", shift_ok}});
    ok = ok && shift_ok;
    ++idx;
  }
  doc["checks"] = checks;
  doc["ok"] = ok;
  if (opt.format == "json")
    write_output(doc.dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(identity_csv(doc), opt.out);
  else
    write_output(identity_text(doc), opt.out);
  return ok ? 0 : 1;
}

// ---- search -----------------------------------------------------------------

struct SearchOptions {
  std::string property;
  std::uint64_t seed = 1;
  std::int64_t budget = 10000;
  std::string format = "json";
  std::string out;
};

std::string search_csv(const ordered_json& doc) {
  std::ostringstream os;
  os << "property,found,trials_used,note\n";
  const auto& r = doc.at("result");
  os << r.at("property").get<std::string>() << ','
     << (r.at("found").get<bool>() ? "true" : "false") << ','
     << r.at("trials_used").get<std::int64_t>() << ','
     << csv_escape(r.at("note").get<std::string>()) << '\n';
  return os.str();
}

std::string search_text(const ordered_json& doc) {
  std::ostringstream os;
  const auto& r = doc.at("result");
  os << r.at("property").get<std::string>() << ": "
     << (r.at("found").get<bool>() ? "witness found" : "none within budget") << " after "
     << r.at("trials_used").get<std::int64_t>() << " trials\n";
  for (const auto& [name, spec] : r.at("streams").items())
    os << "  " << name << ": " << spec.dump() << '\n';
  for (const auto& line : r.at("shrink_trace"))
    os << "  shrink: " << line.get<std::string>() << '\n';
  if (!r.at("note").get<std::string>().empty())
    os << "  note: " << r.at("note").get<std::string>() << '\n';
  return os.str();
}

int run_search(const SearchOptions& opt) {
  const longrun::SearchResult res =
      longrun::search_counterexample(opt.property, opt.seed, opt.budget);
  ordered_json doc;
  doc["command"] = "search";
  doc["result"] = longrun::search_result_json(res);
  const bool expects_none = opt.property == "C_implies_fixC_violation";
  const bool ok = expects_none ? !res.found : res.found;
  doc["ok"] = ok;
  if (opt.format == "json")
    write_output(doc.dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(search_csv(doc), opt.out);
  else
    write_output(search_text(doc), opt.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical evaluation of infinite utility streams"};
  app.require_subcommand(1);
  int rc = 0;

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate welfare functionals");
  eval_cmd->add_option("inputs", eval_opt.inputs, "stream spec files or inline JSON")
      ->required();
  eval_cmd->add_option("--T", eval_opt.partial_T, "partial-mean horizons");
  eval_cmd->add_option("--delta-grid", eval_opt.delta_grid, "grid j0..j1, delta=1-2^-j");
  eval_cmd->add_option("--kmax", eval_opt.kmax, "k-grid bound for W1/W4");
  eval_cmd->add_option("--horizon", eval_opt.horizon, "horizon for numeric estimates");
  eval_cmd->add_option("--tolerance", eval_opt.tolerance, "numeric tolerance");
  eval_cmd->add_option("--format", eval_opt.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  eval_cmd->add_option("--out", eval_opt.out, "output path (default stdout)");
  eval_cmd->callback([&] { rc = run_eval(eval_opt); });

  CompareOptions cmp_opt;
  CLI::App* cmp_cmd = app.add_subcommand("compare", "compare two streams under rules");
  cmp_cmd->add_option("inputs", cmp_opt.inputs, "two stream specs")->required();
  cmp_cmd->add_option("--rule", cmp_opt.rules, "rule ids (repeatable)");
  cmp_cmd->add_flag("--brute-force", cmp_opt.brute_force,
                    "also run the brute-force oracle");
  cmp_cmd->add_option("--criterion", cmp_opt.criterion,
                      "criterion for the brute-force oracle")
      ->check(CLI::IsMember({"catching_up", "fixed_step", "both"}));
  cmp_cmd->add_option("--horizon", cmp_opt.horizon, "brute-force horizon");
  cmp_cmd->add_option("--kmax", cmp_opt.kmax, "brute-force step bound");
  cmp_cmd->add_option("--format", cmp_opt.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmp_cmd->add_option("--out", cmp_opt.out, "output path (default stdout)");
  cmp_cmd->callback([&] { rc = run_compare(cmp_opt); });

  AxiomsOptions ax_opt;
  CLI::App* ax_cmd = app.add_subcommand("axioms", "run axiom suites against a rule");
  ax_cmd->add_option("--rule", ax_opt.rule, "rule id");
  ax_cmd->add_option("--axiom", ax_opt.axioms, "axiom ids (repeatable)");
  ax_cmd->add_option("--suite", ax_opt.suite, "theorem1 | appendixB | all");
  ax_cmd->add_option("--trials", ax_opt.trials, "trials per axiom");
  ax_cmd->add_option("--seed", ax_opt.seed, "root seed");
  ax_cmd->add_option("--corpus-size", ax_opt.corpus_size, "random corpus size");
  ax_cmd->add_option("--format", ax_opt.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  ax_cmd->add_option("--out", ax_opt.out, "output path (default stdout)");
  ax_cmd->callback([&] { rc = run_axioms(ax_opt); });

  IdentityOptions id_opt;
  CLI::App* id_cmd =
      app.add_subcommand("identity-check", "Abel identity and sandwich checks");
  id_cmd->add_option("inputs", id_opt.inputs, "stream specs")->required();
  id_cmd->add_option("--delta", id_opt.deltas, "discount factors (repeatable)");
  id_cmd->add_option("--N", id_opt.N, "truncation length (default: from bound)");
  id_cmd->add_option("--format", id_opt.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  id_cmd->add_option("--out", id_opt.out, "output path (default stdout)");
  id_cmd->callback([&] { rc = run_identity(id_opt); });

  SearchOptions se_opt;
  CLI::App* se_cmd = app.add_subcommand("search", "randomized counterexample search");
  se_cmd->add_option("--property", se_opt.property, "property id")->required();
  se_cmd->add_option("--seed", se_opt.seed, "root seed");
  se_cmd->add_option("--budget", se_opt.budget, "trial budget");
  se_cmd->add_option("--format", se_opt.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  se_cmd->add_option("--out", se_opt.out, "output path (default stdout)");
  se_cmd->callback([&] { rc = run_search(se_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const StreamSpecError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const longrun::BoundViolation& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
