#include "longrun/reports.hpp"

#include <cstdio>
#include <cstdlib>

#include "longrun/streamspec.hpp"

namespace longrun {

using nlohmann::ordered_json;

double round_12sig(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

ordered_json json_number(double x) { return ordered_json(round_12sig(x)); }

ordered_json interval_json(const Interval& iv) {
  return ordered_json{{"lo", round_12sig(iv.lo)}, {"hi", round_12sig(iv.hi)}};
}

ordered_json compare_witness_json(const CompareWitness& w) {
  ordered_json out = ordered_json::object();
  if (w.step) out["step"] = *w.step;
  if (w.stable_from) out["stable_from"] = *w.stable_from;
  if (w.positive_at) out["positive_at"] = *w.positive_at;
  if (w.negative_at) out["negative_at"] = *w.negative_at;
  return out;
}

ordered_json comparison_json(const ComparisonResult& r) {
  ordered_json out;
  out["verdict"] = to_string(r.verdict);
  out["witness"] = compare_witness_json(r.witness);
  return out;
}

ordered_json axiom_witness_json(const AxiomWitness& w) {
  ordered_json streams = ordered_json::object();
  for (const auto& [name, s] : w.streams) streams[name] = stream_spec_json(s);
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : w.params) params[name] = value;
  return ordered_json{{"streams", streams}, {"params", params}, {"detail", w.detail}};
}

ordered_json axiom_report_json(const AxiomReport& report) {
  ordered_json witnesses = ordered_json::array();
  for (const AxiomWitness& w : report.witnesses) witnesses.push_back(axiom_witness_json(w));
  return ordered_json{{"rule", report.rule_id},
                      {"axiom", report.axiom_id},
                      {"mode", to_string(report.mode)},
                      {"trials", report.trials},
                      {"failures", report.failures},
                      {"seed", report.seed},
                      {"witnesses", witnesses}};
}

ordered_json search_result_json(const SearchResult& result) {
  ordered_json streams = ordered_json::object();
  for (const auto& [name, s] : result.streams) streams[name] = stream_spec_json(s);
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : result.params) params[name] = value;
  ordered_json trace = ordered_json::array();
  for (const std::string& line : result.shrink_trace) trace.push_back(line);
  return ordered_json{{"property", result.property_id},
                      {"found", result.found},
                      {"trials_used", result.trials_used},
                      {"streams", streams},
                      {"params", params},
                      {"shrink_trace", trace},
                      {"note", result.note}};
}

}  // namespace longrun
