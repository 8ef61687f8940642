#pragma once

#include <nlohmann/json.hpp>

#include "longrun/axioms.hpp"
#include "longrun/evaluate.hpp"
#include "longrun/ordering.hpp"

namespace longrun {

// All floating-point payloads are rounded to 12 significant digits before
// serialization, so identical inputs produce byte-identical reports.
double round_12sig(double x);
nlohmann::ordered_json json_number(double x);

nlohmann::ordered_json interval_json(const Interval& iv);
nlohmann::ordered_json compare_witness_json(const CompareWitness& w);
nlohmann::ordered_json comparison_json(const ComparisonResult& r);
nlohmann::ordered_json axiom_witness_json(const AxiomWitness& w);
nlohmann::ordered_json axiom_report_json(const AxiomReport& report);
nlohmann::ordered_json search_result_json(const SearchResult& result);

}  // namespace longrun
