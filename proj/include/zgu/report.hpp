#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "zgu/solver.hpp"

namespace zgu {

/// Solution documents keyed by divisor and class name (nonzero entries only).
nlohmann::json virtual_unit_to_json(const CharacterTable& table, const VirtualUnit& X);
VirtualUnit virtual_unit_from_json(const CharacterTable& table, const nlohmann::json& j);
nlohmann::json pap_vector_to_json(const CharacterTable& table, const PAPVector& Y);
PAPVector pap_vector_from_json(const CharacterTable& table, const nlohmann::json& j);

nlohmann::json options_to_json(const SolveOptions& options, bool pap_adapted);
nlohmann::json solution_set_to_json(const CharacterTable& table, const SolutionSet& s);
nlohmann::json order_report_to_json(const CharacterTable& table, const OrderReport& ord);

/// The machine document: {table_name, options, per_order, group_summary}.
nlohmann::json analysis_to_json(const CharacterTable& table, const AnalysisReport& rep,
                                const SolveOptions& options);

std::string render_analysis_text(const CharacterTable& table, const AnalysisReport& rep);
std::string render_solutions_text(const CharacterTable& table, const SolutionSet& s);

}  // namespace zgu
