#include "zgu/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

namespace zgu {

namespace {

int class_by_name(const CharacterTable& table, const std::string& name) {
    for (const ClassInfo& c : table.classes())
        if (c.name == name) return c.id;
    throw ValidationError("unknown class name '" + name + "'");
}

nlohmann::json flags_to_json(const SolutionFlags& f) {
    return {{"trivial", f.is_trivial},
            {"all_nonnegative", f.all_nonnegative},
            {"pap", f.pap_ok}};
}

}  // namespace

nlohmann::json virtual_unit_to_json(const CharacterTable& table, const VirtualUnit& X) {
    nlohmann::json rows = nlohmann::json::object();
    for (const auto& [d, row] : X.rows) {
        nlohmann::json r = nlohmann::json::object();
        for (int c = 0; c < table.num_classes(); ++c)
            if (row[c] != 0) r[table.classes()[c].name] = row[c];
        rows[std::to_string(d)] = std::move(r);
    }
    return {{"order", X.order}, {"rows", std::move(rows)}};
}

VirtualUnit virtual_unit_from_json(const CharacterTable& table, const nlohmann::json& j) {
    VirtualUnit X;
    X.order = j.at("order").get<long>();
    for (long d : divisors(X.order)) X.rows[d].assign(table.num_classes(), 0);
    for (const auto& [dstr, row] : j.at("rows").items()) {
        const long d = std::stol(dstr);
        if (!X.rows.count(d)) throw ValidationError("row key " + dstr + " is not a divisor");
        for (const auto& [name, v] : row.items())
            X.rows[d][class_by_name(table, name)] = v.get<long long>();
    }
    validate_virtual_unit(table, X);
    return X;
}

nlohmann::json pap_vector_to_json(const CharacterTable& table, const PAPVector& Y) {
    nlohmann::json vals = nlohmann::json::object();
    for (int c = 0; c < table.num_classes(); ++c)
        if (Y.values[c] != 0) vals[table.classes()[c].name] = Y.values[c];
    return {{"order", Y.order}, {"values", std::move(vals)}};
}

PAPVector pap_vector_from_json(const CharacterTable& table, const nlohmann::json& j) {
    PAPVector Y;
    Y.order = j.at("order").get<long>();
    Y.values.assign(table.num_classes(), 0);
    for (const auto& [name, v] : j.at("values").items())
        Y.values[class_by_name(table, name)] = v.get<long long>();
    validate_pap_vector(table, Y);
    return Y;
}

nlohmann::json options_to_json(const SolveOptions& options, bool pap_adapted) {
    nlohmann::json brauer;
    if (options.compile.brauer_primes)
        brauer = *options.compile.brauer_primes;
    else
        brauer = "all";
    return {{"method", pap_adapted ? "pap-adapted" : "standard"},
            {"brauer_primes", std::move(brauer)},
            {"cl_congruences", options.compile.use_cl_congruences},
            {"folklore_congruences", options.compile.use_folklore_congruences},
            {"power_recursion", options.use_recursion},
            {"budget", options.budget}};
}

nlohmann::json solution_set_to_json(const CharacterTable& table, const SolutionSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < s.size(); ++i) {
        nlohmann::json sol = s.units.empty() ? pap_vector_to_json(table, s.vectors[i])
                                             : virtual_unit_to_json(table, s.units[i]);
        sol["flags"] = flags_to_json(s.flags[i]);
        arr.push_back(std::move(sol));
    }
    return arr;
}

nlohmann::json order_report_to_json(const CharacterTable& table, const OrderReport& ord) {
    nlohmann::json verdicts = {{"zc_by_help", to_string(ord.zc)},
                               {"pap_by_help", to_string(ord.pap)},
                               {"genbp", ord.genbp_holds ? "holds" : "violated"},
                               {"order_excluded", ord.order_excluded}};
    nlohmann::json j = {{"n", ord.n},
                        {"group_has_element", ord.group_has_element},
                        {"verdicts", std::move(verdicts)}};
    if (ord.impossible_by_exponent) {
        j["impossible_by_exponent"] = true;
        j["solutions"] = nlohmann::json::array();
    } else if (ord.resource_limited) {
        j["resource_limited"] = true;
        j["resource_message"] = ord.resource_message;
    } else {
        j["solutions"] = solution_set_to_json(table, ord.solutions);
    }
    return j;
}

nlohmann::json analysis_to_json(const CharacterTable& table, const AnalysisReport& rep,
                                const SolveOptions& options) {
    nlohmann::json per_order = nlohmann::json::array();
    for (const OrderReport& ord : rep.orders) per_order.push_back(order_report_to_json(table, ord));
    nlohmann::json edgesG = nlohmann::json::array(), edgesU = nlohmann::json::array();
    for (auto [p, q] : rep.group_pq_edges) edgesG.push_back({p, q});
    for (auto [p, q] : rep.unit_pq_edges) edgesU.push_back({p, q});
    nlohmann::json summary = {
        {"spectrum", {{"group", rep.group_spectrum},
                      {"units", rep.unit_spectrum},
                      {"match", rep.spectrum_match}}},
        {"prime_graph",
         {{"group_edges", std::move(edgesG)}, {"unit_edges", std::move(edgesU)},
          {"match", rep.prime_graph_match}}}};
    return {{"table_name", rep.table_name},
            {"options", options_to_json(options, rep.pap_adapted)},
            {"per_order", std::move(per_order)},
            {"group_summary", std::move(summary)}};
}

std::string render_solutions_text(const CharacterTable& table, const SolutionSet& s) {
    std::ostringstream os;
    os << "order " << s.n << ": " << s.size() << " solution(s)\n";
    for (size_t i = 0; i < s.size(); ++i) {
        os << "  #" << (i + 1);
        const SolutionFlags& f = s.flags[i];
        os << (f.is_trivial ? " [trivial]" : "") << (f.all_nonnegative ? " [nonneg]" : "")
           << (f.pap_ok ? " [pap]" : "") << "\n";
        auto printRow = [&](const std::string& label, const std::vector<long long>& row) {
            os << "    " << label << ":";
            for (int c = 0; c < table.num_classes(); ++c)
                if (row[c] != 0) os << " " << table.classes()[c].name << "=" << row[c];
            os << "\n";
        };
        if (!s.units.empty()) {
            for (const auto& [d, row] : s.units[i].rows) printRow("d=" + std::to_string(d), row);
        } else {
            printRow("Y", s.vectors[i].values);
        }
    }
    return os.str();
}

std::string render_analysis_text(const CharacterTable& table, const AnalysisReport& rep) {
    std::ostringstream os;
    os << "group " << rep.table_name << " (order " << table.order() << ", exponent "
       << table.exponent() << "), method " << (rep.pap_adapted ? "pap-adapted" : "standard")
       << "\n";
    os << "  n  #sol  zc      pap     genbp     excluded\n";
    for (const OrderReport& ord : rep.orders) {
        os << "  " << ord.n << "  ";
        if (ord.impossible_by_exponent) {
            os << "impossible by exponent\n";
            continue;
        }
        if (ord.resource_limited) {
            os << "resource limit: " << ord.resource_message << "\n";
            continue;
        }
        os << ord.solutions.size() << "  " << to_string(ord.zc) << "  " << to_string(ord.pap)
           << "  " << (ord.genbp_holds ? "holds" : "violated") << "  "
           << (ord.order_excluded ? "yes" : "no") << "\n";
    }
    os << "spectrum match: " << (rep.spectrum_match ? "yes" : "no") << "\n";
    os << "prime graph match: " << (rep.prime_graph_match ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace zgu
