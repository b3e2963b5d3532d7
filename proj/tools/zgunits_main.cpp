#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"
#include "zgu/report.hpp"
#include "zgu/solver.hpp"

namespace {

struct CliConfig {
    std::string table_path;
    std::string order = "all";
    bool pap = false;
    bool acknowledge = false;
    std::string brauer = "all";
    bool no_cl = false;
    bool no_folklore = false;
    long long budget = 100'000'000;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("table", cfg.table_path, "character table file")->required();
    cmd->add_option("--order", cfg.order, "order to analyze, or 'all' divisors of the exponent");
    cmd->add_flag("--pap", cfg.pap, "use the PAP-adapted method");
    cmd->add_flag("--acknowledge-pap-assumption", cfg.acknowledge,
                  "run the PAP-adapted method on tables not marked pap_assumed");
    cmd->add_option("--brauer", cfg.brauer,
                    "comma-separated Brauer primes to use, 'all', or 'none'");
    cmd->add_flag("--no-cl-congruences", cfg.no_cl, "drop the prime-power congruences");
    cmd->add_flag("--no-folklore-congruences", cfg.no_folklore, "drop the power congruences");
    cmd->add_option("--budget", cfg.budget, "search node budget per order and power row");
    cmd->add_option("--format", cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--out", cfg.out, "write the report to this path instead of stdout");
}

std::vector<long> parse_orders(const CliConfig& cfg, const zgu::CharacterTable& table) {
    if (cfg.order == "all") return zgu::divisors(table.exponent());
    try {
        size_t pos = 0;
        const long n = std::stol(cfg.order, &pos);
        if (pos != cfg.order.size() || n < 1) throw std::invalid_argument("order");
        return {n};
    } catch (const std::exception&) {
        throw zgu::PreconditionError("--order must be a positive integer or 'all'");
    }
}

zgu::SolveOptions solve_options(const CliConfig& cfg) {
    zgu::SolveOptions opt;
    if (cfg.brauer == "none") {
        opt.compile.brauer_primes = std::vector<long>{};
    } else if (cfg.brauer != "all") {
        std::vector<long> primes;
        std::stringstream ss(cfg.brauer);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                primes.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw zgu::PreconditionError("--brauer expects primes, 'all', or 'none'");
            }
        }
        opt.compile.brauer_primes = primes;
    }
    opt.compile.use_cl_congruences = !cfg.no_cl;
    opt.compile.use_folklore_congruences = !cfg.no_folklore;
    opt.budget = cfg.budget;
    opt.acknowledge_pap_assumption = cfg.acknowledge;
    return opt;
}

void emit(const CliConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw zgu::Error("cannot open output path " + cfg.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string pap_violation_note(const zgu::CharacterTable& table, const zgu::VirtualUnit& X) {
    auto [ok, bad] = zgu::pap_check(table, X);
    if (ok) return "";
    std::ostringstream os;
    os << "    pap violations:";
    for (const auto& v : bad)
        os << " (d=" << v.divisor << ", " << table.classes()[v.classId].name
           << ": pushed " << v.pushed_sum << " != " << v.entry << ")";
    os << "\n";
    return os.str();
}

int run(const std::string& sub, const CliConfig& cfg) {
    zgu::CharacterTable table = zgu::CharacterTable::load_file(cfg.table_path);

    if (sub == "validate") {
        std::ostringstream os;
        os << "table " << table.name() << ": valid (order " << table.order() << ", exponent "
           << table.exponent() << ", " << table.num_classes() << " classes)\n";
        for (const std::string& w : table.warnings()) os << "note: " << w << "\n";
        emit(cfg, cfg.format == "machine"
                      ? nlohmann::json{{"table_name", table.name()},
                                       {"valid", true},
                                       {"warnings", table.warnings()}}
                            .dump(2)
                      : os.str());
        return 0;
    }

    const zgu::SolveOptions opt = solve_options(cfg);
    if (cfg.pap && !table.pap_assumed() && !cfg.acknowledge)
        throw zgu::PreconditionError(
            "--pap on a table without pap_assumed requires --acknowledge-pap-assumption");

    const std::vector<long> orders = parse_orders(cfg, table);
    zgu::AnalysisReport rep = zgu::analyze(table, orders, opt, cfg.pap);
    const bool limited = std::any_of(rep.orders.begin(), rep.orders.end(),
                                     [](const auto& o) { return o.resource_limited; });

    if (cfg.format == "machine") {
        emit(cfg, zgu::analysis_to_json(table, rep, opt).dump(2));
        return limited ? 3 : 0;
    }

    std::ostringstream os;
    if (sub == "solve") {
        for (const zgu::OrderReport& ord : rep.orders) {
            if (ord.impossible_by_exponent) {
                os << "order " << ord.n << ": impossible by exponent\n";
            } else if (ord.resource_limited) {
                os << "order " << ord.n << ": " << ord.resource_message << "\n";
            } else {
                os << zgu::render_solutions_text(table, ord.solutions);
            }
        }
    } else {
        os << zgu::render_analysis_text(table, rep);
        if (sub == "check-zc") {
            for (const auto& ord : rep.orders)
                os << "zc order " << ord.n << ": " << zgu::to_string(ord.zc) << "\n";
        } else if (sub == "check-pap") {
            for (const auto& ord : rep.orders) {
                os << "pap order " << ord.n << ": " << zgu::to_string(ord.pap) << "\n";
                if (ord.pap == zgu::Verdict::Open)
                    for (size_t i = 0; i < ord.solutions.units.size(); ++i)
                        if (!ord.solutions.flags[i].pap_ok)
                            os << pap_violation_note(table, ord.solutions.units[i]);
            }
        } else if (sub == "check-genbp") {
            for (const auto& ord : rep.orders)
                os << "genbp order " << ord.n << ": "
                   << (ord.genbp_holds ? "holds" : "violated") << "\n";
        } else if (sub == "check-sp") {
            os << "spectrum: " << (rep.spectrum_match ? "match" : "mismatch") << "\n";
        } else if (sub == "check-pq") {
            os << "prime graph: " << (rep.prime_graph_match ? "match" : "mismatch") << "\n";
        }
    }
    emit(cfg, os.str());
    return limited ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion-unit analysis of integral group rings from character table data"};
    app.require_subcommand(1);
    CliConfig cfg;
    const std::vector<std::string> subs = {"validate",   "solve",    "check-zc", "check-pap",
                                           "check-genbp", "check-sp", "check-pq"};
    for (const std::string& s : subs) add_common(app.add_subcommand(s), cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage errors are exit 1
    }

    try {
        return run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const zgu::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const zgu::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const zgu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
