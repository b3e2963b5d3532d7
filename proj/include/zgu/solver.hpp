#pragma once

#include <string>
#include <vector>

#include "zgu/help_engine.hpp"

namespace zgu {

struct SolveOptions {
    CompileOptions compile;
    /// Draw rows d > 1 from the solution sets of the smaller orders n/d.
    /// Off = search all divisor rows jointly (used by the completeness oracle).
    bool use_recursion = true;
    /// DFS node budget per (order, power-row choice).
    long long budget = 100'000'000;
    bool parallel = true;
    /// enumerate_pap is only known sound when PAP holds for the units in
    /// question; tables not marked pap_assumed require this.
    bool acknowledge_pap_assumption = false;
};

struct SolutionFlags {
    bool is_trivial = false;      // equals some X(g) / class indicator
    bool all_nonnegative = false;
    bool pap_ok = false;
};

struct SolutionSet {
    long n = 1;
    std::vector<VirtualUnit> units;   // standard method
    std::vector<PAPVector> vectors;   // PAP-adapted method
    std::vector<SolutionFlags> flags; // parallel to whichever list is filled
    size_t size() const { return std::max(units.size(), vectors.size()); }
    bool empty() const { return units.empty() && vectors.empty(); }
};

/// |X_{1,C}| <= size(C) for every live class of the d = 1 row.  From the
/// degree identity and mu >= 0, |sum_C X_{1,C} chi(C)| <= chi(1); column
/// orthogonality then gives |X_{1,C}| <= (|C|/|G|) sum_chi chi(1)|chi(C)|,
/// which is at most |C|.
std::vector<std::pair<int, long long>> bounding_box(const CharacterTable& table, long n);

/// Complete enumeration of the compiled order-n system (VPA_n).
SolutionSet enumerate_standard(const CharacterTable& table, long n,
                               const SolveOptions& options = {});

/// Complete enumeration of the PAP-adapted system (VPA_n^PAP).
SolutionSet enumerate_pap(const CharacterTable& table, long n,
                          const SolveOptions& options = {});

/// Naive oracle: product over divisor rows of all box-bounded vectors with
/// augmentation 1 and the forced zeros, filtered by direct exact evaluation
/// of the mu inequalities and integrality.  No propagation, no recursion,
/// no congruences.  Intended for small groups only.
std::vector<VirtualUnit> reference_enumerate(const CharacterTable& table, long n,
                                             const CompileOptions& options = {});

enum class Verdict { Proven, Open, NotApplicable };
std::string to_string(Verdict v);

struct OrderReport {
    long n = 1;
    bool impossible_by_exponent = false;
    bool resource_limited = false;
    std::string resource_message;
    bool group_has_element = false;
    SolutionSet solutions;
    Verdict zc = Verdict::Open;
    Verdict pap = Verdict::Open;
    bool genbp_holds = false;
    bool order_excluded = false;  // empty set, no group element of order n
};

struct AnalysisReport {
    std::string table_name;
    bool pap_adapted = false;
    std::vector<OrderReport> orders;
    std::vector<long> group_spectrum;  // element orders of G
    std::vector<long> unit_spectrum;   // analyzed orders with nonempty sets
    bool spectrum_match = false;
    std::vector<std::pair<long, long>> group_pq_edges;
    std::vector<std::pair<long, long>> unit_pq_edges;
    bool prime_graph_match = false;
};

/// Runs the chosen method for every requested order (empty = all divisors of
/// the exponent) and computes the verdicts.  Resource limits are recorded
/// per order and do not abort the remaining orders.
AnalysisReport analyze(const CharacterTable& table, const std::vector<long>& orders,
                       const SolveOptions& options = {}, bool pap_adapted = false);

}  // namespace zgu
