#include "zgu/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

#ifdef ZGU_HAVE_OPENMP
#include <omp.h>
#endif

namespace zgu {

namespace {

long long ceil_div(long long a, long long b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
long long floor_div(long long a, long long b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

struct SparseRow {
    LinearRow::Kind kind;
    long modulus;
    long long constant;
    std::vector<std::pair<int, long long>> terms;  // (var index, coeff)
};

struct SearchProblem {
    std::vector<SparseRow> rows;
    std::vector<long long> lo, hi;  // initial intervals (fixed: lo == hi)
    std::vector<int> order;         // free variables, narrowest box first
    bool trivially_infeasible = false;
};

SearchProblem make_problem(const ConstraintSystem& sys,
                           const std::map<int, long long>& fixed) {
    SearchProblem p;
    const int nv = static_cast<int>(sys.vars.size());
    p.lo.resize(nv);
    p.hi.resize(nv);
    for (int i = 0; i < nv; ++i) {
        auto it = fixed.find(i);
        if (it != fixed.end()) {
            p.lo[i] = p.hi[i] = it->second;
        } else {
            p.lo[i] = -sys.box[i];
            p.hi[i] = sys.box[i];
            p.order.push_back(i);
        }
    }
    std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) {
        if (sys.box[a] != sys.box[b]) return sys.box[a] < sys.box[b];
        return sys.vars[a] < sys.vars[b];
    });
    for (const LinearRow& row : sys.rows) {
        SparseRow r{row.kind, row.modulus, row.constant, {}};
        for (int i = 0; i < nv; ++i)
            if (row.coeffs[i] != 0) {
                if (p.lo[i] == p.hi[i])
                    r.constant += row.coeffs[i] * p.lo[i];
                else
                    r.terms.emplace_back(i, row.coeffs[i]);
            }
        if (r.terms.empty()) {
            const bool ok = r.kind == LinearRow::Kind::Geq0 ? r.constant >= 0
                                                            : r.constant % r.modulus == 0;
            if (!ok) p.trivially_infeasible = true;
            continue;
        }
        p.rows.push_back(std::move(r));
    }
    return p;
}

/// Interval fixpoint over the inequality rows plus one-free-variable
/// congruence tightening.  Returns false when some interval empties.
bool propagate(const std::vector<SparseRow>& rows, std::vector<long long>& lo,
               std::vector<long long>& hi) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const SparseRow& r : rows) {
            if (r.kind == LinearRow::Kind::Geq0) {
                long long minS = r.constant, maxS = r.constant;
                for (const auto& [i, a] : r.terms) {
                    minS += a > 0 ? a * lo[i] : a * hi[i];
                    maxS += a > 0 ? a * hi[i] : a * lo[i];
                }
                if (maxS < 0) return false;
                if (minS >= 0) continue;
                for (const auto& [i, a] : r.terms) {
                    const long long contribMax = a > 0 ? a * hi[i] : a * lo[i];
                    const long long rest = maxS - contribMax;
                    // a * x_i >= -rest
                    if (a > 0) {
                        const long long nb = ceil_div(-rest, a);
                        if (nb > lo[i]) {
                            lo[i] = nb;
                            changed = true;
                            if (lo[i] > hi[i]) return false;
                        }
                    } else {
                        const long long nb = floor_div(rest, -a);
                        if (nb < hi[i]) {
                            hi[i] = nb;
                            changed = true;
                            if (lo[i] > hi[i]) return false;
                        }
                    }
                }
            } else {
                long long fixedSum = r.constant;
                int freeVar = -1;
                long long freeCoeff = 0;
                int freeCount = 0;
                for (const auto& [i, a] : r.terms) {
                    if (lo[i] == hi[i]) {
                        fixedSum += a * lo[i];
                    } else {
                        ++freeCount;
                        freeVar = i;
                        freeCoeff = a;
                    }
                }
                if (freeCount == 0) {
                    if (fixedSum % r.modulus != 0) return false;
                } else if (freeCount == 1) {
                    const long m = r.modulus;
                    auto bad = [&](long long v) { return (fixedSum + freeCoeff * v) % m != 0; };
                    long steps = 0;
                    while (lo[freeVar] <= hi[freeVar] && bad(lo[freeVar]) && steps++ < m) {
                        ++lo[freeVar];
                        changed = true;
                    }
                    while (lo[freeVar] <= hi[freeVar] && bad(hi[freeVar]) && steps++ < 2 * m) {
                        --hi[freeVar];
                        changed = true;
                    }
                    if (lo[freeVar] > hi[freeVar]) return false;
                }
            }
        }
    }
    return true;
}

void dfs(const SearchProblem& p, size_t depth, std::vector<long long> lo,
         std::vector<long long> hi, std::atomic<long long>& nodes, long long budget,
         std::vector<std::vector<long long>>& out) {
    if (nodes.fetch_add(1) >= budget)
        throw ResourceLimitError("search budget of " + std::to_string(budget) +
                                 " nodes exhausted");
    if (!propagate(p.rows, lo, hi)) return;
    while (depth < p.order.size() && lo[p.order[depth]] == hi[p.order[depth]]) ++depth;
    if (depth == p.order.size()) {
        out.push_back(lo);
        return;
    }
    const int v = p.order[depth];
    const long long a = lo[v], b = hi[v];
    for (long long x = a; x <= b; ++x) {
        std::vector<long long> l2 = lo, h2 = hi;
        l2[v] = h2[v] = x;
        dfs(p, depth + 1, std::move(l2), std::move(h2), nodes, budget, out);
    }
}

/// All integer points of the problem, lexicographic in the raw var order.
std::vector<std::vector<long long>> solve_problem(const SearchProblem& p,
                                                  long long budget, bool parallel) {
    std::vector<std::vector<long long>> out;
    if (p.trivially_infeasible) return out;
    std::atomic<long long> nodes{0};
    std::vector<long long> lo = p.lo, hi = p.hi;
    if (!propagate(p.rows, lo, hi)) return out;
    size_t depth = 0;
    while (depth < p.order.size() && lo[p.order[depth]] == hi[p.order[depth]]) ++depth;
    if (depth == p.order.size()) {
        out.push_back(lo);
        return out;
    }

#ifdef ZGU_HAVE_OPENMP
    if (parallel) {
        const int v = p.order[depth];
        const long long a = lo[v], b = hi[v];
        const int width = static_cast<int>(b - a + 1);
        std::vector<std::vector<std::vector<long long>>> buckets(width);
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
        for (int k = 0; k < width; ++k) {
            try {
                std::vector<long long> l2 = lo, h2 = hi;
                l2[v] = h2[v] = a + k;
                dfs(p, depth + 1, std::move(l2), std::move(h2), nodes, budget, buckets[k]);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (auto& bucket : buckets)
            for (auto& sol : bucket) out.push_back(std::move(sol));
        std::sort(out.begin(), out.end());
        return out;
    }
#else
    (void)parallel;
#endif
    dfs(p, depth, std::move(lo), std::move(hi), nodes, budget, out);
    std::sort(out.begin(), out.end());
    return out;
}

VirtualUnit assemble(const ConstraintSystem& sys, const std::vector<long long>& vals) {
    const CharacterTable& table = *sys.table;
    VirtualUnit X;
    X.order = sys.n;
    for (long d : divisors(sys.n)) X.rows[d].assign(table.num_classes(), 0);
    X.rows[sys.n][table.identity_class()] = 1;
    for (size_t i = 0; i < sys.vars.size(); ++i)
        X.rows[sys.vars[i].divisor][sys.vars[i].classId] = vals[i];
    return X;
}

void verify_solution(const ConstraintSystem& sys, const VirtualUnit& X) {
    validate_virtual_unit(*sys.table, X);
    for (const LinearRow& row : sys.rows)
        if (!row_satisfied(sys, row, X))
            throw Error("internal error: emitted solution violates row '" + row.provenance + "'");
}

bool unit_is_trivial(const CharacterTable& table, const VirtualUnit& X) {
    for (int c : table.classes_of_order(X.order))
        if (trivial_candidate(table, c).rows == X.rows) return true;
    return false;
}

bool unit_all_nonnegative(const VirtualUnit& X) {
    for (const auto& [d, row] : X.rows)
        for (long long v : row)
            if (v < 0) return false;
    return true;
}

void require_order_in_exponent(const CharacterTable& table, long n) {
    if (n < 1 || table.exponent() % n != 0)
        throw PreconditionError("order " + std::to_string(n) +
                                " does not divide the exponent " +
                                std::to_string(table.exponent()));
}

std::vector<VirtualUnit> enum_std_impl(const CharacterTable& table, long n,
                                       const SolveOptions& options,
                                       std::map<long, std::vector<VirtualUnit>>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const ConstraintSystem sys = compile_constraints(table, n, options.compile);

    // power coherence: the d > 1 rows of X describe u^d, a unit of order
    // n/d, so they are drawn from the already-enumerated smaller sets, one
    // consistent choice per prime.
    std::vector<std::map<int, long long>> tails;
    if (options.use_recursion && n > 1) {
        const auto primes = prime_divisors(n);
        std::vector<std::vector<VirtualUnit>> subs;
        for (long p : primes) subs.push_back(enum_std_impl(table, n / p, options, memo));
        const bool anyEmpty =
            std::any_of(subs.begin(), subs.end(), [](const auto& s) { return s.empty(); });
        std::vector<size_t> pick(primes.size(), 0);
        std::set<std::vector<long long>> seen;
        while (!anyEmpty) {
            bool consistent = true;
            std::map<int, long long> fixed;
            for (long d : divisors(n)) {
                if (d == 1 || d == n) continue;
                const std::vector<long long>* row = nullptr;
                for (size_t pi = 0; pi < primes.size() && consistent; ++pi) {
                    if (d % primes[pi] != 0) continue;
                    const auto& cand = subs[pi][pick[pi]].rows.at(d / primes[pi]);
                    if (!row)
                        row = &cand;
                    else if (*row != cand)
                        consistent = false;
                }
                if (!consistent) break;
                for (size_t i = 0; i < sys.vars.size(); ++i)
                    if (sys.vars[i].divisor == d)
                        fixed[static_cast<int>(i)] = (*row)[sys.vars[i].classId];
            }
            if (consistent) {
                std::vector<long long> key;
                for (const auto& [i, v] : fixed) key.push_back(v);
                if (seen.insert(key).second) tails.push_back(std::move(fixed));
            }
            size_t j = 0;  // odometer over the per-prime solution choices
            while (j < primes.size() && ++pick[j] == subs[j].size()) pick[j++] = 0;
            if (j == primes.size()) break;
        }
    } else {
        tails.push_back({});
    }

    std::vector<VirtualUnit> units;
    std::set<std::vector<long long>> seen;
    for (const auto& tail : tails) {
        SearchProblem p = make_problem(sys, tail);
        for (const auto& vals0 : solve_problem(p, options.budget, options.parallel)) {
            std::vector<long long> vals = vals0;
            for (const auto& [i, v] : tail) vals[i] = v;
            if (!seen.insert(vals).second) continue;
            VirtualUnit X = assemble(sys, vals);
            verify_solution(sys, X);
            units.push_back(std::move(X));
        }
    }
    std::sort(units.begin(), units.end(), [&](const VirtualUnit& a, const VirtualUnit& b) {
        std::vector<long long> va, vb;
        for (const VarKey& k : sys.vars) {
            va.push_back(a.rows.at(k.divisor)[k.classId]);
            vb.push_back(b.rows.at(k.divisor)[k.classId]);
        }
        return va < vb;
    });
    memo[n] = units;
    return units;
}

}  // namespace

std::vector<std::pair<int, long long>> bounding_box(const CharacterTable& table, long n) {
    std::vector<std::pair<int, long long>> box;
    for (int c = 0; c < table.num_classes(); ++c)
        if (entry_may_be_nonzero(table, n, 1, c) && !(n == 1 && c == table.identity_class()))
            box.emplace_back(c, table.classes()[c].size);
    return box;
}

SolutionSet enumerate_standard(const CharacterTable& table, long n,
                               const SolveOptions& options) {
    require_order_in_exponent(table, n);
    std::map<long, std::vector<VirtualUnit>> memo;
    SolutionSet out;
    out.n = n;
    out.units = enum_std_impl(table, n, options, memo);
    for (const VirtualUnit& X : out.units) {
        SolutionFlags f;
        f.is_trivial = unit_is_trivial(table, X);
        f.all_nonnegative = unit_all_nonnegative(X);
        f.pap_ok = pap_check(table, X).first;
        out.flags.push_back(f);
    }
    return out;
}

SolutionSet enumerate_pap(const CharacterTable& table, long n, const SolveOptions& options) {
    require_order_in_exponent(table, n);
    if (!table.pap_assumed() && !options.acknowledge_pap_assumption)
        throw PreconditionError(
            "the PAP-adapted method is only valid for units with the power "
            "property; the table is not marked pap_assumed and the assumption "
            "was not acknowledged");

    ConstraintSystem sys;
    sys.table = &table;
    sys.n = n;
    sys.characters = irr_n(table, n, options.compile.brauer_primes);
    for (int c = 0; c < table.num_classes(); ++c)
        if (entry_may_be_nonzero(table, n, 1, c)) sys.vars.push_back({1, c});
    for (const VarKey& k : sys.vars) {
        sys.var_index[k] = static_cast<int>(sys.var_index.size());
        sys.box.push_back(table.classes()[k.classId].size);
    }

    {  // augmentation 1 as a pair of inequalities
        LinearRow lo;
        lo.coeffs.assign(sys.vars.size(), 1);
        lo.constant = -1;
        lo.provenance = "augmentation";
        LinearRow hi = lo;
        for (auto& v : hi.coeffs) v = -1;
        hi.constant = 1;
        sys.rows.push_back(lo);
        sys.rows.push_back(hi);
    }
    // Berman-Higman zeros of the expansion: for every divisor row d and every
    // entry forced to vanish there, the pushed sum over Y must be zero.  This
    // pins the candidates to order exactly n (an element of smaller order
    // would land row n/|g| on the identity).
    for (long d : divisors(n)) {
        if (d == 1) continue;
        std::map<int, std::vector<int>> pushed;  // target class -> var indices
        for (size_t i = 0; i < sys.vars.size(); ++i)
            pushed[table.power_class(sys.vars[i].classId, d)].push_back(static_cast<int>(i));
        for (const auto& [c, idxs] : pushed) {
            if (entry_may_be_nonzero(table, n, d, c)) continue;
            LinearRow lo;
            lo.coeffs.assign(sys.vars.size(), 0);
            for (int i : idxs) lo.coeffs[i] = 1;
            lo.provenance = "forced zero of row " + std::to_string(d) + " at " +
                            table.classes()[c].name;
            LinearRow hi = lo;
            for (auto& v : hi.coeffs) v = -v;
            hi.provenance = lo.provenance;
            sys.rows.push_back(std::move(lo));
            sys.rows.push_back(std::move(hi));
        }
    }
    // sum_C Y_C mu(chi, C, xi) >= 0; the mu values are plain integers, so no
    // integrality rows arise.
    std::set<std::vector<long long>> seenRows;
    for (CharRef chi : sys.characters) {
        for (long e = 0; e < n; ++e) {
            const Cyclotomic xi = Cyclotomic::root_of_unity(n, e);
            LinearRow row;
            row.coeffs.assign(sys.vars.size(), 0);
            for (size_t i = 0; i < sys.vars.size(); ++i) {
                const Rat mu = mu_class(table, chi, sys.vars[i].classId, n, xi);
                if (!is_integer(mu))
                    throw PreconditionError("mu(" + chi.label() + ", class, zeta^" +
                                            std::to_string(e) + ") is not an integer");
                row.coeffs[i] = to_long(mu);
            }
            row.provenance = "muPAP(" + chi.label() + ", zeta^" + std::to_string(e) + ")";
            if (seenRows.insert(row.coeffs).second) sys.rows.push_back(std::move(row));
        }
    }

    SearchProblem p = make_problem(sys, {});
    SolutionSet out;
    out.n = n;
    for (const auto& vals : solve_problem(p, options.budget, options.parallel)) {
        PAPVector Y;
        Y.order = n;
        Y.values.assign(table.num_classes(), 0);
        for (size_t i = 0; i < sys.vars.size(); ++i) Y.values[sys.vars[i].classId] = vals[i];
        validate_pap_vector(table, Y);
        // independent exact re-check of every multiplicity
        for (CharRef chi : sys.characters)
            for (long e = 0; e < n; ++e) {
                const Rat mu = mu_of_expansion(table, chi, Y, Cyclotomic::root_of_unity(n, e));
                if (!is_integer(mu) || mu < 0)
                    throw Error("internal error: emitted PAP solution has invalid mu for " +
                                chi.label());
            }
        SolutionFlags f;
        f.pap_ok = true;
        f.all_nonnegative =
            std::all_of(Y.values.begin(), Y.values.end(), [](long long v) { return v >= 0; });
        f.is_trivial = false;
        for (int c : table.classes_of_order(n)) {
            std::vector<long long> ind(table.num_classes(), 0);
            ind[c] = 1;
            if (Y.values == ind) f.is_trivial = true;
        }
        out.vectors.push_back(std::move(Y));
        out.flags.push_back(f);
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Proven: return "proven";
        case Verdict::Open: return "open";
        default: return "n/a";
    }
}

AnalysisReport analyze(const CharacterTable& table, const std::vector<long>& orders,
                       const SolveOptions& options, bool pap_adapted) {
    AnalysisReport rep;
    rep.table_name = table.name();
    rep.pap_adapted = pap_adapted;
    std::vector<long> ns = orders;
    if (ns.empty()) ns = divisors(table.exponent());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    rep.group_spectrum = table.element_orders();
    std::set<long> unitSpec;

    for (long n : ns) {
        OrderReport ord;
        ord.n = n;
        ord.group_has_element = !table.classes_of_order(n).empty();
        if (n < 1 || table.exponent() % n != 0) {
            // Cohn-Livingstone: the exponents of G and V(ZG) agree, so no
            // torsion unit has this order at all.
            ord.impossible_by_exponent = true;
            ord.zc = ord.pap = Verdict::Proven;
            ord.genbp_holds = true;
            ord.order_excluded = !ord.group_has_element;
            rep.orders.push_back(std::move(ord));
            continue;
        }
        try {
            ord.solutions = pap_adapted ? enumerate_pap(table, n, options)
                                        : enumerate_standard(table, n, options);
        } catch (const ResourceLimitError& e) {
            ord.resource_limited = true;
            ord.resource_message = e.what();
            rep.orders.push_back(std::move(ord));
            continue;
        }
        bool allNonneg = true, allPap = true, genbp = true;
        const size_t count = ord.solutions.size();
        for (size_t i = 0; i < count; ++i) {
            const SolutionFlags& f = ord.solutions.flags[i];
            allNonneg = allNonneg && f.all_nonnegative;
            allPap = allPap && f.pap_ok;
            const std::vector<long long>& first =
                pap_adapted ? ord.solutions.vectors[i].values : ord.solutions.units[i].rows.at(1);
            for (long m : table.element_orders()) {
                if (m == n) continue;
                long long s = 0;
                for (int c : table.classes_of_order(m)) s += first[c];
                if (s != 0) genbp = false;
            }
        }
        ord.zc = allNonneg ? Verdict::Proven : Verdict::Open;
        ord.pap = pap_adapted ? Verdict::NotApplicable
                              : (allPap ? Verdict::Proven : Verdict::Open);
        ord.genbp_holds = genbp;
        ord.order_excluded = ord.solutions.empty() && !ord.group_has_element;
        if (!ord.solutions.empty()) unitSpec.insert(n);
        rep.orders.push_back(std::move(ord));
    }

    rep.unit_spectrum.assign(unitSpec.begin(), unitSpec.end());
    rep.spectrum_match = rep.unit_spectrum == rep.group_spectrum;

    const auto primes = prime_divisors(table.order());
    auto hasOrder = [&](long m) { return !table.classes_of_order(m).empty(); };
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            const long pq = primes[i] * primes[j];
            if (hasOrder(pq)) rep.group_pq_edges.emplace_back(primes[i], primes[j]);
            if (unitSpec.count(pq)) rep.unit_pq_edges.emplace_back(primes[i], primes[j]);
        }
    rep.prime_graph_match = rep.group_pq_edges == rep.unit_pq_edges;
    return rep;
}

}  // namespace zgu
