#include "zgu/help_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

namespace zgu {

namespace {

long long checked_coeff(const Rat& q, const std::string& what) {
    if (!is_integer(q))
        throw PreconditionError(what + " is not an integer; character values must be algebraic integers");
    return to_long(q);
}

}  // namespace

std::string CharRef::label() const {
    if (kind == Kind::Ordinary) return "chi" + std::to_string(index + 1);
    return "phi" + std::to_string(index + 1) + "@" + std::to_string(prime);
}

std::vector<CharRef> irr_n(const CharacterTable& table, long n,
                           const std::optional<std::vector<long>>& brauer_primes) {
    std::vector<CharRef> out;
    for (int i = 0; i < static_cast<int>(table.characters().size()); ++i)
        out.push_back(CharRef::ordinary(i));
    std::vector<long> primes;
    if (brauer_primes) {
        for (long p : *brauer_primes) {
            if (!table.brauer().count(p))
                throw PreconditionError("no " + std::to_string(p) + "-Brauer block in table " + table.name());
            if (n % p != 0) primes.push_back(p);
        }
    } else {
        for (const auto& [p, block] : table.brauer())
            if (n % p != 0) primes.push_back(p);
    }
    for (long p : primes) {
        const BrauerBlock& block = table.brauer().at(p);
        for (int i = 0; i < static_cast<int>(block.characters.size()); ++i)
            out.push_back(CharRef::brauer(p, i));
    }
    return out;
}

const Cyclotomic& char_value(const CharacterTable& table, CharRef chi, int classId) {
    if (chi.kind == CharRef::Kind::Ordinary) return table.characters()[chi.index][classId];
    static const Cyclotomic zero;
    const BrauerBlock& block = table.brauer().at(chi.prime);
    auto it = std::lower_bound(block.regular_classes.begin(), block.regular_classes.end(), classId);
    if (it == block.regular_classes.end() || *it != classId) return zero;
    return block.characters[chi.index][it - block.regular_classes.begin()];
}

long char_degree(const CharacterTable& table, CharRef chi) {
    return to_long(char_value(table, chi, table.identity_class()).rational_value());
}

bool entry_may_be_nonzero(const CharacterTable& table, long n, long d, int classId) {
    const long m = table.classes()[classId].element_order;
    if (d == n) return classId == table.identity_class();
    // u^d has order n/d > 1: the identity augmentation vanishes (Berman-Higman)
    // and so does every class whose order does not divide n/d.
    if (classId == table.identity_class()) return false;
    return (n / d) % m == 0;
}

void validate_virtual_unit(const CharacterTable& table, const VirtualUnit& X) {
    if (X.order < 1) throw PreconditionError("candidate order must be positive");
    const auto divs = divisors(X.order);
    if (X.rows.size() != divs.size())
        throw PreconditionError("candidate must carry exactly one row per divisor of its order");
    for (long d : divs) {
        auto it = X.rows.find(d);
        if (it == X.rows.end())
            throw PreconditionError("candidate is missing the row for divisor " + std::to_string(d));
        const auto& row = it->second;
        if (static_cast<int>(row.size()) != table.num_classes())
            throw PreconditionError("row " + std::to_string(d) + " has the wrong number of classes");
        long long sum = 0;
        for (int c = 0; c < table.num_classes(); ++c) {
            sum += row[c];
            if (row[c] != 0 && !entry_may_be_nonzero(table, X.order, d, c))
                throw PreconditionError("row " + std::to_string(d) + " is nonzero at class " +
                                        table.classes()[c].name + ", which is forced to vanish");
        }
        if (sum != 1)
            throw PreconditionError("row " + std::to_string(d) + " has augmentation " +
                                    std::to_string(sum) + ", expected 1");
    }
    if (X.rows.at(X.order)[table.identity_class()] != 1)
        throw PreconditionError("the d = order row must be the identity indicator");
}

void validate_pap_vector(const CharacterTable& table, const PAPVector& Y) {
    if (Y.order < 1) throw PreconditionError("candidate order must be positive");
    if (static_cast<int>(Y.values.size()) != table.num_classes())
        throw PreconditionError("PAP vector has the wrong number of classes");
    long long sum = 0;
    for (int c = 0; c < table.num_classes(); ++c) {
        sum += Y.values[c];
        if (Y.values[c] != 0 && !entry_may_be_nonzero(table, Y.order, 1, c))
            throw PreconditionError("PAP vector is nonzero at class " + table.classes()[c].name +
                                    ", which is forced to vanish");
    }
    if (sum != 1)
        throw PreconditionError("PAP vector has augmentation " + std::to_string(sum) + ", expected 1");
}

Rat mu_virtual(const CharacterTable& table, CharRef chi, const VirtualUnit& X,
               const Cyclotomic& xi) {
    const long n = X.order;
    if (xi.pow(n) != Cyclotomic::integer(1))
        throw PreconditionError("xi must be an n-th root of unity");
    Rat acc(0);
    for (long d : divisors(n)) {
        const auto& row = X.rows.at(d);
        const Cyclotomic xi_inv_d = xi.galois(-1).pow(d);
        for (int c = 0; c < table.num_classes(); ++c) {
            if (row[c] == 0) continue;
            Rat tr = (char_value(table, chi, c) * xi_inv_d).trace_to_rationals(n / d);
            acc += tr * Rat(row[c]);
        }
    }
    return acc / Rat(n);
}

Rat mu_class(const CharacterTable& table, CharRef chi, int classId, long n,
             const Cyclotomic& xi) {
    const long m = table.classes()[classId].element_order;
    if (n % m != 0)
        throw PreconditionError("class order " + std::to_string(m) +
                                " does not divide the working order " + std::to_string(n));
    if (xi.pow(n) != Cyclotomic::integer(1))
        throw PreconditionError("xi must be an n-th root of unity");
    Rat acc(0);
    for (long d : divisors(n)) {
        const Cyclotomic val = char_value(table, chi, table.power_class(classId, d));
        acc += (val * xi.galois(-1).pow(d)).trace_to_rationals(n / d);
    }
    return acc / Rat(n);
}

VirtualUnit trivial_candidate(const CharacterTable& table, int classId) {
    VirtualUnit X;
    X.order = table.classes()[classId].element_order;
    for (long d : divisors(X.order)) {
        std::vector<long long> row(table.num_classes(), 0);
        row[table.power_class(classId, d)] = 1;
        X.rows[d] = row;
    }
    return X;
}

std::pair<bool, std::vector<PapViolation>> pap_check(const CharacterTable& table,
                                                     const VirtualUnit& X) {
    validate_virtual_unit(table, X);
    std::vector<PapViolation> bad;
    const auto& first = X.rows.at(1);
    for (long d : divisors(X.order)) {
        std::vector<long long> pushed(table.num_classes(), 0);
        for (int c = 0; c < table.num_classes(); ++c)
            if (first[c] != 0) pushed[table.power_class(c, d)] += first[c];
        for (int c = 0; c < table.num_classes(); ++c)
            if (pushed[c] != X.rows.at(d)[c]) bad.push_back({d, c, pushed[c], X.rows.at(d)[c]});
    }
    return {bad.empty(), bad};
}

VirtualUnit pap_expand(const CharacterTable& table, const PAPVector& Y) {
    validate_pap_vector(table, Y);
    VirtualUnit X;
    X.order = Y.order;
    for (long d : divisors(Y.order)) {
        std::vector<long long> row(table.num_classes(), 0);
        for (int c = 0; c < table.num_classes(); ++c)
            if (Y.values[c] != 0) row[table.power_class(c, d)] += Y.values[c];
        X.rows[d] = row;
    }
    return X;
}

Rat mu_of_expansion(const CharacterTable& table, CharRef chi, const PAPVector& Y,
                    const Cyclotomic& xi) {
    Rat acc(0);
    for (int c = 0; c < table.num_classes(); ++c)
        if (Y.values[c] != 0)
            acc += mu_class(table, chi, c, Y.order, xi) * Rat(Y.values[c]);
    return acc;
}

// --- constraint compilation -------------------------------------------------

namespace {

struct RowKey {
    int kind;
    long modulus;
    long long constant;
    std::vector<long long> coeffs;
    auto operator<=>(const RowKey&) const = default;
};

void push_unique(ConstraintSystem& sys, std::set<RowKey>& seen, LinearRow row) {
    RowKey key{static_cast<int>(row.kind), row.modulus, row.constant, row.coeffs};
    if (seen.insert(std::move(key)).second) sys.rows.push_back(std::move(row));
}

}  // namespace

ConstraintSystem compile_constraints(const CharacterTable& table, long n,
                                     const CompileOptions& options) {
    if (n < 1) throw PreconditionError("order must be positive");
    ConstraintSystem sys;
    sys.table = &table;
    sys.n = n;
    sys.characters = irr_n(table, n, options.brauer_primes);

    const auto divs = divisors(n);
    for (long d : divs) {
        if (d == n) continue;  // pinned to the identity indicator
        for (int c = 0; c < table.num_classes(); ++c)
            if (entry_may_be_nonzero(table, n, d, c)) sys.vars.push_back({d, c});
    }
    for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i) {
        sys.var_index[sys.vars[i]] = i;
        sys.box.push_back(table.classes()[sys.vars[i].classId].size);
    }

    std::set<RowKey> seen;

    // row sums: each divisor row is a partial augmentation vector of a unit,
    // so it sums to 1.
    for (long d : divs) {
        if (d == n) continue;
        LinearRow lo, hi;
        lo.coeffs.assign(sys.vars.size(), 0);
        for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i)
            if (sys.vars[i].divisor == d) lo.coeffs[i] = 1;
        lo.constant = -1;
        lo.provenance = "augmentation of row " + std::to_string(d);
        hi = lo;
        for (auto& v : hi.coeffs) v = -v;
        hi.constant = 1;
        hi.provenance = lo.provenance;
        push_unique(sys, seen, lo);
        push_unique(sys, seen, hi);
    }

    // n*mu(chi, X, xi) >= 0, <= n*chi(1), and = 0 mod n for every chi in
    // IRR_n and every n-th root of unity xi.  Galois-conjugate xi produce
    // duplicates across conjugate characters; the seen-set drops them.
    for (CharRef chi : sys.characters) {
        const long deg = char_degree(table, chi);
        for (long e = 0; e < n; ++e) {
            LinearRow row;
            row.coeffs.assign(sys.vars.size(), 0);
            for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i) {
                const auto [d, c] = sys.vars[i];
                Cyclotomic xi_inv_d = Cyclotomic::root_of_unity(n, -e * d);
                Rat tr = (char_value(table, chi, c) * xi_inv_d).trace_to_rationals(n / d);
                row.coeffs[i] = checked_coeff(tr, "mu coefficient for " + chi.label());
            }
            row.constant = deg;  // the pinned identity row contributes chi(1)
            row.provenance = "mu(" + chi.label() + ", zeta^" + std::to_string(e) + ")";

            LinearRow cong = row;
            cong.kind = LinearRow::Kind::CongMod;
            cong.modulus = n;
            cong.provenance = row.provenance + " integral";

            LinearRow cap = row;  // n*mu <= n*deg, from the degree identity
            for (auto& v : cap.coeffs) v = -v;
            cap.constant = static_cast<long long>(n) * deg - deg;
            cap.provenance = row.provenance + " degree cap";

            push_unique(sys, seen, std::move(row));
            push_unique(sys, seen, std::move(cong));
            push_unique(sys, seen, std::move(cap));
        }
    }

    // prime-power coefficient congruences: for u of order p^m and each
    // 1 <= k <= m, the augmentations over classes of order exactly p^k sum
    // to 1 mod p when p^k is the full order and to 0 mod p otherwise.
    const auto nfac = factorize(n);
    if (options.use_cl_congruences && nfac.size() == 1) {
        const long p = nfac.begin()->first;
        for (long d : divs) {
            const long nd = n / d;  // order of u^d
            if (nd == 1) continue;
            for (long pk = p; pk <= nd; pk *= p) {
                LinearRow row;
                row.kind = LinearRow::Kind::CongMod;
                row.modulus = p;
                row.coeffs.assign(sys.vars.size(), 0);
                bool live = false;
                for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i)
                    if (sys.vars[i].divisor == d &&
                        table.classes()[sys.vars[i].classId].element_order == pk) {
                        row.coeffs[i] = 1;
                        live = true;
                    }
                row.constant = (pk == nd) ? -1 : 0;
                row.provenance = "order-" + std::to_string(pk) + " augmentations of row " +
                                 std::to_string(d) + " mod " + std::to_string(p);
                if (live || row.constant != 0) push_unique(sys, seen, std::move(row));
            }
        }
    }

    // cross-row power congruences: sum_{D^{p^k} = C} X_{d,D} = X_{d p^k, C}
    // mod p.
    if (options.use_folklore_congruences) {
        for (long d : divs) {
            for (const auto& [p, mult] : factorize(n / d)) {
                for (long pk = p; (n / d) % pk == 0; pk *= p) {
                    for (int c = 0; c < table.num_classes(); ++c) {
                        LinearRow row;
                        row.kind = LinearRow::Kind::CongMod;
                        row.modulus = p;
                        row.coeffs.assign(sys.vars.size(), 0);
                        bool live = false;
                        for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i) {
                            const auto [dv, cv] = sys.vars[i];
                            if (dv == d && table.power_class(cv, pk) == c) {
                                row.coeffs[i] += 1;
                                live = true;
                            }
                            if (dv == d * pk && cv == c) {
                                row.coeffs[i] -= 1;
                                live = true;
                            }
                        }
                        if (d * pk == n && c == table.identity_class()) row.constant -= 1;
                        row.provenance = "power-" + std::to_string(pk) + " pushforward of row " +
                                         std::to_string(d) + " at " + table.classes()[c].name +
                                         " mod " + std::to_string(p);
                        if (live) push_unique(sys, seen, std::move(row));
                    }
                }
            }
        }
    }

    return sys;
}

bool row_satisfied(const ConstraintSystem& sys, const LinearRow& row, const VirtualUnit& X) {
    long long v = row.constant;
    for (int i = 0; i < static_cast<int>(sys.vars.size()); ++i) {
        const auto [d, c] = sys.vars[i];
        v += row.coeffs[i] * X.rows.at(d)[c];
    }
    if (row.kind == LinearRow::Kind::Geq0) return v >= 0;
    return v % row.modulus == 0;
}

}  // namespace zgu
