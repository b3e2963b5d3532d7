#include "zgu/solver.hpp"

#include <functional>
#include <vector>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

namespace zgu {

namespace {

void require_order_in_exponent(const CharacterTable& table, long n) {
    if (n < 1 || table.exponent() % n != 0)
        throw PreconditionError("order " + std::to_string(n) +
                                " does not divide the exponent " +
                                std::to_string(table.exponent()));
}

}  // namespace

// Serial oracle: enumerates candidate rows divisor by divisor and keeps the
// combinations whose scaled moment values are nonnegative integers.  No
// propagation, no recursion, no congruence shortcuts; used to cross-check the
// optimized search.
std::vector<VirtualUnit> reference_enumerate(const CharacterTable& table, long n,
                                             const CompileOptions& options) {
    require_order_in_exponent(table, n);
    const auto divs = divisors(n);
    const auto chars = irr_n(table, n, options.brauer_primes);

    // live classes and all augmentation-1 box vectors, per divisor row
    std::vector<long> rowDivs;
    std::vector<std::vector<int>> live;
    std::vector<std::vector<std::vector<long long>>> cands;
    for (long d : divs) {
        if (d == n) continue;
        rowDivs.push_back(d);
        std::vector<int> cls;
        for (int c = 0; c < table.num_classes(); ++c)
            if (entry_may_be_nonzero(table, n, d, c)) cls.push_back(c);
        std::vector<std::vector<long long>> vecs;
        std::vector<long long> cur(cls.size(), 0);
        std::function<void(size_t, long long)> gen = [&](size_t i, long long sum) {
            if (i == cls.size()) {
                if (sum == 1) vecs.push_back(cur);
                return;
            }
            const long long b = table.classes()[cls[i]].size;
            for (long long v = -b; v <= b; ++v) {
                cur[i] = v;
                gen(i + 1, sum + v);
            }
        };
        gen(0, 0);
        live.push_back(std::move(cls));
        cands.push_back(std::move(vecs));
    }

    // integer matrix of n * Tr(chi(C) zeta^{-ed}) per constraint row and
    // candidate slot, assembled straight from the defining formula
    const int R = static_cast<int>(chars.size()) * static_cast<int>(n);
    std::vector<long long> base(R);  // pinned identity row: chi(1)
    std::vector<std::vector<std::vector<long long>>> coeff(rowDivs.size());
    for (int r = 0; r < R; ++r) base[r] = char_degree(table, chars[r / n]);
    for (size_t k = 0; k < rowDivs.size(); ++k) {
        coeff[k].assign(R, std::vector<long long>(live[k].size(), 0));
        for (int r = 0; r < R; ++r) {
            const CharRef chi = chars[r / n];
            const long e = r % n;
            for (size_t i = 0; i < live[k].size(); ++i) {
                const Cyclotomic val = char_value(table, chi, live[k][i]) *
                                       Cyclotomic::root_of_unity(n, -e * rowDivs[k]);
                coeff[k][r][i] = to_long(val.trace_to_rationals(n / rowDivs[k]));
            }
        }
    }

    std::vector<VirtualUnit> out;
    std::vector<size_t> pick(rowDivs.size(), 0);
    std::function<void(size_t, std::vector<long long>&)> walk = [&](size_t k,
                                                                    std::vector<long long>& acc) {
        if (k == rowDivs.size()) {
            for (int r = 0; r < R; ++r)
                if (acc[r] < 0 || acc[r] % n != 0) return;
            VirtualUnit X;
            X.order = n;
            for (long d : divs) X.rows[d].assign(table.num_classes(), 0);
            X.rows[n][table.identity_class()] = 1;
            for (size_t j = 0; j < rowDivs.size(); ++j)
                for (size_t i = 0; i < live[j].size(); ++i)
                    X.rows[rowDivs[j]][live[j][i]] = cands[j][pick[j]][i];
            out.push_back(std::move(X));
            return;
        }
        std::vector<long long> next(R);
        for (size_t ci = 0; ci < cands[k].size(); ++ci) {
            pick[k] = ci;
            next = acc;
            for (int r = 0; r < R; ++r)
                for (size_t i = 0; i < live[k].size(); ++i)
                    next[r] += coeff[k][r][i] * cands[k][ci][i];
            walk(k + 1, next);
        }
    };
    std::vector<long long> acc = base;
    walk(0, acc);
    return out;
}

}  // namespace zgu
