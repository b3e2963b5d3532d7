#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <iostream>
#include <map>
#include <random>
#include <set>

#include "zgu/character_table.hpp"
#include "zgu/group_ring.hpp"
#include "zgu/numth.hpp"
#include "zgu/solver.hpp"

using namespace zgu;

namespace {

std::string fixture(const std::string& stem) {
    return std::string(ZGU_DATA_DIR) + "/" + stem + ".json";
}

int class_by_name(const CharacterTable& t, const std::string& name) {
    for (const auto& c : t.classes())
        if (c.name == name) return c.id;
    return -1;
}

void report(int number, const std::string& title, bool ok) {
    std::cout << "criterion " << number << " (" << title << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    CHECK_MESSAGE(ok, "criterion ", number, " (", title, ") failed");
}

std::vector<long long> key_of(const VirtualUnit& X) {
    std::vector<long long> v;
    for (const auto& [d, row] : X.rows) v.insert(v.end(), row.begin(), row.end());
    return v;
}

}  // namespace

TEST_CASE("criterion 1: order-6 candidate of the 216-group escapes the power check") {
    bool ok = true;
    CharacterTable g = CharacterTable::load_file(fixture("g216_153"));
    const int c3a = class_by_name(g, "3a"), c3c = class_by_name(g, "3c"),
              c3d = class_by_name(g, "3d"), c3e = class_by_name(g, "3e"),
              c6a = class_by_name(g, "6a");
    ok = ok && c3a >= 0 && c3c >= 0 && c3d >= 0 && c3e >= 0 && c6a >= 0;
    ok = ok && g.power_class(c3a, 2) == c3c && g.power_class(c6a, 2) == c3c &&
         g.power_class(c3d, 2) == c3e;

    SolutionSet s = enumerate_standard(g, 6);
    const VirtualUnit* hit = nullptr;
    for (const auto& X : s.units) {
        const auto& r1 = X.rows.at(1);
        bool match = r1[c3a] == 1 && r1[c6a] == 1 && r1[c3d] == -1;
        for (int c = 0; c < g.num_classes() && match; ++c)
            if (c != c3a && c != c6a && c != c3d && r1[c] != 0) match = false;
        for (long long v : X.rows.at(2))
            if (v != 0 && v != 1) match = false;
        if (match) hit = &X;
    }
    ok = ok && hit != nullptr;
    if (hit) {
        auto [papOk, viols] = pap_check(g, *hit);
        ok = ok && !papOk;
        bool at3c = false, at3e = false;
        for (const auto& v : viols) {
            if (v.divisor == 2 && v.classId == c3c && v.pushed_sum == 2 && v.entry != 2)
                at3c = true;
            if (v.divisor == 2 && v.classId == c3e && v.pushed_sum == -1 && v.entry != -1)
                at3e = true;
        }
        ok = ok && at3c && at3e;
    }
    // the General Bovdi Problem holds for every order-6 solution
    AnalysisReport rep = analyze(g, {6});
    ok = ok && rep.orders.size() == 1 && rep.orders[0].genbp_holds;
    report(1, "example-2 reproduction on the 216-group", ok);
}

TEST_CASE("criterion 2: order-10 candidate of PSL(2,19) fails the power check") {
    bool ok = true;
    CharacterTable g = CharacterTable::load_file(fixture("psl2_19"));
    SolutionSet s = enumerate_standard(g, 10);
    const VirtualUnit* hit = nullptr;
    int hitC = -1;
    for (const auto& X : s.units) {
        for (int C : g.classes_of_order(10)) {
            std::map<long, std::map<int, long long>> want;
            want[10][g.identity_class()] = 1;
            want[5][g.power_class(C, 5)] = 1;
            want[2][g.power_class(C, 2)] = 1;
            want[1][g.power_class(C, 2)] += 1;
            want[1][g.power_class(C, 3)] += 1;
            want[1][g.power_class(C, 4)] -= 1;
            bool match = true;
            for (const auto& [d, row] : X.rows)
                for (int c = 0; c < g.num_classes() && match; ++c) {
                    long long expect = want[d].count(c) ? want[d][c] : 0;
                    if (row[c] != expect) match = false;
                }
            if (match) {
                hit = &X;
                hitC = C;
            }
        }
    }
    ok = ok && hit != nullptr && hitC >= 0;
    if (hit) ok = ok && !pap_check(g, *hit).first;
    AnalysisReport rep = analyze(g, {10});
    ok = ok && rep.orders.size() == 1 && rep.orders[0].genbp_holds;
    report(2, "example-1 reproduction on PSL(2,19)", ok);
}

TEST_CASE("criterion 3: full A5 analysis") {
    bool ok = true;
    CharacterTable a5 = CharacterTable::load_file(fixture("a5"));
    AnalysisReport rep = analyze(a5, {});
    std::map<long, const OrderReport*> byn;
    for (const auto& o : rep.orders) byn[o.n] = &o;
    for (long n : {2L, 3L, 5L}) {
        ok = ok && byn.at(n)->zc == Verdict::Proven;
        for (const auto& f : byn.at(n)->solutions.flags) ok = ok && f.is_trivial;
        ok = ok && !byn.at(n)->solutions.empty();
    }
    for (long n : {6L, 10L, 15L, 30L}) ok = ok && byn.at(n)->solutions.empty();
    ok = ok && rep.spectrum_match && rep.prime_graph_match;
    report(3, "A5 full analysis", ok);
}

TEST_CASE("criterion 4: abelian groups only admit trivial candidates") {
    bool ok = true;
    std::vector<std::vector<long>> shapes;
    for (long n = 1; n <= 12; ++n) shapes.push_back({n});
    shapes.push_back({2, 2});
    shapes.push_back({2, 4});
    for (const auto& shape : shapes) {
        CharacterTable t = CharacterTable::abelian(shape);
        for (long n : divisors(t.exponent())) {
            if (n == 1) continue;
            SolutionSet s = enumerate_standard(t, n);
            std::set<std::vector<long long>> got, want;
            for (const auto& X : s.units) got.insert(key_of(X));
            for (int c : t.classes_of_order(n)) want.insert(key_of(trivial_candidate(t, c)));
            ok = ok && got == want;
            for (const auto& f : s.flags) ok = ok && f.is_trivial && f.all_nonnegative;
        }
    }
    report(4, "abelian sanity", ok);
}

TEST_CASE("criterion 5: PAP-adapted method settles the order-21 Frobenius group") {
    bool ok = true;
    CharacterTable f21 = CharacterTable::load_file(fixture("frobenius21"));
    for (long n : divisors(f21.exponent())) {
        if (n == 1) continue;
        SolutionSet s = enumerate_pap(f21, n);
        if (!f21.classes_of_order(n).empty()) ok = ok && !s.vectors.empty();
        for (const auto& f : s.flags) ok = ok && f.all_nonnegative;
    }
    report(5, "PAP-adapted method on the Frobenius group of order 21", ok);
}

TEST_CASE("criterion 6: search equals the naive oracle on small fixtures") {
    bool ok = true;
    for (const char* stem : {"c3", "c6", "d8", "frobenius21"}) {
        CharacterTable t = CharacterTable::load_file(fixture(stem));
        if (t.order() > 24) continue;
        for (long n : divisors(t.exponent())) {
            if (n == 1) continue;
            SolveOptions opt;
            opt.use_recursion = false;
            opt.compile.use_cl_congruences = false;
            opt.compile.use_folklore_congruences = false;
            SolutionSet fast = enumerate_standard(t, n, opt);
            std::vector<VirtualUnit> slow = reference_enumerate(t, n, opt.compile);
            std::set<std::vector<long long>> a, b;
            for (const auto& X : fast.units) a.insert(key_of(X));
            for (const auto& X : slow) b.insert(key_of(X));
            ok = ok && a == b && a.size() == fast.units.size();
        }
    }
    report(6, "oracle equivalence on groups of order at most 24", ok);
}

TEST_CASE("criterion 7: identity suites on random candidates") {
    bool ok = true;
    std::mt19937 rng(424242);
    for (const char* stem : {"c6", "d8", "a5", "frobenius21"}) {
        CharacterTable t = CharacterTable::load_file(fixture(stem));
        const long n = t.element_orders().back();
        auto chars = irr_n(t, n, std::nullopt);

        // random structurally valid X: degree identity per character
        for (int trial = 0; trial < 1000; ++trial) {
            VirtualUnit X;
            X.order = n;
            for (long d : divisors(n)) {
                auto& row = X.rows[d];
                row.assign(t.num_classes(), 0);
                if (d == n) {
                    row[t.identity_class()] = 1;
                    continue;
                }
                std::vector<int> live;
                for (int c = 0; c < t.num_classes(); ++c)
                    if (entry_may_be_nonzero(t, n, d, c)) live.push_back(c);
                long long sum = 0;
                for (size_t i = 0; i + 1 < live.size(); ++i) {
                    row[live[i]] = std::uniform_int_distribution<int>(-2, 2)(rng);
                    sum += row[live[i]];
                }
                row[live.back()] = 1 - sum;
            }
            const CharRef chi = chars[trial % chars.size()];
            Rat total = 0;
            for (long e = 0; e < n; ++e)
                total += mu_virtual(t, chi, X, Cyclotomic::root_of_unity(n, e));
            ok = ok && total == Rat(char_degree(t, chi));
        }

        // random PAP vectors: expansion identity and pap_check closure
        for (int trial = 0; trial < 1000; ++trial) {
            PAPVector Y;
            Y.order = n;
            Y.values.assign(t.num_classes(), 0);
            // support on classes of order n keeps every pushed row legal
            std::vector<int> live = t.classes_of_order(n);
            long long sum = 0;
            for (size_t i = 0; i + 1 < live.size(); ++i) {
                Y.values[live[i]] = std::uniform_int_distribution<int>(-2, 2)(rng);
                sum += Y.values[live[i]];
            }
            Y.values[live.back()] = 1 - sum;
            VirtualUnit X = pap_expand(t, Y);
            ok = ok && pap_check(t, X).first;
            const CharRef chi = chars[trial % chars.size()];
            const Cyclotomic xi = Cyclotomic::root_of_unity(n, trial % n);
            ok = ok && mu_of_expansion(t, chi, Y, xi) == mu_virtual(t, chi, X, xi);
        }

        // group-element closure
        for (int c = 0; c < t.num_classes(); ++c) {
            const long m = t.classes()[c].element_order;
            if (m == 1) continue;
            ConstraintSystem sys = compile_constraints(t, m);
            VirtualUnit X = trivial_candidate(t, c);
            for (const auto& r : sys.rows) ok = ok && row_satisfied(sys, r, X);
            PAPVector Y;
            Y.order = m;
            Y.values.assign(t.num_classes(), 0);
            Y.values[c] = 1;
            for (const CharRef& chi : irr_n(t, m, std::nullopt))
                for (long e = 0; e < m; ++e) {
                    Rat v = mu_of_expansion(t, chi, Y, Cyclotomic::root_of_unity(m, e));
                    ok = ok && is_integer(v) && v >= 0;
                }
        }
    }
    report(7, "identity suites", ok);
}

TEST_CASE("criterion 8: PAP(2) fails for 1 - g + g^2 in C7") {
    GroupRingElement u({7});
    u.set_coeff({0}, 1);
    u.set_coeff({1}, -1);
    u.set_coeff({2}, 1);
    GroupRingElement sq = u.pow(2);
    std::map<long, long long> pushed;
    for (long k = 0; k < 7; ++k) pushed[(2 * k) % 7] += u.coeff({k});
    bool violated = false;
    for (long k = 0; k < 7; ++k)
        if (sq.coeff({k}) != pushed[k]) violated = true;
    report(8, "PAP(2) counterexample in C7", violated);
}

TEST_CASE("criterion 9: prime-power congruences hold on trivial candidates") {
    bool ok = true;
    for (const char* stem : {"c3", "c6", "d8", "a5", "frobenius21", "g216_153", "psl2_19"}) {
        CharacterTable t = CharacterTable::load_file(fixture(stem));
        std::map<long, ConstraintSystem> systems;
        for (int c = 0; c < t.num_classes(); ++c) {
            const long m = t.classes()[c].element_order;
            if (m == 1 || prime_divisors(m).size() != 1) continue;
            if (!systems.count(m)) systems.emplace(m, compile_constraints(t, m));
            const ConstraintSystem& sys = systems.at(m);
            VirtualUnit X = trivial_candidate(t, c);
            for (const auto& r : sys.rows)
                if (r.kind == LinearRow::Kind::CongMod) ok = ok && row_satisfied(sys, r, X);
        }
    }
    report(9, "prime-power congruence consistency", ok);
}
