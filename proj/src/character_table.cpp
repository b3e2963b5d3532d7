#include "zgu/character_table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

namespace zgu {

namespace {

std::string order_letter_name(long order, int index) {
    std::string suffix;
    int n = index;
    while (true) {
        suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
        n = n / 26 - 1;
        if (n < 0) break;
    }
    return std::to_string(order) + suffix;
}

}  // namespace

CharacterTable CharacterTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open table file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed table file " + path + ": " + e.what());
    }
    return from_json(doc);
}

CharacterTable CharacterTable::from_json(const nlohmann::json& doc) {
    CharacterTable t;
    try {
        t.name_ = doc.at("name").get<std::string>();
        t.order_ = doc.at("order").get<long>();
        t.exponent_ = doc.at("exponent").get<long>();
        int id = 0;
        for (const auto& c : doc.at("classes")) {
            ClassInfo ci;
            ci.id = id++;
            ci.name = c.at("name").get<std::string>();
            ci.element_order = c.at("element_order").get<long>();
            ci.size = c.at("size").get<long>();
            if (ci.size <= 0 || t.order_ % ci.size != 0)
                throw ValidationError("class " + ci.name + ": size does not divide group order");
            ci.centralizer_order = t.order_ / ci.size;
            t.classes_.push_back(std::move(ci));
        }
        for (const auto& [key, val] : doc.at("power_maps").items()) {
            long p = std::stol(key);
            t.power_maps_[p] = val.get<std::vector<int>>();
        }
        for (const auto& row : doc.at("characters")) {
            std::vector<Cyclotomic> chi;
            for (const auto& v : row) chi.push_back(Cyclotomic::from_json(v));
            t.characters_.push_back(std::move(chi));
        }
        if (doc.contains("brauer")) {
            for (const auto& [key, val] : doc.at("brauer").items()) {
                BrauerBlock blk;
                blk.regular_classes = val.at("regular_classes").get<std::vector<int>>();
                for (const auto& row : val.at("characters")) {
                    std::vector<Cyclotomic> chi;
                    for (const auto& v : row) chi.push_back(Cyclotomic::from_json(v));
                    blk.characters.push_back(std::move(chi));
                }
                t.brauer_[std::stol(key)] = std::move(blk);
            }
        }
        t.pap_assumed_ = doc.value("pap_assumed", false);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("table schema violation: ") + e.what());
    }
    t.validate();
    if (t.pap_assumed_) t.check_pap_assumption();
    return t;
}

long CharacterTable::degree(int chi) const {
    return to_long(characters_.at(chi).at(0).rational_value());
}

int CharacterTable::power_class(int c, long long k) const {
    const long m = classes_.at(c).element_order;
    long kk = mod_pos(k, m);
    if (kk == 0) return identity_class();
    int cur = c;
    for (auto [p, e] : factorize(kk)) {
        auto it = power_maps_.find(p);
        if (it == power_maps_.end())
            throw PreconditionError("missing power map for prime " + std::to_string(p));
        for (int i = 0; i < e; ++i) cur = it->second.at(cur);
    }
    return cur;
}

std::vector<int> CharacterTable::classes_of_order(long m) const {
    std::vector<int> out;
    for (const auto& c : classes_)
        if (c.element_order == m) out.push_back(c.id);
    return out;
}

std::vector<long> CharacterTable::element_orders() const {
    std::vector<long> out;
    for (const auto& c : classes_)
        if (std::find(out.begin(), out.end(), c.element_order) == out.end())
            out.push_back(c.element_order);
    std::sort(out.begin(), out.end());
    return out;
}

void CharacterTable::validate() const {
    if (order_ <= 0) throw ValidationError("group order must be positive");
    if (exponent_ <= 0 || order_ % exponent_ != 0)
        throw ValidationError("exponent must be positive and divide the group order");
    if (classes_.empty()) throw ValidationError("no conjugacy classes");
    const auto& id = classes_[0];
    if (id.element_order != 1 || id.size != 1)
        throw ValidationError("class 0 must be the identity (order 1, size 1)");
    long total = 0;
    for (const auto& c : classes_) {
        total += c.size;
        if (c.element_order < 1 || exponent_ % c.element_order != 0)
            throw ValidationError("class " + c.name + ": element order does not divide the exponent");
        if (static_cast<long long>(c.centralizer_order) * c.size != order_)
            throw ValidationError("class " + c.name + ": centralizer * size != group order");
    }
    if (total != order_) throw ValidationError("class sizes do not sum to the group order");

    for (long p : prime_divisors(exponent_)) {
        auto it = power_maps_.find(p);
        if (it == power_maps_.end())
            throw ValidationError("missing power map for prime " + std::to_string(p));
        const auto& pm = it->second;
        if (static_cast<int>(pm.size()) != num_classes())
            throw ValidationError("power map for prime " + std::to_string(p) + " has wrong length");
        for (int c = 0; c < num_classes(); ++c) {
            if (pm[c] < 0 || pm[c] >= num_classes())
                throw ValidationError("power map for prime " + std::to_string(p) +
                                      " maps class " + std::to_string(c) + " out of range");
            long m = classes_[c].element_order;
            long want = m / std::gcd(m, p);
            if (classes_[pm[c]].element_order != want)
                throw ValidationError("power map for prime " + std::to_string(p) +
                                      " inconsistent at class " + classes_[c].name);
        }
    }

    if (characters_.size() != classes_.size())
        throw ValidationError("number of characters (" + std::to_string(characters_.size()) +
                              ") differs from number of classes");
    Int degsq = 0;
    for (size_t i = 0; i < characters_.size(); ++i) {
        if (characters_[i].size() != classes_.size())
            throw ValidationError("character " + std::to_string(i) + " has wrong length");
        const Cyclotomic& v = characters_[i][0];
        if (!v.is_rational() || !is_integer(v.rational_value()) || v.rational_value() <= 0)
            throw ValidationError("character " + std::to_string(i) +
                                  ": degree is not a positive integer");
        Int d = numerator(v.rational_value());
        degsq += d * d;
    }
    if (degsq != order_)
        throw ValidationError("sum of squared degrees differs from the group order");

    // first orthogonality: sum_C |C| chi_i(C) conj(chi_j(C)) = |G| [i=j]
    const size_t r = classes_.size();
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = i; j < r; ++j) {
            Cyclotomic acc;
            for (size_t c = 0; c < r; ++c) {
                Cyclotomic term = characters_[i][c] * characters_[j][c].galois(-1);
                acc = acc + term.scaled(Rat(classes_[c].size));
            }
            Rat want(i == j ? order_ : 0);
            if (!acc.is_rational() || acc.rational_value() != want)
                throw ValidationError("row orthogonality fails for characters (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }
    // column orthogonality: sum_chi chi(C) conj(chi(D)) = [C=D] |C_G(C)|
    for (size_t c = 0; c < r; ++c) {
        for (size_t d = c; d < r; ++d) {
            Cyclotomic acc;
            for (size_t i = 0; i < r; ++i)
                acc = acc + characters_[i][c] * characters_[i][d].galois(-1);
            Rat want(c == d ? classes_[c].centralizer_order : 0);
            if (!acc.is_rational() || acc.rational_value() != want)
                throw ValidationError("column orthogonality fails for classes (" +
                                      classes_[c].name + ", " + classes_[d].name + ")");
        }
    }

    for (const auto& [p, blk] : brauer_) {
        if (p < 2 || order_ % p != 0)
            throw ValidationError("Brauer block prime " + std::to_string(p) +
                                  " does not divide the group order");
        if (blk.regular_classes.empty() || blk.regular_classes[0] != identity_class())
            throw ValidationError("Brauer block for prime " + std::to_string(p) +
                                  " must list the identity class first");
        for (int c : blk.regular_classes) {
            if (c < 0 || c >= num_classes())
                throw ValidationError("Brauer block class id out of range");
            if (classes_[c].element_order % p == 0)
                throw ValidationError("Brauer block for prime " + std::to_string(p) +
                                      " lists the p-singular class " + classes_[c].name);
        }
        for (size_t i = 0; i < blk.characters.size(); ++i) {
            if (blk.characters[i].size() != blk.regular_classes.size())
                throw ValidationError("Brauer character " + std::to_string(i) +
                                      " for prime " + std::to_string(p) + " has wrong length");
            const Cyclotomic& v = blk.characters[i][0];
            if (!v.is_rational() || !is_integer(v.rational_value()) || v.rational_value() <= 0)
                throw ValidationError("Brauer character " + std::to_string(i) +
                                      ": degree is not a positive integer");
        }
    }
}

void CharacterTable::check_pap_assumption() {
    // Necessary condition only: a linear character of prime order, i.e. a
    // normal subgroup of prime index. Nilpotency of the kernel is NOT checked.
    bool found = false;
    for (size_t i = 0; i < characters_.size() && !found; ++i) {
        if (degree(static_cast<int>(i)) != 1) continue;
        long ord = 1;
        for (int c = 0; c < num_classes(); ++c) {
            const Cyclotomic& v = characters_[i][c];
            long m = classes_[c].element_order;
            for (long k = 1; k <= m; ++k) {
                if (v.pow(k) == Cyclotomic::integer(1)) {
                    ord = std::lcm(ord, k);
                    break;
                }
            }
        }
        if (ord > 1 && factorize(ord).size() == 1 && factorize(ord)[0].second == 1) found = true;
    }
    if (!found)
        warnings_.push_back("pap_assumed is set but no linear character of prime order was found");
    warnings_.push_back("pap_assumed is user-supplied metadata; nilpotency of the kernel is not verified");
}

CharacterTable CharacterTable::abelian(const std::vector<long>& invariant_factors) {
    if (invariant_factors.empty())
        throw PreconditionError("abelian table needs at least one invariant factor");
    for (long f : invariant_factors)
        if (f < 1) throw PreconditionError("invariant factors must be positive");

    CharacterTable t;
    std::ostringstream nm;
    nm << "C" << invariant_factors[0];
    for (size_t i = 1; i < invariant_factors.size(); ++i) nm << "xC" << invariant_factors[i];
    t.name_ = nm.str();

    long order = 1, exponent = 1;
    for (long f : invariant_factors) {
        order *= f;
        exponent = std::lcm(exponent, f);
    }
    t.order_ = order;
    t.exponent_ = exponent;

    // enumerate all exponent tuples
    const size_t k = invariant_factors.size();
    std::vector<std::vector<long>> elems;
    std::vector<long> cur(k, 0);
    while (true) {
        elems.push_back(cur);
        size_t i = 0;
        while (i < k) {
            if (++cur[i] < invariant_factors[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    auto elem_order = [&](const std::vector<long>& g) {
        long o = 1;
        for (size_t i = 0; i < k; ++i)
            o = std::lcm(o, invariant_factors[i] / std::gcd(invariant_factors[i], g[i]));
        return o;
    };
    // identity first, then by (order, tuple)
    std::stable_sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        return std::make_pair(elem_order(a), a) < std::make_pair(elem_order(b), b);
    });

    std::map<std::vector<long>, int> index;
    std::map<long, int> letter;
    for (size_t c = 0; c < elems.size(); ++c) {
        ClassInfo ci;
        ci.id = static_cast<int>(c);
        ci.element_order = elem_order(elems[c]);
        ci.size = 1;
        ci.centralizer_order = order;
        ci.name = order_letter_name(ci.element_order, letter[ci.element_order]++);
        t.classes_.push_back(std::move(ci));
        index[elems[c]] = static_cast<int>(c);
    }
    // power maps for every prime up to the maximal element order, so that
    // composite powers can always be routed through prime maps
    for (long p = 2; p <= exponent; ++p) {
        if (factorize(p).size() != 1 || factorize(p)[0].second != 1) continue;
        std::vector<int> pm(elems.size());
        for (size_t c = 0; c < elems.size(); ++c) {
            std::vector<long> g(k);
            for (size_t i = 0; i < k; ++i) g[i] = (elems[c][i] * p) % invariant_factors[i];
            pm[c] = index.at(g);
        }
        t.power_maps_[p] = std::move(pm);
    }
    // characters chi_j(g) = prod_i zeta_{f_i}^{j_i g_i}; indexed like elements
    for (const auto& j : elems) {
        std::vector<Cyclotomic> chi;
        for (const auto& g : elems) {
            long long e = 0;
            for (size_t i = 0; i < k; ++i)
                e += j[i] * g[i] % invariant_factors[i] * (exponent / invariant_factors[i]);
            chi.push_back(Cyclotomic::root_of_unity(exponent, e));
        }
        t.characters_.push_back(std::move(chi));
    }
    t.validate();
    return t;
}

}  // namespace zgu
