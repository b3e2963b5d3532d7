#include "zgu/cyclotomic.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>

#include <nlohmann/json.hpp>

#include "zgu/errors.hpp"
#include "zgu/numth.hpp"

namespace zgu {

namespace {

std::atomic<long> g_conductor_cap{10000};

void check_conductor(long n) {
    if (n <= 0) throw InvalidConductorError("conductor must be positive, got " + std::to_string(n));
    if (n > g_conductor_cap.load())
        throw InvalidConductorError("conductor " + std::to_string(n) +
                                    " exceeds the cap " + std::to_string(g_conductor_cap.load()));
}

// Exact division of integer polynomials, remainder known to vanish.
std::vector<Int> exact_divide(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    const size_t dd = den.size() - 1;
    std::vector<Int> quot(rem.size() - dd, 0);
    for (size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Int f = rem[i] / den[dd];  // den monic in our usage, but stay general
        quot[i - dd] = f;
        for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
    }
    return quot;
}

}  // namespace

long Cyclotomic::conductor_cap() { return g_conductor_cap.load(); }
void Cyclotomic::set_conductor_cap(long cap) { g_conductor_cap.store(cap); }

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom up so
    // all recursion is already in the cache.
    std::function<const std::vector<Int>&(long)> get = [&](long m) -> const std::vector<Int>& {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> poly(m + 1, 0);
        poly[0] = -1;
        poly[m] = 1;
        for (long d : divisors(m)) {
            if (d == m) continue;
            poly = exact_divide(poly, get(d));
        }
        return cache.emplace(m, std::move(poly)).first->second;
    };
    return get(n);
}

namespace {

// Reduce a dense coefficient vector modulo Phi_n and return the sparse form.
std::map<long, Rat> reduce_dense(std::vector<Rat> v, long n) {
    const auto& phi = Cyclotomic::cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    for (size_t e = v.size(); e-- > deg;) {
        if (v[e] == 0) continue;
        Rat f = v[e];
        v[e] = 0;
        for (size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) v[e - deg + j] -= f * Rat(phi[j]);
    }
    std::map<long, Rat> out;
    for (size_t e = 0; e < v.size() && e < deg; ++e)
        if (v[e] != 0) out.emplace(static_cast<long>(e), std::move(v[e]));
    return out;
}

std::map<long, Rat> reduce_terms(long n, const std::vector<std::pair<long, Rat>>& terms) {
    long maxe = 0;
    for (const auto& [e, c] : terms) maxe = std::max(maxe, e);
    std::vector<Rat> v(maxe + 1, Rat(0));
    for (const auto& [e, c] : terms) v[e] += c;
    return reduce_dense(std::move(v), n);
}

}  // namespace

Cyclotomic Cyclotomic::rational(const Rat& q) {
    Cyclotomic r;
    if (q != 0) r.coeffs_.emplace(0, q);
    return r;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long long e) {
    check_conductor(n);
    Cyclotomic r;
    r.conductor_ = n;
    r.coeffs_ = reduce_terms(n, {{mod_pos(e, n), Rat(1)}});
    return r;
}

Cyclotomic Cyclotomic::canonicalize(long conductor,
                                    const std::vector<std::pair<long long, Rat>>& terms) {
    check_conductor(conductor);
    std::vector<std::pair<long, Rat>> reduced;
    reduced.reserve(terms.size());
    for (const auto& [e, c] : terms) reduced.emplace_back(mod_pos(e, conductor), c);
    Cyclotomic r;
    r.conductor_ = conductor;
    r.coeffs_ = reduce_terms(conductor, reduced);
    return r;
}

bool Cyclotomic::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rat Cyclotomic::rational_value() const {
    if (coeffs_.empty()) return Rat(0);
    if (!is_rational()) throw NotInSubfieldError("value is not rational");
    return coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::lifted(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw InvalidConductorError("cannot lift conductor " + std::to_string(conductor_) +
                                    " to non-multiple " + std::to_string(m));
    check_conductor(m);
    const long scale = m / conductor_;
    std::vector<std::pair<long, Rat>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) terms.emplace_back(e * scale, c);
    Cyclotomic r;
    r.conductor_ = m;
    r.coeffs_ = reduce_terms(m, terms);
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (const auto& [e, c] : b.coeffs_) {
        auto [it, fresh] = a.coeffs_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) a.coeffs_.erase(it);
        }
    }
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::scaled(const Rat& q) const {
    Cyclotomic r;
    r.conductor_ = conductor_;
    if (q == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& [e, c] : r.coeffs_) c *= q;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        Cyclotomic zero;
        zero.conductor_ = m;
        zero.coeffs_.clear();
        return zero;
    }
    long maxe = a.coeffs_.rbegin()->first + b.coeffs_.rbegin()->first;
    std::vector<Rat> v(maxe + 1, Rat(0));
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) v[ea + eb] += ca * cb;
    Cyclotomic r;
    r.conductor_ = m;
    r.coeffs_ = reduce_dense(std::move(v), m);
    return r;
}

Cyclotomic Cyclotomic::pow(long long k) const {
    Cyclotomic acc = Cyclotomic::rational(Rat(1));
    Cyclotomic base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long m = std::lcm(conductor_, o.conductor_);
    return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    long kk = mod_pos(k, conductor_);
    if (std::gcd(kk, conductor_) != 1)
        throw InvalidAutomorphismError("galois exponent " + std::to_string(k) +
                                       " is not coprime to conductor " +
                                       std::to_string(conductor_));
    std::vector<std::pair<long, Rat>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_)
        terms.emplace_back(mod_pos(static_cast<long long>(e) * kk, conductor_), c);
    Cyclotomic r;
    r.conductor_ = conductor_;
    r.coeffs_ = reduce_terms(conductor_, terms);
    return r;
}

Rat Cyclotomic::trace_to_rationals(long m) const {
    if (m <= 0) throw PreconditionError("trace target conductor must be positive");
    const long L = std::lcm(conductor_, m);
    Cyclotomic a = lifted(L);
    // membership: fixed by every sigma_k with k = 1 mod m
    for (long k = 1; k < L; ++k) {
        if (std::gcd(k, L) != 1 || k % m != 1 % m) continue;
        if (a.galois(k) != a)
            throw NotInSubfieldError("value does not lie in Q(zeta_" + std::to_string(m) + ")");
    }
    Cyclotomic sum;
    for (long k = 1; k <= L; ++k) {
        if (std::gcd(k, L) != 1) continue;
        sum = sum + a.galois(k);
    }
    Rat full = sum.rational_value();  // Galois-stable, hence rational
    return full * Rat(euler_phi(m)) / Rat(euler_phi(L));
}

nlohmann::json Cyclotomic::to_json() const {
    if (is_rational()) {
        Rat q = rational_value();
        if (is_integer(q)) return nlohmann::json(to_long(numerator(q)));
        return nlohmann::json::array({to_long(numerator(q)), to_long(denominator(q))});
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : coeffs_)
        terms.push_back({e, to_long(numerator(c)), to_long(denominator(c))});
    return nlohmann::json{{"conductor", conductor_}, {"terms", terms}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Cyclotomic::integer(j.get<long long>());
    if (j.is_array()) {
        if (j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
            throw ValidationError("rational literal must be [num, den]");
        if (j[1].get<long long>() == 0) throw ValidationError("rational literal with zero denominator");
        return Cyclotomic::rational(Rat(Int(j[0].get<long long>()), Int(j[1].get<long long>())));
    }
    if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
        throw ValidationError("cyclotomic value must be int, [num,den] or {conductor,terms}");
    long n = j.at("conductor").get<long>();
    std::vector<std::pair<long long, Rat>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw ValidationError("cyclotomic term must be [e,num,den]");
        if (t[2].get<long long>() == 0) throw ValidationError("cyclotomic term with zero denominator");
        terms.emplace_back(t[0].get<long long>(),
                           Rat(Int(t[1].get<long long>()), Int(t[2].get<long long>())));
    }
    return canonicalize(n, terms);
}

long long to_long(const Int& v) { return v.convert_to<long long>(); }

long long to_long(const Rat& q) {
    if (!is_integer(q)) throw PreconditionError("expected an integer rational");
    return to_long(numerator(q));
}

}  // namespace zgu
