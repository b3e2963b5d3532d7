#pragma once

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zgu/rational.hpp"

namespace zgu {

/// Exact element of Q(zeta_N), stored sparsely in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} after reduction modulo the N-th cyclotomic
/// polynomial.  Values are immutable once constructed; rationals live at
/// conductor 1.  Equality lifts both sides to the lcm of the conductors, so
/// the same number stored at different conductors compares equal.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1) {}  // zero

    static Cyclotomic rational(const Rat& q);
    static Cyclotomic integer(long long v) { return rational(Rat(v)); }
    /// zeta_n^e (e arbitrary, reduced mod n)
    static Cyclotomic root_of_unity(long n, long long e);
    /// Reduce a raw term list to the canonical power-basis representative.
    static Cyclotomic canonicalize(long conductor,
                                   const std::vector<std::pair<long long, Rat>>& terms);

    long conductor() const { return conductor_; }
    const std::map<long, Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    Rat rational_value() const;  // throws NotInSubfieldError when irrational

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rat& q) const;
    Cyclotomic pow(long long k) const;  // k >= 0

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// sigma_k : zeta_N -> zeta_N^k, requires gcd(k, N) = 1.
    Cyclotomic galois(long long k) const;

    /// Tr_{Q(zeta_m)/Q}; throws NotInSubfieldError unless the value is fixed
    /// by every automorphism of Q(zeta_lcm) that is trivial on Q(zeta_m).
    Rat trace_to_rationals(long m) const;

    /// Lift to a conductor that is a multiple of the current one.
    Cyclotomic lifted(long m) const;

    nlohmann::json to_json() const;
    static Cyclotomic from_json(const nlohmann::json& j);

    /// Conductors above the cap are rejected (InvalidConductorError).
    static long conductor_cap();
    static void set_conductor_cap(long cap);

    /// Coefficient vector of Phi_N, degree phi(N), monic. Cached, thread-safe.
    static const std::vector<Int>& cyclotomic_polynomial(long n);

private:
    long conductor_;
    std::map<long, Rat> coeffs_;
};

}  // namespace zgu
