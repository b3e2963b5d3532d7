#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace zgu {

long euler_phi(long n);
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);  // ascending
std::vector<long> prime_divisors(long n);

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// canonical representative of k mod n in [0, n)
inline long mod_pos(long long k, long n) {
    long long r = k % n;
    return static_cast<long>(r < 0 ? r + n : r);
}

}  // namespace zgu
