#include "zgu/numth.hpp"

#include <algorithm>

namespace zgu {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

}  // namespace zgu
