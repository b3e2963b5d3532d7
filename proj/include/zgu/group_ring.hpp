#pragma once

#include <map>
#include <vector>

namespace zgu {

/// Integer group-ring element of a finite abelian group given by invariant
/// factors; elements are exponent tuples.  Test utility for checking power
/// properties by literal convolution.
class GroupRingElement {
public:
    explicit GroupRingElement(std::vector<long> invariant_factors);

    const std::vector<long>& invariant_factors() const { return factors_; }
    const std::map<std::vector<long>, long long>& coeffs() const { return coeffs_; }

    void set_coeff(const std::vector<long>& g, long long c);
    long long coeff(const std::vector<long>& g) const;
    long long augmentation() const;

    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement pow(long k) const;  // k >= 1

private:
    std::vector<long> normalize(const std::vector<long>& g) const;
    std::vector<long> factors_;
    std::map<std::vector<long>, long long> coeffs_;
};

}  // namespace zgu
