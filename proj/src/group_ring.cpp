#include "zgu/group_ring.hpp"

#include "zgu/errors.hpp"

namespace zgu {

GroupRingElement::GroupRingElement(std::vector<long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    if (factors_.empty()) throw PreconditionError("empty invariant factor list");
    for (long f : factors_)
        if (f < 1) throw PreconditionError("invariant factors must be positive");
}

std::vector<long> GroupRingElement::normalize(const std::vector<long>& g) const {
    if (g.size() != factors_.size()) throw PreconditionError("exponent tuple has wrong length");
    std::vector<long> out(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        long r = g[i] % factors_[i];
        out[i] = r < 0 ? r + factors_[i] : r;
    }
    return out;
}

void GroupRingElement::set_coeff(const std::vector<long>& g, long long c) {
    auto key = normalize(g);
    if (c == 0)
        coeffs_.erase(key);
    else
        coeffs_[key] = c;
}

long long GroupRingElement::coeff(const std::vector<long>& g) const {
    auto it = coeffs_.find(normalize(g));
    return it == coeffs_.end() ? 0 : it->second;
}

long long GroupRingElement::augmentation() const {
    long long s = 0;
    for (const auto& [g, c] : coeffs_) s += c;
    return s;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (factors_ != o.factors_) throw PreconditionError("mismatched underlying groups");
    GroupRingElement out(factors_);
    for (const auto& [g, c] : coeffs_) {
        for (const auto& [h, d] : o.coeffs_) {
            std::vector<long> sum(g.size());
            for (size_t i = 0; i < g.size(); ++i) sum[i] = (g[i] + h[i]) % factors_[i];
            auto [it, fresh] = out.coeffs_.try_emplace(sum, c * d);
            if (!fresh) {
                it->second += c * d;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

GroupRingElement GroupRingElement::pow(long k) const {
    if (k < 1) throw PreconditionError("power exponent must be >= 1");
    GroupRingElement acc = *this;
    for (long i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

}  // namespace zgu
