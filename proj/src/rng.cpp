#include "gnbd/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnbd {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

double Rng::uniform01() {
    return ((engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("Rng::exponential: requires rate > 0");
    return -std::log(uniform01()) / rate;
}

DiscreteSampler::DiscreteSampler(const SignedAtomicMeasure& weights) {
    if (weights.empty()) throw std::domain_error("DiscreteSampler: empty measure");
    double total = 0.0;
    for (const auto& [k, w] : weights.atoms()) {
        if (w < 0.0) throw std::domain_error("DiscreteSampler: negative weight");
        support_.push_back(k);
        total += w;
    }
    if (!(total > 0.0)) throw std::domain_error("DiscreteSampler: zero total weight");

    const std::size_t n = support_.size();
    use_alias_ = n > 1024;
    if (!use_alias_) {
        cdf_.reserve(n);
        double acc = 0.0;
        for (const auto& [k, w] : weights.atoms()) {
            acc += w / total;
            cdf_.push_back(acc);
        }
        cdf_.back() = 1.0;
        return;
    }

    // Walker alias table
    alias_prob_.assign(n, 0.0);
    alias_idx_.assign(n, 0);
    std::vector<double> scaled;
    scaled.reserve(n);
    for (const auto& [k, w] : weights.atoms()) scaled.push_back(w / total * n);
    std::vector<std::uint32_t> small, large;
    for (std::uint32_t i = 0; i < n; ++i) (scaled[i] < 1.0 ? small : large).push_back(i);
    while (!small.empty() && !large.empty()) {
        std::uint32_t s = small.back(), l = large.back();
        small.pop_back();
        large.pop_back();
        alias_prob_[s] = scaled[s];
        alias_idx_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (std::uint32_t i : large) alias_prob_[i] = 1.0;
    for (std::uint32_t i : small) alias_prob_[i] = 1.0;
}

std::int64_t DiscreteSampler::sample(Rng& rng) const {
    if (!use_alias_) {
        double u = rng.uniform01();
        auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
        if (idx >= support_.size()) idx = support_.size() - 1;
        return support_[idx];
    }
    const std::size_t n = support_.size();
    double u = rng.uniform01();
    std::size_t i = static_cast<std::size_t>(u * n);
    if (i >= n) i = n - 1;
    return rng.uniform01() < alias_prob_[i] ? support_[i] : support_[alias_idx_[i]];
}

}  // namespace gnbd
