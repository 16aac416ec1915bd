#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mil/dataset.hpp"
#include "mil/rng.hpp"

namespace mil {

struct ResampleResult {
    std::vector<std::string> ids;  // sorted
    int attempts = 1;              // >1 means the class-preservation retry fired
};

/// Uniform sample of floor(fraction * |train_ids|) bags without replacement,
/// deterministic in `seed`. A draw that loses a class is rejected and redrawn
/// with the next derived sub-seed, so every resample can train a two-class
/// classifier.
inline ResampleResult resample_train_bags_ex(const Dataset& ds,
                                             const std::vector<std::string>& train_ids,
                                             double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("resample fraction must be in (0,1]");
    if (train_ids.empty()) throw std::invalid_argument("resample: empty train set");

    std::vector<std::string> ids = train_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("resample: duplicate train ids");

    std::vector<int> labels(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Bag* bag = ds.find_bag(ids[i]);
        if (!bag) throw std::invalid_argument("resample: unknown bag id: " + ids[i]);
        labels[i] = bag->label;
    }
    const bool train_has_both =
        std::count(labels.begin(), labels.end(), 1) > 0 &&
        std::count(labels.begin(), labels.end(), 0) > 0;

    const auto k = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(ids.size())));
    if (k == 0) throw std::invalid_argument("resample: fraction yields an empty sample");
    if (k == ids.size()) return {ids, 1};

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        std::vector<std::size_t> order(ids.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt - 1)));
        rng.partial_shuffle(order, k);

        bool pos = false, neg = false;
        ResampleResult result;
        result.attempts = attempt;
        result.ids.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            (labels[order[i]] == 1 ? pos : neg) = true;
            result.ids.push_back(ids[order[i]]);
        }
        std::sort(result.ids.begin(), result.ids.end());
        if (!train_has_both || (pos && neg)) return result;
    }
    throw std::runtime_error(
        "resample: sample of size " + std::to_string(k) +
        " cannot preserve both classes after " + std::to_string(kMaxAttempts) + " attempts");
}

inline std::vector<std::string> resample_train_bags(const Dataset& ds,
                                                    const std::vector<std::string>& train_ids,
                                                    double fraction, std::uint64_t seed) {
    return resample_train_bags_ex(ds, train_ids, fraction, seed).ids;
}

}  // namespace mil
