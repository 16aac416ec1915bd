#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mil/dataset.hpp"
#include "mil/rng.hpp"

namespace mil {

/// A train/test partition by bag id. Splitting is always by bag, never by
/// instance.
struct SplitSpec {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
    std::uint64_t seed = 0;
};

inline void validate_split(const Dataset& ds, const SplitSpec& split) {
    if (split.train_ids.empty() || split.test_ids.empty())
        throw std::invalid_argument("split: train and test sets must be non-empty");
    std::unordered_set<std::string> train(split.train_ids.begin(), split.train_ids.end());
    if (train.size() != split.train_ids.size())
        throw std::invalid_argument("split: duplicate train ids");
    std::unordered_set<std::string> test;
    for (const auto& id : split.test_ids) {
        if (train.count(id)) throw std::invalid_argument("split: id in both sets: " + id);
        if (!test.insert(id).second) throw std::invalid_argument("split: duplicate test ids");
    }
    for (const auto& id : split.train_ids)
        if (!ds.find_bag(id)) throw std::invalid_argument("split: unknown bag id: " + id);
    for (const auto& id : split.test_ids)
        if (!ds.find_bag(id)) throw std::invalid_argument("split: unknown bag id: " + id);
}

/// Seeded random bag split. Retries with derived sub-seeds until both sides
/// contain both classes (training requires them, and test AUC does too).
inline SplitSpec make_random_split(const Dataset& ds, double train_fraction,
                                   std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must be in (0,1)");
    if (ds.bags.size() < 4)
        throw std::invalid_argument("need at least 4 bags to split with both classes per side");

    std::vector<std::string> ids;
    ids.reserve(ds.bags.size());
    for (const auto& bag : ds.bags) ids.push_back(bag.id);
    std::sort(ids.begin(), ids.end());

    const auto k = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(ids.size())));
    if (k == 0 || k == ids.size())
        throw std::invalid_argument("train_fraction leaves one side empty");

    auto has_both = [&](const std::vector<std::string>& part) {
        bool pos = false, neg = false;
        for (const auto& id : part) (ds.find_bag(id)->label == 1 ? pos : neg) = true;
        return pos && neg;
    };

    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::string> shuffled = ids;
        Rng rng(derive_seed(seed, attempt));
        rng.partial_shuffle(shuffled, shuffled.size());
        SplitSpec split;
        split.seed = seed;
        split.train_ids.assign(shuffled.begin(), shuffled.begin() + k);
        split.test_ids.assign(shuffled.begin() + k, shuffled.end());
        std::sort(split.train_ids.begin(), split.train_ids.end());
        std::sort(split.test_ids.begin(), split.test_ids.end());
        if (has_both(split.train_ids) && has_both(split.test_ids)) return split;
    }
    throw std::runtime_error("make_random_split: could not place both classes on both sides");
}

/// New dataset containing the named bags, in dataset order.
inline Dataset subset(const Dataset& ds, const std::vector<std::string>& ids,
                      const std::string& name = "") {
    std::unordered_set<std::string> wanted(ids.begin(), ids.end());
    if (wanted.size() != ids.size()) throw std::invalid_argument("subset: duplicate ids");
    Dataset out;
    out.name = name.empty() ? ds.name : name;
    out.dim = ds.dim;
    for (const auto& bag : ds.bags)
        if (wanted.erase(bag.id)) out.bags.push_back(bag);
    if (!wanted.empty())
        throw std::invalid_argument("subset: unknown bag id: " + *wanted.begin());
    return out;
}

}  // namespace mil
