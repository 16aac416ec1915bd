#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mil/dataset.hpp"

namespace mil {

/// Per-feature z-scoring with statistics pooled over all training instances.
/// Distance-based learners (NM, 1NN, the MILES kernel) need commensurate
/// features; constant features keep scale 1 so they pass through unchanged.
class Standardizer {
public:
    static Standardizer fit(const Dataset& train) {
        if (train.bags.empty()) throw std::invalid_argument("standardizer: empty dataset");
        Standardizer s;
        s.mean_.assign(train.dim, 0.0);
        s.scale_.assign(train.dim, 1.0);
        const double n = static_cast<double>(train.total_instances());
        for (const auto& bag : train.bags)
            for (const auto& inst : bag.instances)
                for (std::size_t j = 0; j < train.dim; ++j) s.mean_[j] += inst[j];
        for (auto& m : s.mean_) m /= n;
        std::vector<double> var(train.dim, 0.0);
        for (const auto& bag : train.bags)
            for (const auto& inst : bag.instances)
                for (std::size_t j = 0; j < train.dim; ++j) {
                    const double d = inst[j] - s.mean_[j];
                    var[j] += d * d;
                }
        for (std::size_t j = 0; j < train.dim; ++j) {
            const double sd = std::sqrt(var[j] / n);
            s.scale_[j] = sd > 1e-12 ? sd : 1.0;
        }
        return s;
    }

    Dataset transform(const Dataset& ds) const {
        if (ds.dim != mean_.size())
            throw std::invalid_argument("standardizer: dimension mismatch");
        Dataset out = ds;
        for (auto& bag : out.bags)
            for (auto& inst : bag.instances)
                for (std::size_t j = 0; j < inst.size(); ++j)
                    inst[j] = (inst[j] - mean_[j]) / scale_[j];
        return out;
    }

    const std::vector<double>& mean() const { return mean_; }
    const std::vector<double>& scale() const { return scale_; }

private:
    std::vector<double> mean_;
    std::vector<double> scale_;
};

}  // namespace mil
