#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "mil/matrix.hpp"

namespace mil {

/// Axis-aligned decision stump: predicts polarity if x[feature] > threshold,
/// -polarity otherwise.
struct DecisionStump {
    std::size_t feature = 0;
    double threshold = 0.0;
    int polarity = 1;  // +1 or -1
    double alpha = 0.0;
    double weighted_error = 0.0;

    int predict(std::span<const double> x) const {
        return x[feature] > threshold ? polarity : -polarity;
    }
};

struct StumpEnsemble {
    std::vector<DecisionStump> stumps;
    std::vector<double> train_loglik;  // one entry per boosting round

    double decision(std::span<const double> x) const {
        double f = 0.0;
        for (const auto& s : stumps) f += s.alpha * s.predict(x);
        return f;
    }
};

/// Minimizes the weighted misclassification over all (feature, threshold,
/// polarity) with thresholds at midpoints of sorted unique feature values.
/// Ties resolve to the lowest feature index, then the lowest threshold, then
/// polarity +1. If every feature is constant, falls back to a constant
/// predictor on feature 0.
inline DecisionStump train_stump_weighted(const Matrix& x, const std::vector<int>& targets,
                                          const std::vector<double>& weights) {
    const std::size_t n = x.rows();
    if (n == 0 || x.cols() == 0) throw std::invalid_argument("stump: empty input");
    if (targets.size() != n || weights.size() != n)
        throw std::invalid_argument("stump: size mismatch");
    double w_pos = 0.0, w_neg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i] < 0.0) throw std::invalid_argument("stump: negative weight");
        if (targets[i] == 1) w_pos += weights[i];
        else if (targets[i] == -1) w_neg += weights[i];
        else throw std::invalid_argument("stump: targets must be +/-1");
    }
    if (w_pos + w_neg == 0.0) throw std::invalid_argument("stump: all weights zero");

    DecisionStump best;
    bool found = false;
    double best_error = 0.0;

    std::vector<std::pair<double, std::size_t>> order(n);
    for (std::size_t f = 0; f < x.cols(); ++f) {
        for (std::size_t i = 0; i < n; ++i) order[i] = {x(i, f), i};
        std::sort(order.begin(), order.end());

        double pos_left = 0.0, neg_left = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& [value, idx] = order[k - 1];
            if (targets[idx] == 1) pos_left += weights[idx];
            else neg_left += weights[idx];
            if (k == n || order[k].first == value) continue;

            const double threshold = 0.5 * (value + order[k].first);
            // polarity +1: left side predicted -1, right side +1
            const double err_plus = pos_left + (w_neg - neg_left);
            const double err_minus = neg_left + (w_pos - pos_left);
            if (!found || err_plus < best_error) {
                best = {f, threshold, 1, 0.0, err_plus};
                best_error = err_plus;
                found = true;
            }
            if (err_minus < best_error) {
                best = {f, threshold, -1, 0.0, err_minus};
                best_error = err_minus;
            }
        }
    }

    if (!found) {
        // every feature constant: constant predictor, everything on the left
        best.feature = 0;
        best.threshold = x(0, 0);
        best.polarity = w_pos <= w_neg ? 1 : -1;  // predicts -polarity everywhere
        best.weighted_error = std::min(w_pos, w_neg);
    }
    return best;
}

}  // namespace mil
