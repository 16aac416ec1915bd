#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mil/matrix.hpp"

namespace mil {

enum class PrototypeKind { nearest_mean, one_nn };

/// Nearest-mean stores the two class means; 1-NN stores the training set.
/// Both score by d(x, nearest negative) - d(x, nearest positive), so positive
/// scores mean the positive class and every learner exposes a real value.
struct PrototypeModel {
    PrototypeKind kind = PrototypeKind::nearest_mean;
    std::vector<double> mean_neg;
    std::vector<double> mean_pos;
    Matrix points;                  // one_nn only
    std::vector<int> point_labels;  // 0/1
};

struct ScoredLabel {
    double score = 0.0;
    int label = 0;
};

inline PrototypeModel train_prototype(PrototypeKind kind, const Matrix& x,
                                      const std::vector<int>& y) {
    if (x.rows() == 0) throw std::invalid_argument("prototype: empty input");
    if (y.size() != x.rows()) throw std::invalid_argument("prototype: label count mismatch");
    std::size_t n_pos = 0, n_neg = 0;
    for (int yi : y) {
        if (yi == 1) ++n_pos;
        else if (yi == 0) ++n_neg;
        else throw std::invalid_argument("prototype: labels must be 0/1");
    }
    if (n_pos == 0 || n_neg == 0) throw std::invalid_argument("prototype: both classes required");

    PrototypeModel model;
    model.kind = kind;
    if (kind == PrototypeKind::nearest_mean) {
        model.mean_neg.assign(x.cols(), 0.0);
        model.mean_pos.assign(x.cols(), 0.0);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            auto& mean = y[i] == 1 ? model.mean_pos : model.mean_neg;
            const auto xi = x.row(i);
            for (std::size_t j = 0; j < x.cols(); ++j) mean[j] += xi[j];
        }
        for (auto& v : model.mean_pos) v /= static_cast<double>(n_pos);
        for (auto& v : model.mean_neg) v /= static_cast<double>(n_neg);
    } else {
        model.points = x;
        model.point_labels = y;
    }
    return model;
}

/// Ties (equal distances, score 0) go to the negative class.
inline ScoredLabel predict_prototype(const PrototypeModel& model, std::span<const double> x) {
    double d_neg, d_pos;
    if (model.kind == PrototypeKind::nearest_mean) {
        if (x.size() != model.mean_neg.size())
            throw std::invalid_argument("prototype: dimension mismatch");
        d_neg = euclidean_distance(x, model.mean_neg);
        d_pos = euclidean_distance(x, model.mean_pos);
    } else {
        if (x.size() != model.points.cols())
            throw std::invalid_argument("prototype: dimension mismatch");
        d_neg = std::numeric_limits<double>::infinity();
        d_pos = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < model.points.rows(); ++i) {
            const double d = squared_distance(x, model.points.row(i));
            auto& best = model.point_labels[i] == 1 ? d_pos : d_neg;
            if (d < best) best = d;
        }
        d_neg = std::sqrt(d_neg);
        d_pos = std::sqrt(d_pos);
    }
    const double score = d_neg - d_pos;
    return {score, score > 0.0 ? 1 : 0};
}

}  // namespace mil
