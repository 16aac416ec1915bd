#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "mil/matrix.hpp"

namespace mil {

struct SvmConfig {
    double c = 1.0;        // hinge penalty
    int max_epochs = 200;
    double tol = 1e-4;     // relative objective change
};

/// Linear decision function f(x) = <w,x> + bias.
struct LinearModel {
    std::vector<double> w;
    double bias = 0.0;

    struct Meta {
        double objective = 0.0;
        double hinge_total = 0.0;  // sum of slacks at the solution
        int epochs = 0;
        bool converged = false;
        std::vector<double> objective_history;  // objective after each epoch
    } meta;

    double decision(std::span<const double> x) const { return dot(w, x) + bias; }
};

namespace svm_detail {

/// Primal objective 0.5||w||^2 + c * sum_i max(0, 1 - y_i(<w,x_i> + b)).
/// The bias is not regularized.
inline double objective(const Matrix& x, const std::vector<int>& y,
                        const std::vector<double>& w, double bias, double c) {
    double obj = 0.5 * dot(w, w);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double margin = y[i] * (dot(w, x.row(i)) + bias);
        obj += c * std::max(0.0, 1.0 - margin);
    }
    return obj;
}

/// Exact minimizer of the piecewise-quadratic phi(t) = J((w,b) + t*(dw,db))
/// for t >= 0. margins/deltas are y_i*(f(x_i)) and y_i*(df(x_i)).
inline double line_search(const std::vector<double>& w, const std::vector<double>& dw,
                          double db, const std::vector<double>& margins,
                          const std::vector<double>& deltas, double c) {
    const double a = dot(w, dw);       // d/dt of the quadratic part at t=0
    const double b = dot(dw, dw);      // its curvature

    // hinge i is active on the side of its breakpoint where 1 - m_i - t*delta_i > 0
    double slope_hinge = 0.0;
    std::vector<std::pair<double, double>> breaks;  // (t, delta)
    for (std::size_t i = 0; i < margins.size(); ++i) {
        const double m = margins[i];
        const double d = deltas[i];
        const bool active_now = m < 1.0 || (m == 1.0 && d < 0.0);
        if (active_now) slope_hinge += d;
        if (d != 0.0) {
            const double t = (1.0 - m) / d;
            if (t > 0.0) breaks.emplace_back(t, d);
        }
    }
    std::sort(breaks.begin(), breaks.end());

    double slope0 = a - c * slope_hinge;
    if (slope0 >= 0.0) return 0.0;

    double sum_delta = slope_hinge;
    double t_prev = 0.0;
    for (const auto& [t_k, d_i] : breaks) {
        if (b > 0.0) {
            const double t_cand = (c * sum_delta - a) / b;
            if (t_cand <= t_k) return t_cand;
        }
        // cross the breakpoint: hinge leaves (delta>0) or joins (delta<0)
        sum_delta += d_i > 0.0 ? -d_i : d_i;
        t_prev = t_k;
        if (a + t_prev * b - c * sum_delta >= 0.0) return t_prev;
    }
    if (b > 0.0) return (c * sum_delta - a) / b;
    return t_prev;  // flat descent ray exhausted; cannot happen with both classes
}

}  // namespace svm_detail

/// Deterministic primal solver for the L2-regularized hinge loss: full-batch
/// subgradient direction with an exact line search, so the objective never
/// increases across epochs. Fixed data order, fixed iteration budget.
inline LinearModel train_linear_svm(const Matrix& x, const std::vector<int>& y,
                                    SvmConfig cfg = {}) {
    if (x.rows() == 0 || x.cols() == 0) throw std::invalid_argument("svm: empty input");
    if (y.size() != x.rows()) throw std::invalid_argument("svm: label count mismatch");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("svm: C must be positive");
    bool pos = false, neg = false;
    for (int yi : y) {
        if (yi == 1) pos = true;
        else if (yi == -1) neg = true;
        else throw std::invalid_argument("svm: labels must be +/-1");
    }
    if (!pos || !neg) throw std::invalid_argument("svm: both classes required");

    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    LinearModel model;
    model.w.assign(d, 0.0);

    std::vector<double> margins(n), deltas(n), dw(d);
    double prev_obj = svm_detail::objective(x, y, model.w, model.bias, cfg.c);

    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        for (std::size_t i = 0; i < n; ++i)
            margins[i] = y[i] * (dot(model.w, x.row(i)) + model.bias);

        // negative subgradient
        for (std::size_t j = 0; j < d; ++j) dw[j] = -model.w[j];
        double db = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (margins[i] < 1.0) {
                const auto xi = x.row(i);
                for (std::size_t j = 0; j < d; ++j) dw[j] += cfg.c * y[i] * xi[j];
                db += cfg.c * y[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            deltas[i] = y[i] * (dot(dw, x.row(i)) + db);

        const double step = svm_detail::line_search(model.w, dw, db, margins, deltas, cfg.c);
        if (step > 0.0) {
            for (std::size_t j = 0; j < d; ++j) model.w[j] += step * dw[j];
            model.bias += step * db;
        }

        const double obj = svm_detail::objective(x, y, model.w, model.bias, cfg.c);
        model.meta.objective_history.push_back(obj);
        model.meta.epochs = epoch;
        const bool no_descent = step == 0.0;
        if (std::abs(prev_obj - obj) <= cfg.tol * std::max(1.0, std::abs(prev_obj))) {
            model.meta.converged = true;
            prev_obj = obj;
            break;
        }
        prev_obj = obj;
        if (no_descent) break;  // subgradient direction stalled at a kink
    }

    model.meta.objective = prev_obj;
    double hinge = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        hinge += std::max(0.0, 1.0 - y[i] * (dot(model.w, x.row(i)) + model.bias));
    model.meta.hinge_total = hinge;
    return model;
}

}  // namespace mil
