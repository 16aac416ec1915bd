#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mil {

/// One classifier replicate's binary labels over a fixed test instance order.
using Labeling = std::vector<std::uint8_t>;

struct AgreementCounts {
    std::size_t n00 = 0;
    std::size_t n01 = 0;
    std::size_t n10 = 0;
    std::size_t n11 = 0;

    std::size_t total() const { return n00 + n01 + n10 + n11; }
};

namespace stability_detail {
inline void check_pair(const Labeling& a, const Labeling& b) {
    if (a.empty()) throw std::invalid_argument("labelings must be non-empty");
    if (a.size() != b.size()) throw std::invalid_argument("labeling length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 1 || b[i] > 1)
            throw std::invalid_argument("non-binary entry at index " + std::to_string(i));
}
}  // namespace stability_detail

inline AgreementCounts count_agreements(const Labeling& z, const Labeling& z2) {
    stability_detail::check_pair(z, z2);
    AgreementCounts c;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0)
            ++(z2[i] == 0 ? c.n00 : c.n01);
        else
            ++(z2[i] == 0 ? c.n10 : c.n11);
    }
    return c;
}

/// Agreement fraction: (n00 + n11) / total.
inline double agreement(const Labeling& z, const Labeling& z2) {
    const AgreementCounts c = count_agreements(z, z2);
    return static_cast<double>(c.n00 + c.n11) / static_cast<double>(c.total());
}

struct PositiveAgreement {
    double value = 0.0;
    bool degenerate = false;  // both labelings all-negative (0/0 case)
};

/// Agreement on positive labels only: n11 / (n01 + n10 + n11). With neither
/// labeling marking anything positive the ratio is 0/0; two all-negative
/// labelings agree everywhere, so the value is 1 by convention and flagged.
inline PositiveAgreement positive_agreement_checked(const Labeling& z, const Labeling& z2) {
    const AgreementCounts c = count_agreements(z, z2);
    const std::size_t denom = c.n01 + c.n10 + c.n11;
    if (denom == 0) return {1.0, true};
    return {static_cast<double>(c.n11) / static_cast<double>(denom), false};
}

inline double positive_agreement(const Labeling& z, const Labeling& z2) {
    return positive_agreement_checked(z, z2).value;
}

enum class StabilityMeasure { agreement, positive_agreement };

inline const char* to_string(StabilityMeasure m) {
    return m == StabilityMeasure::agreement ? "S" : "S+";
}

/// Symmetric R x R matrix of a pairwise stability measure, unit diagonal.
struct StabilityMatrix {
    std::size_t r = 0;
    StabilityMeasure measure = StabilityMeasure::agreement;
    std::vector<double> values;  // row-major

    double at(std::size_t i, std::size_t j) const { return values[i * r + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * r + j]; }
};

inline StabilityMatrix pairwise_matrix(const std::vector<Labeling>& labelings,
                                       StabilityMeasure measure) {
    if (labelings.size() < 2)
        throw std::invalid_argument("pairwise_matrix: need at least 2 labelings");
    StabilityMatrix m;
    m.r = labelings.size();
    m.measure = measure;
    m.values.assign(m.r * m.r, 1.0);
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = i + 1; j < m.r; ++j) {
            const double v = measure == StabilityMeasure::agreement
                                 ? agreement(labelings[i], labelings[j])
                                 : positive_agreement(labelings[i], labelings[j]);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

/// Pairs (i,j), i<j, whose S+ hit the all-negative 0/0 convention.
inline std::vector<std::pair<std::size_t, std::size_t>> degenerate_positive_pairs(
    const std::vector<Labeling>& labelings) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < labelings.size(); ++i)
        for (std::size_t j = i + 1; j < labelings.size(); ++j)
            if (positive_agreement_checked(labelings[i], labelings[j]).degenerate)
                out.emplace_back(i, j);
    return out;
}

/// Mean over the strict upper triangle; the unit diagonal would only inflate
/// every classifier equally.
inline double mean_pairwise(const StabilityMatrix& m) {
    if (m.r < 2) throw std::invalid_argument("mean_pairwise: need r >= 2");
    double sum = 0.0;
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = i + 1; j < m.r; ++j) sum += m.at(i, j);
    return sum / (0.5 * static_cast<double>(m.r) * static_cast<double>(m.r - 1));
}

/// Pearson correlation between the strict upper triangles of two matrices of
/// equal size. NaN when either triangle has zero variance.
inline double upper_triangle_correlation(const StabilityMatrix& a, const StabilityMatrix& b) {
    if (a.r != b.r) throw std::invalid_argument("correlation: size mismatch");
    if (a.r < 2) throw std::invalid_argument("correlation: need r >= 2");
    std::vector<double> va, vb;
    for (std::size_t i = 0; i < a.r; ++i)
        for (std::size_t j = i + 1; j < a.r; ++j) {
            va.push_back(a.at(i, j));
            vb.push_back(b.at(i, j));
        }
    const double n = static_cast<double>(va.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) {
        ma += va[k];
        mb += vb[k];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) {
        cov += (va[k] - ma) * (vb[k] - mb);
        var_a += (va[k] - ma) * (va[k] - ma);
        var_b += (vb[k] - mb) * (vb[k] - mb);
    }
    if (var_a == 0.0 || var_b == 0.0) return std::nan("");
    return cov / std::sqrt(var_a * var_b);
}

struct PositivenessHistogram {
    std::vector<int> counts_per_instance;  // c_i = replicates labeling i positive
    std::vector<std::size_t> histogram;    // index k = instances with c_i == k; size R+1
};

/// How often each instance is labeled positive across replicates. A perfectly
/// stable set of replicates puts all mass at 0 and R.
inline PositivenessHistogram positiveness_histogram(const std::vector<Labeling>& labelings) {
    if (labelings.empty()) throw std::invalid_argument("positiveness: need at least 1 labeling");
    const std::size_t n = labelings.front().size();
    for (const auto& z : labelings) stability_detail::check_pair(labelings.front(), z);

    PositivenessHistogram out;
    out.counts_per_instance.assign(n, 0);
    for (const auto& z : labelings)
        for (std::size_t i = 0; i < n; ++i) out.counts_per_instance[i] += z[i];
    out.histogram.assign(labelings.size() + 1, 0);
    for (int c : out.counts_per_instance) ++out.histogram[static_cast<std::size_t>(c)];
    return out;
}

}  // namespace mil
