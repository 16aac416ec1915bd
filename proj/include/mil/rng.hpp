#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace mil {

inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// Sub-seed derivation used everywhere a stream must be independent of its
/// siblings: a mix64 chain over (master, a, b). Adding a classifier or a
/// replicate therefore never shifts the seeds of the others.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0,
                                    std::uint64_t b = 0) {
    std::uint64_t h = mix64(master + kGolden64);
    h = mix64(h ^ (a + kGolden64));
    h = mix64(h ^ (b + kGolden64));
    return h;
}

/// Deterministic random source. std::mt19937_64 gives a portable bit stream;
/// the distributions are implemented here because the standard ones are
/// implementation-defined and would break byte-stable reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t reject = (-n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = u64();
            if (r >= reject) return r % n;
        }
    }

    /// Standard normal via Box-Muller, one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite
        const double u1 = static_cast<double>((u64() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Moves a uniform k-subset of v to its front (partial Fisher-Yates).
    template <typename T>
    void partial_shuffle(std::vector<T>& v, std::size_t k) {
        if (k > v.size()) throw std::invalid_argument("partial_shuffle: k > size");
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mil
