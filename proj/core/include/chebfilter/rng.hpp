#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace chebfilter {

/// Seeded random stream with transforms implemented in-house so that the
/// produced sequence is identical across standard-library versions.
/// std::uniform_real_distribution and friends are implementation-defined,
/// which would break the byte-identical reproducibility contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; one cached value between calls.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform index in [0, n). n must be > 0.
    std::size_t index(std::size_t n) {
        // Multiply-shift; bias is < 2^-64 per draw, irrelevant at toolkit scale.
        const unsigned __int128 wide =
            static_cast<unsigned __int128>(gen_()) * static_cast<unsigned __int128>(n);
        return static_cast<std::size_t>(wide >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

    /// Derive an independent child stream; tag distinguishes uses of one seed.
    Rng child(std::uint64_t tag) {
        return Rng(gen_() ^ (tag * 0x9e3779b97f4a7c15ULL));
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace chebfilter
