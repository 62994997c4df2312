#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace ellreg {

// Counter-based pseudorandom generator built on the SplitMix64 output
// function (Stafford mix13 finalizer).  The n-th draw of a stream is
// mix(key + n * 0x9E3779B97F4A7C15), so streams are pure functions of
// (key, counter) and can be reproduced bit-exactly in any language.
// Substreams are derived by remixing the key with a substream id;
// distinct ids give statistically independent streams.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kGolden)), counter_(0) {}

    /// Derived stream; independent of draws already made on this one.
    CounterRng substream(std::uint64_t id) const {
        CounterRng r(0);
        r.key_ = mix(key_ ^ mix(id + kGolden));
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next_u64() {
        counter_ += 1;
        return mix(key_ + counter_ * kGolden);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (two uniforms per pair, second value cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 2.0 * kPi * uniform();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// N(0, sd^2) truncated to [-3 sd, 3 sd] by rejection.
    double truncated_gaussian(double sd) {
        if (sd <= 0.0) return 0.0;
        for (;;) {
            const double g = gaussian();
            if (std::abs(g) <= 3.0) return g * sd;
        }
    }

    /// Uniform on the unit Euclidean ball: gaussian direction times U^(1/d).
    std::vector<double> uniform_ball(int dim) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        double norm_sq = 0.0;
        for (auto& xi : x) {
            xi = gaussian();
            norm_sq += xi * xi;
        }
        if (norm_sq == 0.0) {
            x[0] = 1e-12;  // measure-zero fallback
            norm_sq = 1e-24;
        }
        const double radius = std::pow(uniform_pos(), 1.0 / dim);
        const double scale = radius / std::sqrt(norm_sq);
        for (auto& xi : x) xi *= scale;
        return x;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr double kPi = 3.14159265358979323846;

    std::uint64_t key_;
    std::uint64_t counter_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ellreg
