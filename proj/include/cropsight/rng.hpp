#pragma once

// Counter-based deterministic RNG ("csrng-v1"): every value is a splitmix64
// hash of (key, counter), so sequences are reproducible across platforms and
// independent streams can be derived for parallel work without coordination.
// No std::*_distribution is used anywhere; their algorithms are
// implementation-defined and would break cross-platform determinism.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace cropsight {

inline constexpr std::string_view kRngVersion = "csrng-v1";

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(detail::mix64(seed + detail::kGolden)) {}

    // Independent stream keyed by (this rng, stream id). Streams derived with
    // distinct ids never overlap regardless of how much either one consumes.
    Rng derive(std::uint64_t stream) const {
        Rng r(0);
        r.key_ = detail::mix64(key_ ^ detail::mix64(stream * 0xd1342543de82ef95ULL + 1));
        r.counter_ = 0;
        return r;
    }

    Rng derive(std::uint64_t a, std::uint64_t b) const { return derive(a).derive(b); }

    std::uint64_t next_u64() { return detail::mix64(key_ + detail::kGolden * ++counter_); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n) via rejection-free Lemire reduction.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller (deterministic: exactly two uniforms).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Gamma(alpha, 1) via Marsaglia-Tsang squeeze; alpha < 1 uses the boost
    // gamma(alpha+1) * U^(1/alpha).
    double gamma(double alpha) {
        if (!(alpha > 0.0)) throw std::invalid_argument("Rng::gamma: alpha must be positive");
        if (alpha < 1.0) {
            const double u = uniform();
            return gamma(alpha + 1.0) * std::pow(u > 0 ? u : 0x1.0p-53, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // In-place Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices out of [0, n), in selection order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("Rng::sample_indices: k > n");
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace cropsight
