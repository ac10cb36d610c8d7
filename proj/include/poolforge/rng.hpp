#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace poolforge {

// splitmix64 finalizer (Vigna). Used for deriving substream seeds, never as
// the generator itself.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Order-sensitive combiner that turns (root seed, trial coordinates) into a
// 64-bit stream seed. Every trial of an experiment owns its own stream, so
// results do not depend on scheduling or parallelism degree.
class StreamKey {
public:
    explicit StreamKey(std::uint64_t root) : state_(splitmix64(root ^ 0x706f6f6c666f7267ULL)) {}

    StreamKey& mix(std::uint64_t v) {
        state_ = splitmix64(state_ ^ splitmix64(v));
        return *this;
    }
    StreamKey& mix(std::int64_t v) { return mix(static_cast<std::uint64_t>(v)); }
    StreamKey& mix(int v) { return mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
    StreamKey& mix(bool v) { return mix(static_cast<std::uint64_t>(v ? 1 : 0)); }

    StreamKey& mix(std::string_view s) {
        // FNV-1a, folded through the mixer
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return mix(h);
    }

    std::uint64_t value() const { return state_; }

private:
    std::uint64_t state_;
};

// Deterministic random stream. std::mt19937_64 is fully specified by the
// standard, so raw engine output is portable; the bounded, unit and gaussian
// draws are implemented here because the std::* distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    explicit Rng(const StreamKey& key) : engine_(key.value()) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased uniform draw in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Standard normal via Box-Muller. No state is cached between calls.
    double gaussian() {
        double u1 = unit();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // k distinct indices drawn uniformly without replacement from [0, n),
    // via partial Fisher-Yates. Order of the result is the draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

    std::vector<std::size_t> permutation(std::size_t n) { return sample_indices(n, n); }

private:
    std::mt19937_64 engine_;
};

}  // namespace poolforge
