#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace votestream {

// Mixes a base seed with stream/salt values into an independent-looking seed
// (splitmix64 finalizer). Used to derive per-trial generator/sampler seeds
// from one seed base without correlated streams.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt_a,
                              std::uint64_t salt_b = 0) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt_a + 1) +
                      0xbf58476d1ce4e5b9ULL * (salt_b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random source with fully specified draw algorithms. mt19937_64 output
// is pinned by the standard, and the bounded/unit draws below avoid
// std::uniform_*_distribution, whose results are implementation-defined; the
// same seed therefore reproduces the same stream on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, bound); bound > 0. Lemire's multiply-shift
    // rejection method.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 r =
            static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(r);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                r = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(r);
            }
        }
        return static_cast<std::uint64_t>(r >> 64);
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double unit() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace votestream
