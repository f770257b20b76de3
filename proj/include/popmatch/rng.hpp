#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace popmatch {

// Reproducible randomness for the instance generator and the experiment
// harness. The generator is std::mt19937_64, whose output sequence is fixed
// by the C++ standard, seeded per sub-stream via the splitmix64 finalizer.
// All derived draws (bounded integers, Bernoulli, shuffles) are implemented
// here instead of <random> distributions, because the standard does not pin
// down distribution output and we promise bit-identical results within a
// build and across worker counts.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for sub-stream `index` of the master `seed`. Distinct indices give
// distinct arguments to the splitmix64 bijection.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream_index)
        : engine_(substream_seed(seed, stream_index)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n), n >= 1. Masked rejection keeps the draw
    // unbiased and platform-independent.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < n) return v;
        }
    }

    // Bernoulli(p) from the top 53 bits.
    bool chance(double p) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u < p;
    }

    // Unbiased Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace popmatch
