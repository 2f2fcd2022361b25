#pragma once

#include <cstdint>
#include <random>

#include "cncsim/field.hpp"

namespace cncsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based per-trial seed: serial and parallel execution see the same
// stream for a given (master_seed, trial_index).
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(trial_index + 1));
}

// Random stream with bit-reproducible draws. std::uniform_int_distribution is
// implementation-defined, so the primitives here stick to raw engine output.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, n), n >= 1. Masked rejection keeps the draw unbiased.
    std::uint32_t uniform_below(std::uint32_t n) {
        if (n <= 1) {
            return 0;
        }
        std::uint32_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        for (;;) {
            std::uint32_t v = static_cast<std::uint32_t>(engine_()) & mask;
            if (v < n) {
                return v;
            }
        }
    }

    bool bernoulli(double p) {
        // 53-bit uniform double in [0, 1)
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

    // Uniform over all of GF(2^q), zero included.
    Symbol symbol(const GaloisField& field) {
        return static_cast<Symbol>(engine_() & (field.size() - 1));
    }

    // k distinct values from [0, n), uniform without replacement.
    std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            pool[i] = i;
        }
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t j = i + uniform_below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cncsim
