#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace betatrace {

// Deterministic random source. The engine is std::mt19937_64 (bit-exact per
// the standard); every distribution transform is implemented here so that
// identical seeds give identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on the open interval (0, 1).
    double next_unit();

    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);

    // Inclusive bounds.
    int uniform_int(int lo, int hi);

    double normal(double mean, double sigma);
    double laplace(double location, double scale);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

    // k distinct values from {0, ..., n-1}, in draw order.
    std::vector<int> sample_without_replacement(int n, int k);

    // Independent stream keyed by (seed, stream); usable from parallel workers.
    Rng derive(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used for seed derivation and content hashing.
std::uint64_t mix_u64(std::uint64_t value);

}  // namespace betatrace
