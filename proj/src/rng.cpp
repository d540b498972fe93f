#include "betatrace/rng.hpp"

#include <cmath>
#include <numbers>

#include "betatrace/errors.hpp"

namespace betatrace {

std::uint64_t mix_u64(std::uint64_t value) {
    value += 0x9e3779b97f4a7c15ULL;
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
    return value ^ (value >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::next_unit() {
    const std::uint64_t bits = next_u64() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    if (!(lo < hi)) throw InvalidArgument("Rng::uniform: lo must be < hi");
    return lo + (hi - lo) * next_unit();
}

double Rng::log_uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(lo < hi)) throw InvalidArgument("Rng::log_uniform: need 0 < lo < hi");
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw InvalidArgument("Rng::uniform_int: lo must be <= hi");
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next_u64() % range);
}

double Rng::normal(double mean, double sigma) {
    // Box-Muller; consumes two uniforms, spare discarded.
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * radius * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::laplace(double location, double scale) {
    const double u = next_unit() - 0.5;  // (-0.5, 0.5)
    const double sign = (u < 0.0) ? -1.0 : 1.0;
    return location - scale * sign * std::log(1.0 - 2.0 * std::fabs(u));
}

std::vector<int> Rng::sample_without_replacement(int n, int k) {
    if (k < 0 || k > n) throw InvalidArgument("Rng::sample_without_replacement: need 0 <= k <= n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int j = uniform_int(i, n - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
}

Rng Rng::derive(std::uint64_t stream) const {
    return Rng(mix_u64(seed_ ^ mix_u64(stream)));
}

}  // namespace betatrace
