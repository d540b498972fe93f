#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "betatrace/datasets.hpp"

namespace betatrace {

// Per-feature (mean, population std) learned from training rows. Features
// with zero variance keep std = 1 and are flagged; fitting warns about them.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> std_dev;
    std::vector<std::uint8_t> zero_variance;

    static Standardizer fit(const FeatureTable& table);

    std::vector<double> apply(std::span<const double> x) const;
    void apply_in_place(std::vector<double>& x) const;
    FeatureTable apply(const FeatureTable& table) const;

    int dim() const { return static_cast<int>(mean.size()); }
};

}  // namespace betatrace
