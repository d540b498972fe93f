#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "betatrace/image.hpp"
#include "betatrace/labels.hpp"

namespace betatrace {

// Laplacian scale per AC frequency: values[i-1] holds beta for zig-zag AC
// index i in 1..63. All entries are >= 0 and finite.
struct BetaVector {
    std::array<double, 63> values{};

    double at_ac(int index) const;  // index in 1..63
};

// Gaussian fit of the DC coefficient population.
struct DcStats {
    double mean = 0.0;
    double std_dev = 0.0;
};

struct BetaExtraction {
    BetaVector beta;
    DcStats dc;
    // Per-index sample mean of the AC populations (Laplacian location).
    // Diagnostics only; never part of the feature vector.
    std::array<double, 63> ac_location{};
};

// Moment-matching scale estimate: population standard deviation / sqrt(2).
// Returns exactly 0 when all samples are equal. Throws DataError for fewer
// than 2 samples.
double estimate_beta(std::span<const double> samples);

// Runs every 8x8 block through the DCT, pools each zig-zag coefficient across
// blocks, and fits beta per AC index (Gaussian mean/std for DC). Requires an
// image yielding at least 2 blocks.
BetaExtraction extract_beta_vector(const GrayImage& image);

// Per-class arithmetic mean of beta vectors, rows ordered (real, gan, dm).
// Throws DataError when any class has no samples.
using ClassBetaMeans = std::array<std::array<double, 63>, 3>;
ClassBetaMeans average_beta_by_class(
    const std::vector<std::pair<BetaVector, ClassLabel>>& samples);

}  // namespace betatrace
