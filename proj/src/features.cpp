#include "betatrace/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "betatrace/errors.hpp"
#include "betatrace/spectral.hpp"

namespace betatrace {

double BetaVector::at_ac(int index) const {
    if (index < 1 || index > 63) throw InvalidArgument("BetaVector::at_ac: index must be in 1..63");
    return values[static_cast<std::size_t>(index - 1)];
}

double estimate_beta(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw DataError("estimate_beta: need at least 2 samples, got " +
                        std::to_string(samples.size()));
    }
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    if (*lo == *hi) return 0.0;

    double sum = 0.0;
    for (double s : samples) sum += s;
    const double mean = sum / static_cast<double>(samples.size());

    double sq = 0.0;
    for (double s : samples) {
        const double d = s - mean;
        sq += d * d;
    }
    const double variance = sq / static_cast<double>(samples.size());
    return std::sqrt(variance) / std::sqrt(2.0);
}

BetaExtraction extract_beta_vector(const GrayImage& image) {
    const std::vector<Block8> blocks = partition_blocks(image);
    if (blocks.size() < 2) {
        throw DataError("extract_beta_vector: image yields fewer than 2 blocks");
    }
    const std::size_t n = blocks.size();

    // Coefficient populations, one column per zig-zag position.
    std::vector<std::vector<double>> population(64, std::vector<double>(n));
    for (std::size_t b = 0; b < n; ++b) {
        const ZigzagVector scan = zigzag(dct2_8x8(blocks[b]));
        for (int i = 0; i < 64; ++i) {
            population[static_cast<std::size_t>(i)][b] = scan.coeffs[static_cast<std::size_t>(i)];
        }
    }

    BetaExtraction out;
    {
        const auto& dc = population[0];
        double sum = 0.0;
        for (double v : dc) sum += v;
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (double v : dc) sq += (v - mean) * (v - mean);
        out.dc.mean = mean;
        out.dc.std_dev = std::sqrt(sq / static_cast<double>(n));
    }
    for (int i = 1; i < 64; ++i) {
        const auto& coeffs = population[static_cast<std::size_t>(i)];
        out.beta.values[static_cast<std::size_t>(i - 1)] = estimate_beta(coeffs);
        double sum = 0.0;
        for (double v : coeffs) sum += v;
        out.ac_location[static_cast<std::size_t>(i - 1)] = sum / static_cast<double>(n);
    }
    return out;
}

ClassBetaMeans average_beta_by_class(
    const std::vector<std::pair<BetaVector, ClassLabel>>& samples) {
    ClassBetaMeans means{};
    std::array<std::size_t, 3> counts{};

    for (const auto& [beta, label] : samples) {
        const auto c = static_cast<std::size_t>(ordinal(label));
        counts[c] += 1;
        for (std::size_t i = 0; i < 63; ++i) means[c][i] += beta.values[i];
    }
    for (std::size_t c = 0; c < 3; ++c) {
        if (counts[c] == 0) {
            throw DataError("average_beta_by_class: class '" +
                            std::string(to_string(label_from_ordinal(static_cast<int>(c)))) +
                            "' has no samples");
        }
        for (std::size_t i = 0; i < 63; ++i) means[c][i] /= static_cast<double>(counts[c]);
    }
    return means;
}

}  // namespace betatrace
