#pragma once

#include <array>
#include <string>
#include <vector>

#include "betatrace/datasets.hpp"
#include "betatrace/image.hpp"

namespace betatrace {

// 8x8 quantization divisors, row-major, entries in [1, 255].
struct QuantTable {
    std::array<int, 64> q{};

    int at(int row, int col) const { return q[static_cast<std::size_t>(row * 8 + col)]; }
};

// Standard JPEG luminance quantization table (Annex K), row-major.
extern const std::array<int, 64> kStdLuminanceQuant;

// IJG scaling of the standard table: scale = qf < 50 ? 5000/qf : 200 - 2*qf
// (integer arithmetic), entry = clamp(floor((q_std * scale + 50) / 100), 1, 255).
QuantTable quant_table(int qf);

// Luminance-only JPEG quantization round trip, per block: level shift -128,
// DCT, divide by the table and round (ties away from zero), multiply back,
// inverse DCT, +128, round and clamp to [0,255]. Remainder strips that do not
// tile into 8x8 blocks are copied unchanged. No chroma, no entropy coding.
GrayImage compress_image(const GrayImage& image, const QuantTable& table);
GrayImage compress_image(const GrayImage& image, int qf);

struct AttackResult {
    FeatureTable features;  // manifest order, minus skipped rows
    int skipped = 0;
    std::vector<std::string> errors;
};

// Re-extracts features with every test image compressed at the given QF.
// Training rows stay RAW: copied from raw_features when the path is present
// there, extracted from the original file otherwise. Unreadable files are
// reported and skipped.
AttackResult attack_dataset(const DatasetManifest& manifest, int qf,
                            const FeatureTable* raw_features = nullptr);

}  // namespace betatrace
