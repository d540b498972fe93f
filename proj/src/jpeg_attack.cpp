#include "betatrace/jpeg_attack.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "betatrace/errors.hpp"
#include "betatrace/features.hpp"
#include "betatrace/parallel.hpp"
#include "betatrace/spectral.hpp"

namespace betatrace {

const std::array<int, 64> kStdLuminanceQuant = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

QuantTable quant_table(int qf) {
    if (qf < 1 || qf > 100) {
        throw InvalidArgument("quant_table: quality factor must be in [1, 100], got " +
                              std::to_string(qf));
    }
    const int scale = (qf < 50) ? 5000 / qf : 200 - 2 * qf;
    QuantTable table;
    for (std::size_t i = 0; i < 64; ++i) {
        int entry = (kStdLuminanceQuant[i] * scale + 50) / 100;
        if (entry < 1) entry = 1;
        if (entry > 255) entry = 255;
        table.q[i] = entry;
    }
    return table;
}

namespace {

// Round half away from zero, both for quantizer indices and pixels.
double round_half_away(double v) { return std::round(v); }

std::uint8_t to_pixel(double v) {
    const double r = round_half_away(v);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

}  // namespace

GrayImage compress_image(const GrayImage& image, const QuantTable& table) {
    if (image.width < 8 || image.height < 8) {
        throw DataError("compress_image: image smaller than one 8x8 block");
    }
    GrayImage out = image;  // remainder strips keep their original pixels

    const int bx = image.width / 8;
    const int by = image.height / 8;
    for (int j = 0; j < by; ++j) {
        for (int i = 0; i < bx; ++i) {
            Block8 block;
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    block.at(y, x) = static_cast<double>(image.at(i * 8 + x, j * 8 + y)) - 128.0;
                }
            }
            Block8 coeffs = dct2_8x8(block);
            for (int r = 0; r < 8; ++r) {
                for (int c = 0; c < 8; ++c) {
                    const double step = static_cast<double>(table.at(r, c));
                    const double q = round_half_away(coeffs.at(r, c) / step);
                    coeffs.at(r, c) = q * step;
                }
            }
            const Block8 restored = idct2_8x8(coeffs);
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    out.at(i * 8 + x, j * 8 + y) = to_pixel(restored.at(y, x) + 128.0);
                }
            }
        }
    }
    return out;
}

GrayImage compress_image(const GrayImage& image, int qf) {
    return compress_image(image, quant_table(qf));
}

AttackResult attack_dataset(const DatasetManifest& manifest, int qf,
                            const FeatureTable* raw_features) {
    quant_table(qf);  // validate qf up front
    std::unordered_map<std::string, std::size_t> raw_index;
    if (raw_features != nullptr) {
        for (std::size_t i = 0; i < raw_features->rows.size(); ++i) {
            raw_index.emplace(raw_features->rows[i].id, i);
        }
    }

    struct Slot {
        FeatureRow row;
        std::string error;
        bool ok = false;
    };
    std::vector<Slot> slots(manifest.rows.size());

    parallel_for(manifest.rows.size(), [&](std::size_t i) {
        const ManifestRow& entry = manifest.rows[i];
        Slot& slot = slots[i];
        try {
            if (entry.split == Split::kTrain && raw_features != nullptr) {
                const auto hit = raw_index.find(entry.path);
                if (hit != raw_index.end()) {
                    slot.row = raw_features->rows[hit->second];
                    slot.ok = true;
                    return;
                }
            }
            GrayImage image = read_png_gray(manifest.resolve(entry));
            if (entry.split == Split::kTest) image = compress_image(image, qf);
            const BetaExtraction measured = extract_beta_vector(image);
            slot.row.id = entry.path;
            slot.row.label = entry.label;
            slot.row.x.assign(measured.beta.values.begin(), measured.beta.values.end());
            slot.ok = true;
        } catch (const std::exception& e) {
            slot.error = entry.path + ": " + e.what();
        }
    });

    AttackResult result;
    result.features.dim = 63;
    for (auto& slot : slots) {
        if (slot.ok) {
            result.features.rows.push_back(std::move(slot.row));
        } else {
            result.errors.push_back(slot.error);
            ++result.skipped;
        }
    }
    for (const auto& message : result.errors) log_warning("attack_dataset: skipped " + message);
    return result;
}

}  // namespace betatrace
