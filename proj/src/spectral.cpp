#include "betatrace/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "betatrace/errors.hpp"

namespace betatrace {

// Classic JPEG zig-zag scan of an 8x8 matrix.
const std::array<int, 64> kZigzagOrder = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
};

namespace {

// Orthonormal 1-D DCT-II basis: T[u][z] = a(u) cos((2z+1)u pi/16),
// a(0) = 1/sqrt(8), a(u>0) = 1/2. The 2-D transform T B T^t matches the
// C(u)C(v)/4 normalization exactly.
struct DctBasis {
    double t[8][8];
    DctBasis() {
        const double pi = std::numbers::pi;
        for (int u = 0; u < 8; ++u) {
            const double alpha = (u == 0) ? 1.0 / std::sqrt(8.0) : 0.5;
            for (int z = 0; z < 8; ++z) {
                t[u][z] = alpha * std::cos((2 * z + 1) * u * pi / 16.0);
            }
        }
    }
};

const DctBasis& basis() {
    static const DctBasis b;
    return b;
}

}  // namespace

std::vector<Block8> partition_blocks(const GrayImage& image) {
    if (image.width < 8 || image.height < 8) {
        throw DataError("partition_blocks: image " + std::to_string(image.width) + "x" +
                        std::to_string(image.height) + " is smaller than one 8x8 block");
    }
    const int bx = image.width / 8;
    const int by = image.height / 8;

    std::vector<Block8> blocks;
    blocks.reserve(static_cast<std::size_t>(bx) * static_cast<std::size_t>(by));
    for (int j = 0; j < by; ++j) {
        for (int i = 0; i < bx; ++i) {
            Block8 block;
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    block.at(y, x) = static_cast<double>(image.at(i * 8 + x, j * 8 + y));
                }
            }
            blocks.push_back(block);
        }
    }
    return blocks;
}

Block8 dct2_8x8(const Block8& block) {
    const auto& t = basis().t;

    double sum = 0.0;
    for (double v : block.values) sum += v;
    const double mean = sum / 64.0;

    double centered[8][8];
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            centered[x][y] = block.at(x, y) - mean;
        }
    }

    // rows: stage[u][y] = sum_x t[u][x] * centered[x][y]
    double stage[8][8];
    for (int u = 0; u < 8; ++u) {
        for (int y = 0; y < 8; ++y) {
            double acc = 0.0;
            for (int x = 0; x < 8; ++x) acc += t[u][x] * centered[x][y];
            stage[u][y] = acc;
        }
    }

    Block8 out;
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) {
            double acc = 0.0;
            for (int y = 0; y < 8; ++y) acc += stage[u][y] * t[v][y];
            out.at(u, v) = acc;
        }
    }
    out.at(0, 0) = 8.0 * mean;
    return out;
}

Block8 idct2_8x8(const Block8& coeffs) {
    const auto& t = basis().t;

    // stage[x][v] = sum_u t[u][x] * coeffs[u][v]
    double stage[8][8];
    for (int x = 0; x < 8; ++x) {
        for (int v = 0; v < 8; ++v) {
            double acc = 0.0;
            for (int u = 0; u < 8; ++u) acc += t[u][x] * coeffs.at(u, v);
            stage[x][v] = acc;
        }
    }

    Block8 out;
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            double acc = 0.0;
            for (int v = 0; v < 8; ++v) acc += stage[x][v] * t[v][y];
            out.at(x, y) = acc;
        }
    }
    return out;
}

ZigzagVector zigzag(const Block8& block) {
    ZigzagVector v;
    for (int i = 0; i < 64; ++i) {
        v.coeffs[static_cast<std::size_t>(i)] =
            block.values[static_cast<std::size_t>(kZigzagOrder[static_cast<std::size_t>(i)])];
    }
    return v;
}

Block8 inverse_zigzag(const ZigzagVector& v) {
    Block8 block;
    for (int i = 0; i < 64; ++i) {
        block.values[static_cast<std::size_t>(kZigzagOrder[static_cast<std::size_t>(i)])] =
            v.coeffs[static_cast<std::size_t>(i)];
    }
    return block;
}

}  // namespace betatrace
