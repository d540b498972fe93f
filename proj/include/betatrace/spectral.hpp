#pragma once

#include <array>
#include <vector>

#include "betatrace/image.hpp"

namespace betatrace {

// One 8x8 tile, either pixel intensities or DCT coefficients. Row-major.
struct Block8 {
    std::array<double, 64> values{};

    double at(int row, int col) const { return values[static_cast<std::size_t>(row * 8 + col)]; }
    double& at(int row, int col) { return values[static_cast<std::size_t>(row * 8 + col)]; }
};

// 64 coefficients in JPEG scan order; index 0 is DC, 1..63 are AC.
struct ZigzagVector {
    std::array<double, 64> coeffs{};
};

// Scan position -> row-major matrix index.
extern const std::array<int, 64> kZigzagOrder;

// Tiles the image into non-overlapping 8x8 blocks, row-major block order.
// Right/bottom remainder strips (width % 8, height % 8) are dropped.
// Throws DataError when the image is smaller than one block.
std::vector<Block8> partition_blocks(const GrayImage& image);

// Orthonormal 8x8 DCT-II: out(u,v) = C(u)C(v)/4 sum_xy f(x,y) cos[(2x+1)u pi/16] cos[(2y+1)v pi/16],
// C(0) = 1/sqrt(2), C(p!=0) = 1. The block mean is lifted out before the
// transform so AC coefficients are bit-identical under any constant pixel
// offset; DC is 8 * mean exactly.
Block8 dct2_8x8(const Block8& block);

// Exact inverse of dct2_8x8 (round trip error <= 1e-9 per entry).
Block8 idct2_8x8(const Block8& coeffs);

ZigzagVector zigzag(const Block8& block);
Block8 inverse_zigzag(const ZigzagVector& v);

}  // namespace betatrace
