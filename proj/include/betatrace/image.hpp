#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace betatrace {

// 8-bit single-channel raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
};

// Rec. 601 luma, rounded to the nearest integer.
std::uint8_t luma_from_rgb(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Decodes any libpng-readable PNG; color inputs are reduced to luma.
GrayImage read_png_gray(const std::string& path);

// Writes an 8-bit grayscale PNG.
void write_png_gray(const GrayImage& image, const std::string& path);

}  // namespace betatrace
