#pragma once

#include <string>
#include <vector>

#include "pose/image.hpp"

namespace pose {

void write_png_rgb(const std::string& path, const Image& img);
Image read_png_rgb(const std::string& path);

/// 16-bit grayscale; values are depth in millimeters.
void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& data);
std::vector<uint16_t> read_png_gray16(const std::string& path, int& width, int& height);

}  // namespace pose
