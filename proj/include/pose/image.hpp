#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace pose {

using Color = std::array<uint8_t, 3>;

/// Interleaved 8-bit RGB, row-major.
struct Image {
  int width{0};
  int height{0};
  std::vector<uint8_t> data;  // size = width * height * 3

  Image() = default;
  Image(int w, int h, Color fill = {0, 0, 0}) : width(w), height(h), data(static_cast<size_t>(w) * h * 3) {
    for (size_t i = 0; i < data.size(); i += 3) {
      data[i] = fill[0];
      data[i + 1] = fill[1];
      data[i + 2] = fill[2];
    }
  }

  uint8_t* px(int x, int y) { return &data[(static_cast<size_t>(y) * width + x) * 3]; }
  const uint8_t* px(int x, int y) const { return &data[(static_cast<size_t>(y) * width + x) * 3]; }
  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
};

/// Single-channel float map, row-major. Depth in meters, 0 = invalid.
struct DepthMap {
  int width{0};
  int height{0};
  std::vector<float> data;

  DepthMap() = default;
  DepthMap(int w, int h, float fill = 0.0f) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
};

/// Binary mask, 0/1 per pixel.
struct Mask {
  int width{0};
  int height{0};
  std::vector<uint8_t> data;

  Mask() = default;
  Mask(int w, int h, uint8_t fill = 0) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

  size_t count() const {
    size_t n = 0;
    for (uint8_t v : data) n += (v != 0);
    return n;
  }
};

/// Bilinear RGB sample; coordinates are pixel centers. Out-of-bounds
/// contributions read as `fill`.
Color bilinear_sample(const Image& img, double x, double y, Color fill);

struct Centroid {
  double x{0.0};
  double y{0.0};
  size_t count{0};
};

Centroid mask_centroid(const Mask& m);

/// One 3x3 erosion followed by one 3x3 dilation.
Mask morph_open(const Mask& m);

}  // namespace pose
