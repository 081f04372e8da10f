#include "pose/image.hpp"

#include <algorithm>
#include <cmath>

namespace pose {

Color bilinear_sample(const Image& img, double x, double y, Color fill) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;

  auto fetch = [&](int xi, int yi) -> std::array<double, 3> {
    if (!img.in_bounds(xi, yi)) return {static_cast<double>(fill[0]), static_cast<double>(fill[1]), static_cast<double>(fill[2])};
    const uint8_t* p = img.px(xi, yi);
    return {static_cast<double>(p[0]), static_cast<double>(p[1]), static_cast<double>(p[2])};
  };

  const auto c00 = fetch(x0, y0);
  const auto c10 = fetch(x0 + 1, y0);
  const auto c01 = fetch(x0, y0 + 1);
  const auto c11 = fetch(x0 + 1, y0 + 1);

  Color out;
  for (int c = 0; c < 3; ++c) {
    const double top = c00[c] * (1.0 - fx) + c10[c] * fx;
    const double bot = c01[c] * (1.0 - fx) + c11[c] * fx;
    const double v = top * (1.0 - fy) + bot * fy;
    out[c] = static_cast<uint8_t>(std::clamp(std::lround(v), 0l, 255l));
  }
  return out;
}

Centroid mask_centroid(const Mask& m) {
  Centroid c;
  double sx = 0.0, sy = 0.0;
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      if (m.at(x, y)) {
        sx += x;
        sy += y;
        ++c.count;
      }
    }
  }
  if (c.count > 0) {
    c.x = sx / static_cast<double>(c.count);
    c.y = sy / static_cast<double>(c.count);
  }
  return c;
}

namespace {

Mask morph3x3(const Mask& m, bool erode) {
  Mask out(m.width, m.height, 0);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      bool acc = erode;
      for (int dy = -1; dy <= 1 && (erode ? acc : !acc); ++dy) {
        for (int dx = -1; dx <= 1 && (erode ? acc : !acc); ++dx) {
          const int xi = x + dx, yi = y + dy;
          const bool v = xi >= 0 && yi >= 0 && xi < m.width && yi < m.height && m.at(xi, yi) != 0;
          if (erode)
            acc = acc && v;
          else
            acc = acc || v;
        }
      }
      out.at(x, y) = acc ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

Mask morph_open(const Mask& m) { return morph3x3(morph3x3(m, true), false); }

}  // namespace pose
