#include "pose/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pose::synth {

using geom::Vec3;

namespace {

constexpr double kNearPlane = 0.05;  // meters

struct ScreenVertex {
  double x, y;      // pixel coordinates
  double inv_z;     // 1/z, interpolates linearly in screen space
};

}  // namespace

Capture render_toy_capture(const TriMesh& mesh, const geom::RigidTransform& pose,
                           const geom::CameraIntrinsics& intrinsics, int width,
                           int height, int class_id) {
  if (pose.translation.z() <= 0.0) throw std::runtime_error("object behind camera");

  Capture cap;
  cap.rgb = Image(width, height, {0, 0, 0});
  cap.depth = DepthMap(width, height, 0.0f);
  cap.mask = Mask(width, height, 0);
  cap.pose = pose;
  cap.class_id = class_id;
  cap.intrinsics = intrinsics;

  std::vector<Vec3> cam_verts(mesh.vertices.size());
  for (size_t i = 0; i < mesh.vertices.size(); ++i) cam_verts[i] = pose.apply(mesh.vertices[i]);

  std::vector<float> zbuf(static_cast<size_t>(width) * height,
                          std::numeric_limits<float>::infinity());

  bool any_in_front = false;
  for (const auto& tri : mesh.triangles) {
    const Vec3& A = cam_verts[tri.a];
    const Vec3& B = cam_verts[tri.b];
    const Vec3& C = cam_verts[tri.c];
    if (A.z() < kNearPlane || B.z() < kNearPlane || C.z() < kNearPlane) continue;
    any_in_front = true;

    // headlight shading off the camera-space face normal
    const Vec3 n = (B - A).cross(C - A);
    const double nn = n.norm();
    if (nn <= 1e-15) continue;
    const Vec3 view = -((A + B + C) / 3.0).normalized();
    const double lambert = std::abs(n.dot(view) / nn);
    const double shade = 0.35 + 0.65 * lambert;

    Color col;
    for (int c = 0; c < 3; ++c)
      col[c] = static_cast<uint8_t>(std::clamp(std::lround(tri.color[c] * shade), 0l, 255l));

    const geom::Vec2 pa = intrinsics.project(A);
    const geom::Vec2 pb = intrinsics.project(B);
    const geom::Vec2 pc = intrinsics.project(C);
    const ScreenVertex sa{pa.x(), pa.y(), 1.0 / A.z()};
    const ScreenVertex sb{pb.x(), pb.y(), 1.0 / B.z()};
    const ScreenVertex sc{pc.x(), pc.y(), 1.0 / C.z()};

    const double area = (sb.x - sa.x) * (sc.y - sa.y) - (sb.y - sa.y) * (sc.x - sa.x);
    if (std::abs(area) <= 1e-12) continue;

    const int x0 = std::max(0, static_cast<int>(std::floor(std::min({sa.x, sb.x, sc.x}))));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(std::max({sa.x, sb.x, sc.x}))));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min({sa.y, sb.y, sc.y}))));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(std::max({sa.y, sb.y, sc.y}))));

    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double px = x, py = y;  // sample at integer pixel centers
        double w0 = (sb.x - sa.x) * (py - sa.y) - (sb.y - sa.y) * (px - sa.x);
        double w1 = (sc.x - sb.x) * (py - sb.y) - (sc.y - sb.y) * (px - sb.x);
        double w2 = (sa.x - sc.x) * (py - sc.y) - (sa.y - sc.y) * (px - sc.x);
        if (area < 0) {
          w0 = -w0;
          w1 = -w1;
          w2 = -w2;
        }
        if (w0 < 0 || w1 < 0 || w2 < 0) continue;

        const double aabs = std::abs(area);
        const double b0 = w1 / aabs, b1 = w2 / aabs, b2 = w0 / aabs;
        const double inv_z = b0 * sa.inv_z + b1 * sb.inv_z + b2 * sc.inv_z;
        if (inv_z <= 0) continue;
        const float z = static_cast<float>(1.0 / inv_z);

        float& zb = zbuf[static_cast<size_t>(y) * width + x];
        if (z < zb) {
          zb = z;
          cap.depth.at(x, y) = z;
          cap.mask.at(x, y) = 1;
          uint8_t* p = cap.rgb.px(x, y);
          p[0] = col[0];
          p[1] = col[1];
          p[2] = col[2];
        }
      }
    }
  }

  if (!any_in_front) throw std::runtime_error("object behind camera");
  if (cap.mask.count() == 0) throw std::runtime_error("object outside the frame");
  return cap;
}

}  // namespace pose::synth
