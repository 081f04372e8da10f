#pragma once

#include "pose/geometry.hpp"
#include "pose/image.hpp"
#include "pose/mesh.hpp"

namespace pose::synth {

/// One turntable-style capture: an isolated object at a known pose.
struct Capture {
  Image rgb;
  DepthMap depth;  // meters, 0 where no surface
  Mask mask;
  geom::RigidTransform pose;  // object frame -> camera frame
  int class_id{0};
  geom::CameraIntrinsics intrinsics;
};

/// Flat-shaded z-buffered rasterization of `mesh` posed in front of a
/// pinhole camera. Throws when no surface lands in front of the camera.
Capture render_toy_capture(const TriMesh& mesh, const geom::RigidTransform& pose,
                           const geom::CameraIntrinsics& intrinsics, int width,
                           int height, int class_id = 0);

}  // namespace pose::synth
