#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <stdexcept>
#include <utility>

namespace pose::geom {

using Quat = Eigen::Quaterniond;
using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Rotational symmetry of an object about a single axis in the object frame.
struct SymmetrySpec {
  enum class Kind { none, discrete, continuous };

  Vec3 axis{0.0, 0.0, 1.0};
  Kind kind{Kind::none};
  int order{0};  // >= 2, discrete only

  static SymmetrySpec make_none();
  static SymmetrySpec make_discrete(const Vec3& axis, int order);
  static SymmetrySpec make_continuous(const Vec3& axis);
};

/// Pinhole camera, pixel units.
struct CameraIntrinsics {
  double fx{1.0};
  double fy{1.0};
  double cx{0.0};
  double cy{0.0};

  Vec2 project(const Vec3& p) const {
    return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy};
  }
  Vec3 backproject(const Vec2& px, double depth) const {
    return {(px.x() - cx) * depth / fx, (px.y() - cy) * depth / fy, depth};
  }
};

/// Crop-normalized 2D translation plus orientation.
struct Pose5D {
  double u{0.0};
  double v{0.0};
  Quat q{1.0, 0.0, 0.0, 0.0};
};

struct RigidTransform {
  Quat rotation{1.0, 0.0, 0.0, 0.0};
  Vec3 translation{0.0, 0.0, 0.0};

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  RigidTransform inverse() const {
    const Quat qi = rotation.conjugate();
    return {qi, qi * -translation};
  }
  RigidTransform compose(const RigidTransform& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.translation + translation};
  }
};

Quat quat_from_axis_angle(const Vec3& axis, double angle_rad);

/// Scales to unit norm. Throws on near-zero input ("degenerate quaternion").
Quat normalize(const Quat& q);

/// Flips the sign so w >= 0; same rotation either way.
Quat canonicalize_hemisphere(const Quat& q);

/// Factors q = swing * twist with twist a rotation purely about `axis`.
/// At the 180-degrees-perpendicular singularity the twist is the identity.
std::pair<Quat, Quat> swing_twist(const Quat& q, const Vec3& axis);

/// Signed twist angle of q about `axis`, radians in (-pi, pi].
double twist_angle(const Quat& q, const Vec3& axis);

/// Maps all orientations of a symmetry orbit to one representative.
Quat canonicalize_symmetry(const Quat& q, const SymmetrySpec& spec);

/// 2*acos(|<q1,q2>|) in degrees; sign-flip invariant, range [0, 180].
double angular_distance_deg(const Quat& q1, const Quat& q2);

/// Orientation error that ignores rotation about the symmetry axis.
double symmetry_aware_error_deg(const Quat& q_gt, const Quat& q_pred,
                                const SymmetrySpec& spec);

/// Read access to a depth map for lifting; pixels outside return 0.
struct DepthGrid {
  int width{0};
  int height{0};
  const float* data{nullptr};  // row-major, meters, 0 = invalid
  // offset of pixel (0,0) in full-image coordinates (crops carry their origin)
  int origin_x{0};
  int origin_y{0};

  float at_full(int px, int py) const {
    const int x = px - origin_x;
    const int y = py - origin_y;
    if (x < 0 || y < 0 || x >= width || y >= height) return 0.0f;
    return data[static_cast<size_t>(y) * width + x];
  }
};

/// Median of valid depths in a (2r+1)^2 window; nullopt when none valid.
std::optional<double> sample_depth_median(const DepthGrid& depth, double px,
                                          double py, int radius = 2);

/// Back-projects the crop-normalized (u,v) to 3D using measured depth.
/// Throws std::runtime_error("missing depth") when the window has no
/// valid depth; callers keep the 5D estimate in that case.
RigidTransform lift_to_6d(const Pose5D& pose, const Vec2& crop_center,
                          int crop_size, const DepthGrid& depth,
                          const CameraIntrinsics& intrinsics);

}  // namespace pose::geom
