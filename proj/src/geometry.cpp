#include "pose/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace pose::geom {

SymmetrySpec SymmetrySpec::make_none() { return SymmetrySpec{}; }

SymmetrySpec SymmetrySpec::make_discrete(const Vec3& axis, int order) {
  if (order < 2) throw std::invalid_argument("discrete symmetry order must be >= 2");
  SymmetrySpec s;
  s.axis = axis.normalized();
  s.kind = Kind::discrete;
  s.order = order;
  return s;
}

SymmetrySpec SymmetrySpec::make_continuous(const Vec3& axis) {
  SymmetrySpec s;
  s.axis = axis.normalized();
  s.kind = Kind::continuous;
  return s;
}

Quat quat_from_axis_angle(const Vec3& axis, double angle_rad) {
  return Quat(Eigen::AngleAxisd(angle_rad, axis.normalized()));
}

Quat normalize(const Quat& q) {
  const double n = q.norm();
  if (n <= 1e-12) throw std::runtime_error("degenerate quaternion");
  return Quat(q.w() / n, q.x() / n, q.y() / n, q.z() / n);
}

Quat canonicalize_hemisphere(const Quat& q) {
  if (q.w() < 0.0) return Quat(-q.w(), -q.x(), -q.y(), -q.z());
  return q;
}

std::pair<Quat, Quat> swing_twist(const Quat& q, const Vec3& axis) {
  const Vec3 a = axis.normalized();
  const Vec3 v(q.x(), q.y(), q.z());
  const double proj = v.dot(a);
  const Vec3 p = proj * a;
  Quat twist(q.w(), p.x(), p.y(), p.z());
  const double n = twist.norm();
  if (n <= 1e-12) {
    // 180-degree rotation perpendicular to the axis: twist := identity
    twist = Quat::Identity();
  } else {
    twist.coeffs() /= n;
  }
  const Quat swing = q * twist.conjugate();
  return {swing, twist};
}

double twist_angle(const Quat& q, const Vec3& axis) {
  const Quat twist = swing_twist(q, axis).second;
  const Vec3 a = axis.normalized();
  const double comp = Vec3(twist.x(), twist.y(), twist.z()).dot(a);
  double ang = 2.0 * std::atan2(comp, twist.w());
  if (ang > kPi) ang -= 2.0 * kPi;
  if (ang <= -kPi) ang += 2.0 * kPi;
  return ang;
}

namespace {

// Lexicographic (w,x,y,z) comparison used as the discrete tie-break.
bool quat_less(const Quat& a, const Quat& b) {
  const std::array<double, 4> ta{a.w(), a.x(), a.y(), a.z()};
  const std::array<double, 4> tb{b.w(), b.x(), b.y(), b.z()};
  return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

}  // namespace

Quat canonicalize_symmetry(const Quat& q, const SymmetrySpec& spec) {
  switch (spec.kind) {
    case SymmetrySpec::Kind::none:
      return canonicalize_hemisphere(q);
    case SymmetrySpec::Kind::continuous: {
      // q composed with any rotation about the axis shares its swing part.
      const Quat swing = swing_twist(q, spec.axis).first;
      return canonicalize_hemisphere(normalize(swing));
    }
    case SymmetrySpec::Kind::discrete: {
      Quat best = canonicalize_hemisphere(q);
      for (int k = 1; k < spec.order; ++k) {
        const double ang = 2.0 * kPi * k / spec.order;
        const Quat cand =
            canonicalize_hemisphere(normalize(q * quat_from_axis_angle(spec.axis, ang)));
        if (quat_less(best, cand)) best = cand;
      }
      return best;
    }
  }
  throw std::logic_error("unreachable symmetry kind");
}

double angular_distance_deg(const Quat& q1, const Quat& q2) {
  const double d = std::min(1.0, std::abs(q1.dot(q2)));
  return rad2deg(2.0 * std::acos(d));
}

double symmetry_aware_error_deg(const Quat& q_gt, const Quat& q_pred,
                                const SymmetrySpec& spec) {
  switch (spec.kind) {
    case SymmetrySpec::Kind::none:
      return angular_distance_deg(q_gt, q_pred);
    case SymmetrySpec::Kind::continuous: {
      const Quat q_error = q_gt.conjugate() * q_pred;
      const double psi = twist_angle(q_error, spec.axis);
      const Quat q_prime = quat_from_axis_angle(spec.axis, -psi);
      const Quat residual = q_prime * q_error;
      return angular_distance_deg(Quat::Identity(), residual);
    }
    case SymmetrySpec::Kind::discrete: {
      double best = 180.0;
      for (int k = 0; k < spec.order; ++k) {
        const double ang = 2.0 * kPi * k / spec.order;
        const Quat cand = q_gt * quat_from_axis_angle(spec.axis, ang);
        best = std::min(best, angular_distance_deg(cand, q_pred));
      }
      return best;
    }
  }
  throw std::logic_error("unreachable symmetry kind");
}

std::optional<double> sample_depth_median(const DepthGrid& depth, double px,
                                          double py, int radius) {
  const int cx = static_cast<int>(std::lround(px));
  const int cy = static_cast<int>(std::lround(py));
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(2 * radius + 1) * (2 * radius + 1));
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      const float d = depth.at_full(cx + dx, cy + dy);
      if (d > 0.0f) vals.push_back(d);
    }
  }
  if (vals.empty()) return std::nullopt;
  const size_t mid = vals.size() / 2;
  std::nth_element(vals.begin(), vals.begin() + mid, vals.end());
  if (vals.size() % 2 == 1) return vals[mid];
  const double hi = vals[mid];
  const double lo = *std::max_element(vals.begin(), vals.begin() + mid);
  return 0.5 * (lo + hi);
}

RigidTransform lift_to_6d(const Pose5D& pose, const Vec2& crop_center,
                          int crop_size, const DepthGrid& depth,
                          const CameraIntrinsics& intrinsics) {
  const double px = crop_center.x() + pose.u * crop_size / 2.0;
  const double py = crop_center.y() + pose.v * crop_size / 2.0;
  const auto d = sample_depth_median(depth, px, py);
  if (!d) throw std::runtime_error("missing depth");
  RigidTransform out;
  out.rotation = pose.q;
  out.translation = intrinsics.backproject({px, py}, *d);
  return out;
}

}  // namespace pose::geom
