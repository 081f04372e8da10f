#pragma once

#include <string>
#include <vector>

#include "pose/geometry.hpp"
#include "pose/image.hpp"
#include "pose/rng.hpp"

namespace pose::synth {

struct Triangle {
  int a, b, c;     // vertex indices, CCW seen from outside
  Color color;
};

struct TriMesh {
  std::vector<geom::Vec3> vertices;  // object frame, meters
  std::vector<Triangle> triangles;

  /// Largest vertex distance from the object origin.
  double bounding_radius() const;
};

/// A procedurally generated object: mesh plus its symmetry annotation.
struct ObjectSpec {
  std::string name;
  TriMesh mesh;
  geom::SymmetrySpec symmetry;
};

TriMesh make_box(double sx, double sy, double sz, const std::vector<Color>& face_colors);

/// n-gonal closed prism, axis = object z.
TriMesh make_prism(int sides, double radius, double height, Color color);

/// Two weight disks on a thin handle, axis = object z. Rotationally
/// near-symmetric; a faint stripe on one handle facet plays the role of
/// a printed label, so the exact yaw stays visually recoverable.
TriMesh make_dumbbell(double weight_radius, double weight_height,
                      double handle_radius, double handle_length, Color color);

/// Default toy object set (count in [3, 6]); index `count - 1` is always the
/// continuously symmetric dumbbell.
std::vector<ObjectSpec> make_toy_objects(int count, uint64_t seed);

/// A same-topology family with varied proportions and hues, for held-out
/// instance experiments.
std::vector<ObjectSpec> make_object_family(int count, uint64_t seed);

/// Uniform-by-area surface sampling, deterministic for a given seed.
std::vector<geom::Vec3> sample_surface_points(const TriMesh& mesh, int count, uint64_t seed);

}  // namespace pose::synth
