#include "pose/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace pose::synth {

using geom::Vec3;

double TriMesh::bounding_radius() const {
  double r = 0.0;
  for (const auto& v : vertices) r = std::max(r, v.norm());
  return r;
}

TriMesh make_box(double sx, double sy, double sz, const std::vector<Color>& face_colors) {
  if (face_colors.size() != 6) throw std::invalid_argument("box needs 6 face colors");
  TriMesh m;
  const double x = sx / 2, y = sy / 2, z = sz / 2;
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  // quads: -z, +z, -y, +y, -x, +x
  const int quads[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                           {3, 7, 6, 2}, {0, 4, 7, 3}, {1, 2, 6, 5}};
  for (int f = 0; f < 6; ++f) {
    m.triangles.push_back({quads[f][0], quads[f][1], quads[f][2], face_colors[f]});
    m.triangles.push_back({quads[f][0], quads[f][2], quads[f][3], face_colors[f]});
  }
  return m;
}

namespace {

// Closed n-gonal cylinder between z0 and z1. `stripe` paints one side facet
// in a second color.
void add_cylinder(TriMesh& m, int sides, double radius, double z0, double z1,
                  Color color, int stripe_facet = -1, Color stripe_color = {0, 0, 0}) {
  const int base = static_cast<int>(m.vertices.size());
  for (int i = 0; i < sides; ++i) {
    const double a = 2.0 * geom::kPi * i / sides;
    m.vertices.push_back({radius * std::cos(a), radius * std::sin(a), z0});
    m.vertices.push_back({radius * std::cos(a), radius * std::sin(a), z1});
  }
  const int c0 = static_cast<int>(m.vertices.size());
  m.vertices.push_back({0, 0, z0});
  const int c1 = static_cast<int>(m.vertices.size());
  m.vertices.push_back({0, 0, z1});

  for (int i = 0; i < sides; ++i) {
    const int j = (i + 1) % sides;
    const int vi0 = base + 2 * i, vi1 = base + 2 * i + 1;
    const int vj0 = base + 2 * j, vj1 = base + 2 * j + 1;
    const Color side = (i == stripe_facet) ? stripe_color : color;
    // outward-facing side quad
    m.triangles.push_back({vi0, vj0, vj1, side});
    m.triangles.push_back({vi0, vj1, vi1, side});
    // caps (bottom faces -z, top faces +z)
    m.triangles.push_back({c0, vj0, vi0, color});
    m.triangles.push_back({c1, vi1, vj1, color});
  }
}

Color hsv(double h, double s, double v) {
  const double c = v * s;
  const double hp = h / 60.0;
  const double xx = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = xx; }
  else if (hp < 2) { r = xx; g = c; }
  else if (hp < 3) { g = c; b = xx; }
  else if (hp < 4) { g = xx; b = c; }
  else if (hp < 5) { r = xx; b = c; }
  else { r = c; b = xx; }
  const double mm = v - c;
  auto u8 = [&](double f) { return static_cast<uint8_t>(std::lround(255.0 * (f + mm))); };
  return {u8(r), u8(g), u8(b)};
}

}  // namespace

TriMesh make_prism(int sides, double radius, double height, Color color) {
  TriMesh m;
  add_cylinder(m, sides, radius, -height / 2, height / 2, color);
  return m;
}

TriMesh make_dumbbell(double weight_radius, double weight_height,
                      double handle_radius, double handle_length, Color color) {
  TriMesh m;
  const double half = handle_length / 2;
  add_cylinder(m, 18, weight_radius, -half - weight_height, -half, color);
  add_cylinder(m, 18, weight_radius, half, half + weight_height, color);
  // low-contrast label stripe on the handle
  const Color stripe = {static_cast<uint8_t>(color[0] * 4 / 5),
                        static_cast<uint8_t>(color[1] * 4 / 5),
                        static_cast<uint8_t>(color[2] * 4 / 5)};
  add_cylinder(m, 18, handle_radius, -half, half, color, 0, stripe);
  return m;
}

std::vector<ObjectSpec> make_toy_objects(int count, uint64_t seed) {
  count = std::clamp(count, 3, 6);
  Rng rng(seed, 0x70b1ull);
  std::vector<ObjectSpec> out;

  auto vivid = [&](double hue) { return hsv(hue, 0.85, 0.95); };

  {
    // 6 distinct face colors make every orientation visually unique
    std::vector<Color> faces;
    for (int f = 0; f < 6; ++f) faces.push_back(vivid(60.0 * f + rng.uniform(0, 25)));
    ObjectSpec o;
    o.name = "box";
    o.mesh = make_box(0.040, 0.028, 0.020, faces);
    o.symmetry = geom::SymmetrySpec::make_none();
    out.push_back(std::move(o));
  }
  {
    // squashed 5-gon prism, two facets recolored: asymmetric
    TriMesh m = make_prism(5, 0.020, 0.030, vivid(140 + rng.uniform(0, 20)));
    m.triangles[0].color = vivid(300);
    m.triangles[1].color = vivid(300);
    m.triangles[4].color = vivid(40);
    for (auto& v : m.vertices) v.y() *= 0.6;
    ObjectSpec o;
    o.name = "wedge";
    o.mesh = std::move(m);
    o.symmetry = geom::SymmetrySpec::make_none();
    out.push_back(std::move(o));
  }
  if (count >= 4) {
    ObjectSpec o;
    o.name = "slab";
    // matching side colors give an exact 4-fold symmetry about z
    const Color side = vivid(20);
    o.mesh = make_box(0.045, 0.045, 0.012, {vivid(200), vivid(230), side, side, side, side});
    o.symmetry = geom::SymmetrySpec::make_discrete({0, 0, 1}, 4);
    out.push_back(std::move(o));
  }
  if (count >= 5) {
    ObjectSpec o;
    o.name = "pylon";
    TriMesh m = make_prism(7, 0.018, 0.042, vivid(60));
    m.triangles[2].color = vivid(260);
    m.triangles[3].color = vivid(260);
    o.mesh = std::move(m);
    o.symmetry = geom::SymmetrySpec::make_none();
    out.push_back(std::move(o));
  }
  if (count >= 6) {
    ObjectSpec o;
    o.name = "bar";
    o.mesh = make_box(0.055, 0.014, 0.014,
                      {vivid(0), vivid(120), vivid(240), vivid(80), vivid(180), vivid(320)});
    o.symmetry = geom::SymmetrySpec::make_none();
    out.push_back(std::move(o));
  }
  {
    ObjectSpec o;
    o.name = "dumbbell";
    o.mesh = make_dumbbell(0.016, 0.010, 0.007, 0.028, hsv(215, 0.45, 0.8));
    o.symmetry = geom::SymmetrySpec::make_continuous({0, 0, 1});
    out.push_back(std::move(o));
  }
  out.resize(static_cast<size_t>(count));
  // keep the dumbbell last
  if (out.back().name != "dumbbell") {
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].name == "dumbbell") std::swap(out[i], out.back());
    }
  }
  return out;
}

std::vector<ObjectSpec> make_object_family(int count, uint64_t seed) {
  std::vector<ObjectSpec> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, 0xfa111ull + static_cast<uint64_t>(i));
    const double hue = 180 + rng.uniform(-40, 40);
    std::vector<Color> faces;
    for (int f = 0; f < 6; ++f) faces.push_back(hsv(std::fmod(hue + 55.0 * f, 360.0), 0.8, 0.9));
    ObjectSpec o;
    o.name = "family_" + std::to_string(i);
    o.mesh = make_box(0.036 + rng.uniform(-0.006, 0.008),
                      0.024 + rng.uniform(-0.004, 0.006),
                      0.018 + rng.uniform(-0.003, 0.005), faces);
    o.symmetry = geom::SymmetrySpec::make_none();
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<geom::Vec3> sample_surface_points(const TriMesh& mesh, int count, uint64_t seed) {
  std::vector<double> cum_area;
  cum_area.reserve(mesh.triangles.size());
  double total = 0.0;
  for (const auto& t : mesh.triangles) {
    const Vec3 e1 = mesh.vertices[t.b] - mesh.vertices[t.a];
    const Vec3 e2 = mesh.vertices[t.c] - mesh.vertices[t.a];
    total += 0.5 * e1.cross(e2).norm();
    cum_area.push_back(total);
  }
  if (total <= 0.0) throw std::runtime_error("degenerate mesh");

  Rng rng(seed, 0x5a3171ull);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double r = rng.uniform() * total;
    const size_t ti = static_cast<size_t>(
        std::lower_bound(cum_area.begin(), cum_area.end(), r) - cum_area.begin());
    const auto& t = mesh.triangles[std::min(ti, mesh.triangles.size() - 1)];
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    pts.push_back(mesh.vertices[t.a] + u * (mesh.vertices[t.b] - mesh.vertices[t.a]) +
                  v * (mesh.vertices[t.c] - mesh.vertices[t.a]));
  }
  return pts;
}

}  // namespace pose::synth
