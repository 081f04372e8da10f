#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pose/geometry.hpp"
#include "pose/image.hpp"
#include "pose/mesh.hpp"
#include "pose/render.hpp"
#include "pose/rng.hpp"

namespace pose::synth {

inline constexpr Color kEncodingRed = {255, 0, 0};

struct SynthConfig {
  int image_width{128};
  int image_height{128};
  int crop_size{64};
  int jitter_max{-1};          // pixels; -1 selects crop_size / 16
  int sequences{2};
  int views_per_sequence{8};
  int rotations_per_view{12};
  double max_occlusion_fraction{0.5};
  double occlusion_probability{0.5};
  double focus_blend{1.0};
  double split_ratio{0.8};
  bool canonicalize_targets{true};  // symmetry handling on ground truth
  int background_count{4};
  double capture_distance{3.0};    // meters
  double distance_jitter{0.25};
  double fx{2800.0};
  double fy{2800.0};
  uint64_t seed{1};

  int effective_jitter() const { return jitter_max >= 0 ? jitter_max : crop_size / 16; }
  geom::CameraIntrinsics intrinsics() const {
    return {fx, fy, (image_width - 1) / 2.0, (image_height - 1) / 2.0};
  }
  void validate() const;
};

/// One focus-encoded training crop with its normalized regression target.
struct Sample {
  Image input;                // crop_size x crop_size, focus encoded
  geom::Pose5D target;        // q hemisphere(+symmetry)-canonicalized
  int class_id{0};
  double occlusion_fraction{0.0};
  geom::Vec2 crop_center{0, 0};   // full-image pixel coords
  DepthMap depth_crop;            // clean object depth, meters
  Mask mask_crop;                 // object pixels inside the crop
  geom::RigidTransform gt_pose;   // full 6D ground truth (camera frame)
};

struct Dataset {
  SynthConfig config;
  std::vector<ObjectSpec> objects;
  std::vector<Sample> train;
  std::vector<Sample> val;
};

/// Color-distance threshold segmentation against an object-less frame,
/// cleaned by one erosion+dilation pass.
Mask background_subtract(const Image& frame, const Image& empty_frame, double threshold);

struct OverlayResult {
  Image composite;
  DepthMap depth;
  Mask mask;
  geom::Vec2 adjusted_center;
};

/// Pastes the capture's masked pixels onto `background` shifted by
/// `placement`. Throws when more than half of the object leaves the frame.
OverlayResult overlay(const Capture& capture, const Image& background,
                      const Eigen::Vector2i& placement);

/// Pushes all pixels outside `focus` toward pure red by `blend`.
Image encode_focus(const Image& image, const Mask& focus, double blend);

/// Rotates the capture about the image center; the pose turns with it.
Capture rotate_augment(const Capture& capture, double angle_rad);

/// Paints a red rectangle over ~`fraction` of the object's mask pixels.
/// Updates sample.occlusion_fraction with the realized value.
void occlude(Sample& sample, double fraction, Rng& rng);

struct CropResult {
  Image crop;
  geom::Vec2 target_uv;
  geom::Vec2 crop_center;
};

CropResult crop_with_jitter(const Image& composite, const geom::Vec2& object_center,
                            const SynthConfig& config, Rng& rng);

Image make_background(int width, int height, uint64_t seed, int index);

/// Deterministic toy dataset: captures, augmentation, focus encoding,
/// occlusion, crops, and the seeded train/val split.
Dataset generate_dataset(const std::vector<ObjectSpec>& objects,
                         const std::vector<Image>& backgrounds,
                         const SynthConfig& config, int threads = 1);

}  // namespace pose::synth
