#pragma once

#include <vector>

#include "relplan/scene.hpp"

namespace relplan {

inline constexpr int kImageSize = 96;   // scene image is 96 x 96 x 3
inline constexpr int kViewSize = 32;    // canonical views are 32 x 32 x 3
inline constexpr int kNumViewVariants = 4;

// Row-major (row, col, channel); row 0 is the far edge of the workspace
// (y = 1, "behind"), so +y points toward the bottom of the image.
struct SceneImage {
  std::vector<float> grid;  // kImageSize * kImageSize * 3

  float at(int row, int col, int ch) const {
    return grid[size_t((row * kImageSize + col) * 3 + ch)];
  }
};

struct CanonicalView {
  std::vector<float> patch;  // kViewSize * kViewSize * 3
  int object_id = 0;

  float at(int row, int col, int ch) const {
    return grid_at(patch, row, col, ch);
  }
  static float grid_at(const std::vector<float>& p, int row, int col, int ch) {
    return p[size_t((row * kViewSize + col) * 3 + ch)];
  }
};

// Orthographic top-down painter: filled axis-aligned rectangles in ascending
// height_class order (stacked objects occlude their support), black background.
SceneImage rasterize_scene(const Scene& scene);

// Object sprite centered on a neutral gray background; the 4 variants are
// nominal scale at 0 and 90 degrees plus two rescaled 0-degree versions.
CanonicalView render_canonical_view(const ObjectSpec& spec, int view_index);

}  // namespace relplan
