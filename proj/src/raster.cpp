#include "relplan/raster.hpp"

#include <algorithm>
#include <cmath>

namespace relplan {

namespace {

// A pixel belongs to a rectangle iff its center lies inside the closed rect.
// Returns the [first, last] index range of covered pixels along one axis of an
// n-pixel grid spanning [0, 1], or an empty range.
struct PixelRange {
  int first, last;
  bool empty() const { return first > last; }
};

PixelRange covered_pixels(double lo, double hi, int n) {
  // pixel i center is (i + 0.5) / n
  int first = int(std::ceil(lo * n - 0.5));
  int last = int(std::floor(hi * n - 0.5));
  first = std::max(first, 0);
  last = std::min(last, n - 1);
  return {first, last};
}

void paint_rect(std::vector<float>& grid, int size, double x_lo, double x_hi,
                double y_lo, double y_hi, const std::array<double, 3>& color) {
  PixelRange cols = covered_pixels(x_lo, x_hi, size);
  // row r center maps to y = 1 - (r + 0.5) / size; y in [y_lo, y_hi] flips to
  // rows for 1 - y in [1 - y_hi, 1 - y_lo]
  PixelRange rows = covered_pixels(1.0 - y_hi, 1.0 - y_lo, size);
  if (cols.empty() || rows.empty()) return;
  for (int r = rows.first; r <= rows.last; ++r) {
    for (int c = cols.first; c <= cols.last; ++c) {
      size_t base = size_t((r * size + c) * 3);
      grid[base + 0] = float(color[0]);
      grid[base + 1] = float(color[1]);
      grid[base + 2] = float(color[2]);
    }
  }
}

}  // namespace

SceneImage rasterize_scene(const Scene& scene) {
  SceneImage img;
  img.grid.assign(size_t(kImageSize) * kImageSize * 3, 0.0f);

  std::vector<const PlacedObject*> order;
  order.reserve(scene.objects.size());
  for (const auto& o : scene.objects) order.push_back(&o);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->spec.height_class != b->spec.height_class)
      return a->spec.height_class < b->spec.height_class;
    return a->spec.id < b->spec.id;
  });

  for (const PlacedObject* o : order) {
    paint_rect(img.grid, kImageSize, o->pose.x - o->spec.hx, o->pose.x + o->spec.hx,
               o->pose.y - o->spec.hy, o->pose.y + o->spec.hy, o->spec.color);
  }
  return img;
}

CanonicalView render_canonical_view(const ObjectSpec& spec, int view_index) {
  if (view_index < 0 || view_index >= kNumViewVariants)
    throw Error("view_index out of range");
  CanonicalView view;
  view.object_id = spec.id;
  view.patch.assign(size_t(kViewSize) * kViewSize * 3, 0.5f);

  // sprite half extents in workspace units at scene-raster scale
  double hx = spec.hx, hy = spec.hy;
  double scale = double(kImageSize);
  switch (view_index) {
    case 0: break;
    case 1: std::swap(hx, hy); break;      // 90-degree rotation
    case 2: scale *= 0.75; break;
    case 3: scale *= 1.25; break;
  }
  // centered sprite; pixel p center offset from patch center is p + 0.5 - 16
  double px = hx * scale;  // sprite half width in pixels
  double py = hy * scale;
  double mid = kViewSize / 2.0;
  paint_rect(view.patch, kViewSize, (mid - px) / kViewSize, (mid + px) / kViewSize,
             (mid - py) / kViewSize, (mid + py) / kViewSize, spec.color);
  return view;
}

}  // namespace relplan
