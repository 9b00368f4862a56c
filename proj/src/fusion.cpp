#include "textseg/fusion.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <vector>

#include "textseg/errors.hpp"

namespace textseg {

namespace {

constexpr std::size_t kParallelThreshold = 1u << 15;

struct PlacedRect {
  PixelRect rect;
  const ProbMap* map;
};

}  // namespace

ProbMap fuse(int image_w, int image_h,
             const std::vector<PlacedProbMap>& placed) {
  std::vector<PlacedRect> rects;
  rects.reserve(placed.size());
  for (const PlacedProbMap& p : placed) {
    const PixelRect r = rasterize_box(p.box, image_w, image_h);
    if (p.map.width != r.w || p.map.height != r.h) {
      throw ShapeMismatch("placed map is " + std::to_string(p.map.width) +
                          "x" + std::to_string(p.map.height) +
                          " but its box rasterizes to " +
                          std::to_string(r.w) + "x" + std::to_string(r.h));
    }
    rects.push_back({r, &p.map});
  }

  ProbMap out = ProbMap::make(image_w, image_h, 0.0f);
  const std::size_t total = out.values.size();

  // Each output row is owned by one iteration, so the max-reduction is
  // bit-exact for any thread count.
#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (int y = 0; y < image_h; ++y) {
    float* row = &out.values[static_cast<std::size_t>(y) * image_w];
    for (const PlacedRect& pr : rects) {
      if (y < pr.rect.y || y >= pr.rect.y + pr.rect.h) continue;
      const float* src =
          &pr.map->values[static_cast<std::size_t>(y - pr.rect.y) *
                          pr.rect.w];
      for (int x = 0; x < pr.rect.w; ++x) {
        float& dst = row[pr.rect.x + x];
        dst = std::max(dst, src[x]);
      }
    }
  }
  return out;
}

TrimapMask label(const ProbMap& p, const FusionConfig& cfg) {
  TrimapMask m = TrimapMask::make(p.width, p.height);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.values.size());

#pragma omp parallel for schedule(static) if (n >= (1 << 15))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double v = p.values[i];
    if (v < cfg.th1) {
      m.labels[i] = TrimapLabel::Background;
    } else if (v > cfg.th2) {
      m.labels[i] = TrimapLabel::Foreground;
    } else {
      m.labels[i] = TrimapLabel::Uncertain;
    }
  }
  return m;
}

TrimapMask stamp_disqualified(TrimapMask m, const std::vector<Box>& boxes) {
  for (const Box& b : boxes) {
    const PixelRect r = rasterize_box(b, m.width, m.height);
    for (int y = r.y; y < r.y + r.h; ++y) {
      TrimapLabel* row = &m.labels[static_cast<std::size_t>(y) * m.width];
      std::fill(row + r.x, row + r.x + r.w, TrimapLabel::Uncertain);
    }
  }
  return m;
}

TrimapMask generate_supervision(const Raster& img, const ImageRecord& record,
                                const ScorerConfig& scorer_cfg,
                                const FusionConfig& fusion_cfg) {
  if (img.width != record.width || img.height != record.height) {
    throw ShapeMismatch("image is " + std::to_string(img.width) + "x" +
                        std::to_string(img.height) + " but record \"" +
                        record.image_id + "\" declares " +
                        std::to_string(record.width) + "x" +
                        std::to_string(record.height));
  }

  const BoxPartition parts = partition_boxes(record);

  // Per-box scoring is independent; each slot is written exactly once.
  std::vector<PlacedProbMap> placed(parts.qualified.size());
  std::exception_ptr failure;
  const std::ptrdiff_t nq = static_cast<std::ptrdiff_t>(parts.qualified.size());

#pragma omp parallel for schedule(dynamic) if (nq > 1)
  for (std::ptrdiff_t i = 0; i < nq; ++i) {
    try {
      const BBoxAnnotation& ann = parts.qualified[i];
      const Box enlarged = enlarge_box(ann.box, fusion_cfg.enlarge_factor,
                                       img.width, img.height);
      const PixelRect rect = rasterize_box(enlarged, img.width, img.height);
      const Raster box_crop = crop(img, enlarged);
      const ProbMap scored = score_crop(box_crop, scorer_cfg, ann.id);
      placed[i] = {enlarged, resample_probmap(scored, rect.w, rect.h)};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const ProbMap fused = fuse(img.width, img.height, placed);
  TrimapMask mask = label(fused, fusion_cfg);

  std::vector<Box> uncertain_boxes;
  uncertain_boxes.reserve(parts.disqualified.size());
  for (const BBoxAnnotation& ann : parts.disqualified) {
    uncertain_boxes.push_back(enlarge_box(ann.box, fusion_cfg.enlarge_factor,
                                          img.width, img.height));
  }
  return stamp_disqualified(std::move(mask), uncertain_boxes);
}

}  // namespace textseg
