#pragma once

#include <vector>

#include "textseg/annotations.hpp"
#include "textseg/raster.hpp"
#include "textseg/scorer.hpp"

namespace textseg {

struct FusionConfig {
  /// Dual thresholds on the fused probability map: below th1 is
  /// background, above th2 is foreground, everything else (including the
  /// threshold values themselves) is uncertain.
  double th1 = 0.3;
  double th2 = 0.7;
  /// Boxes grow by this factor (split half per side) before cropping and
  /// stamping.
  double enlarge_factor = 0.3;
};

/// A per-box probability map positioned in image coordinates. `map` must
/// have the rasterized dimensions of `box`.
struct PlacedProbMap {
  Box box;
  ProbMap map;
};

/// Combine per-box maps into one image-sized map: pixels outside every
/// box are 0 (no box means no text), overlaps take the highest foreground
/// probability.
ProbMap fuse(int image_w, int image_h,
             const std::vector<PlacedProbMap>& placed);

/// Dual-threshold labeling of a probability map into a trimap.
TrimapMask label(const ProbMap& p, const FusionConfig& cfg);

/// Force every pixel covered by the given (already enlarged and clamped)
/// boxes to Uncertain, overriding prior labels.
TrimapMask stamp_disqualified(TrimapMask m, const std::vector<Box>& boxes);

/// End-to-end supervision generation for one image: partition the boxes,
/// enlarge and crop the qualified ones, score each crop, resample the
/// maps back to box resolution, fuse, threshold, then stamp disqualified
/// boxes as uncertain.
TrimapMask generate_supervision(const Raster& img, const ImageRecord& record,
                                const ScorerConfig& scorer_cfg,
                                const FusionConfig& fusion_cfg);

}  // namespace textseg
