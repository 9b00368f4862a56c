#pragma once

#include <string>

#include "textseg/raster.hpp"

namespace textseg {

enum class ScorerKind { OtsuLogistic, External };

struct ScorerConfig {
  ScorerKind kind = ScorerKind::OtsuLogistic;
  /// Logistic softness in units of the crop's intensity spread.
  double logistic_scale = 1.0;
  /// Crops are resized so their shorter side equals this before scoring.
  int min_side = 185;
  /// Directory of precomputed <box_id>.pmap files (External kind only).
  std::string external_dir;
};

/// Per-pixel foreground probability for one box crop. The crop is first
/// resized with resize_min_side(cfg.min_side); the output map has the
/// resized dimensions. `box_id` selects the PMAP file for the External
/// kind and is ignored otherwise.
ProbMap score_crop(const Raster& crop, const ScorerConfig& cfg,
                   const std::string& box_id = {});

/// Classical background-foreground scorer: Otsu split on the grayscale
/// histogram, polarity from the one-pixel border ring (the majority ring
/// class is background), then a logistic soft assignment
///   p = logistic(sign * (I - cut) / (logistic_scale * sigma))
/// where sigma is the grayscale standard deviation. Degenerate crops
/// (single intensity) map to a constant 0.5.
ProbMap builtin_otsu_logistic(const Raster& crop, double logistic_scale);

/// Load `<dir>/<box_id>.pmap`. Throws MissingProbMap / CorruptProbMap.
ProbMap load_external_probmap(const std::string& dir,
                              const std::string& box_id);

namespace detail {

/// Otsu statistics shared by the parallel and serial scorer paths.
/// `cut` is the continuous threshold: the between-class variance is
/// maximized over a plateau of histogram bins [t_lo, t_hi] and the cut
/// sits at its center, (t_lo + t_hi + 1) / 2. Centering keeps the scorer
/// symmetric under intensity inversion.
struct OtsuSplit {
  double cut = 0;
  double sigma = 0;  // population std deviation of the gray values
  bool degenerate = false;
};

OtsuSplit otsu_split(const Raster& gray);

/// +1 when the border ring is mostly darker than the cut (dark background,
/// bright text), -1 otherwise. Ties count as dark background.
int ring_polarity(const Raster& gray, double cut);

}  // namespace detail

}  // namespace textseg
