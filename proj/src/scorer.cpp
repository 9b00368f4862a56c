#include "textseg/scorer.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "textseg/errors.hpp"
#include "textseg/pmap_io.hpp"

namespace textseg {

namespace detail {

OtsuSplit otsu_split(const Raster& gray) {
  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t v : gray.data) {
    ++hist[v];
  }
  const double n = static_cast<double>(gray.data.size());

  double total_sum = 0;
  double total_sq = 0;
  int distinct = 0;
  for (int v = 0; v < 256; ++v) {
    total_sum += static_cast<double>(hist[v]) * v;
    total_sq += static_cast<double>(hist[v]) * v * v;
    distinct += hist[v] > 0;
  }

  OtsuSplit split;
  const double mean = total_sum / n;
  const double var = std::max(0.0, total_sq / n - mean * mean);
  split.sigma = std::sqrt(var);
  if (distinct < 2 || split.sigma == 0.0) {
    split.degenerate = true;
    return split;
  }

  // Between-class variance sweep; class 0 holds bins [0..t]. The argmax
  // is often a plateau, so track its extent.
  double best = -1.0;
  int best_lo = 0, best_hi = 0;
  std::uint64_t w0 = 0;
  double sum0 = 0;
  for (int t = 0; t < 255; ++t) {
    w0 += hist[t];
    sum0 += static_cast<double>(hist[t]) * t;
    const std::uint64_t w1 = gray.data.size() - w0;
    if (w0 == 0 || w1 == 0) continue;
    const double mu0 = sum0 / w0;
    const double mu1 = (total_sum - sum0) / w1;
    const double d = mu0 - mu1;
    const double score =
        (static_cast<double>(w0) / n) * (static_cast<double>(w1) / n) * d * d;
    if (score > best) {
      best = score;
      best_lo = best_hi = t;
    } else if (score == best) {
      best_hi = t;
    }
  }
  split.cut = (best_lo + best_hi + 1) / 2.0;
  return split;
}

int ring_polarity(const Raster& gray, double cut) {
  std::int64_t darker = 0, brighter = 0;
  const int w = gray.width, h = gray.height;
  auto tally = [&](int x, int y) {
    const double v = gray.at(x, y);
    if (v < cut) {
      ++darker;
    } else if (v > cut) {
      ++brighter;
    }
  };
  for (int x = 0; x < w; ++x) {
    tally(x, 0);
    if (h > 1) tally(x, h - 1);
  }
  for (int y = 1; y + 1 < h; ++y) {
    tally(0, y);
    if (w > 1) tally(w - 1, y);
  }
  return darker >= brighter ? +1 : -1;
}

}  // namespace detail

ProbMap builtin_otsu_logistic(const Raster& crop, double logistic_scale) {
  const Raster gray = to_gray(crop);
  const detail::OtsuSplit split = detail::otsu_split(gray);
  if (split.degenerate) {
    return ProbMap::make(gray.width, gray.height, 0.5f);
  }
  const int sign = detail::ring_polarity(gray, split.cut);
  const double denom = logistic_scale * split.sigma;

  ProbMap p = ProbMap::make(gray.width, gray.height);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(gray.data.size());

#pragma omp parallel for schedule(static) if (n >= (1 << 15))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double z = sign * (gray.data[i] - split.cut) / denom;
    p.values[i] = static_cast<float>(1.0 / (1.0 + std::exp(-z)));
  }
  return p;
}

ProbMap load_external_probmap(const std::string& dir,
                              const std::string& box_id) {
  return read_pmap(dir + "/" + box_id + ".pmap");
}

ProbMap score_crop(const Raster& crop, const ScorerConfig& cfg,
                   const std::string& box_id) {
  if (crop.empty()) {
    throw ShapeMismatch("score_crop called with an empty crop");
  }
  const Raster resized = resize_min_side(crop, cfg.min_side);
  switch (cfg.kind) {
    case ScorerKind::OtsuLogistic:
      return builtin_otsu_logistic(resized, cfg.logistic_scale);
    case ScorerKind::External: {
      const ProbMap external = load_external_probmap(cfg.external_dir, box_id);
      return resample_probmap(external, resized.width, resized.height);
    }
  }
  throw Error("unreachable scorer kind");
}

}  // namespace textseg
