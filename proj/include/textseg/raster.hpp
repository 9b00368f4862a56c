#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace textseg {

/// 8-bit pixel grid, row-major, 1 (gray) or 3 (RGB, interleaved) channels.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  static Raster make(int w, int h, int ch, std::uint8_t fill = 0);

  std::uint8_t& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  bool empty() const { return width <= 0 || height <= 0; }
};

/// Per-pixel foreground probability in [0,1], row-major.
struct ProbMap {
  int width = 0;
  int height = 0;
  std::vector<float> values;

  static ProbMap make(int w, int h, float fill = 0.0f);

  float& at(int x, int y) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  float at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

enum class TrimapLabel : std::uint8_t {
  Background = 0,
  Foreground = 1,
  Uncertain = 2,
};

struct TrimapMask {
  int width = 0;
  int height = 0;
  std::vector<TrimapLabel> labels;

  static TrimapMask make(int w, int h,
                         TrimapLabel fill = TrimapLabel::Background);

  TrimapLabel& at(int x, int y) {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
  TrimapLabel at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
};

/// Axis-aligned box in real pixel coordinates, half-open [x0,x1) x [y0,y1)
/// once rasterized. Origin is the image top-left corner, y grows downward.
struct Box {
  double x0 = 0;
  double y0 = 0;
  double x1 = 0;
  double y1 = 0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }

  static Box from_xywh(double x, double y, double w, double h) {
    return Box{x, y, x + w, y + h};
  }
};

/// Integer pixel rectangle.
struct PixelRect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

/// Rasterization rule for real-valued boxes: origin = floor(x0, y0),
/// size = round(width, height) with a 1x1 minimum, clipped to the image.
/// Throws BoxOutsideImage when nothing of the box survives clipping.
PixelRect rasterize_box(const Box& b, int image_w, int image_h);

/// Grow width and height by `factor` (half on each side), then clamp to
/// [0,image_w] x [0,image_h]. Throws BoxOutsideImage when the clamped box
/// is degenerate.
Box enlarge_box(const Box& b, double factor, int image_w, int image_h);

/// Copy the rasterized region of `b` out of `img`.
Raster crop(const Raster& img, const Box& b);

/// Bilinear resize to exact output dimensions.
Raster resize_bilinear(const Raster& img, int out_w, int out_h);

/// Scale so the shorter side equals `target`, preserving aspect ratio
/// (the longer side rounds to the nearest pixel, at least 1). Upscales as
/// well as downscales. Returns a copy when already at target.
Raster resize_min_side(const Raster& img, int target);

/// Bilinear resampling of a probability map; outputs clamped to [0,1].
ProbMap resample_probmap(const ProbMap& p, int out_w, int out_h);

/// ITU-R 601 luma (0.299, 0.587, 0.114), rounded to 8 bits.
/// Gray input is returned unchanged.
Raster to_gray(const Raster& img);

}  // namespace textseg
