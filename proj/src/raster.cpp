#include "textseg/raster.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "textseg/errors.hpp"

namespace textseg {

namespace {

// Below this pixel count the OpenMP kernels stay single-threaded.
constexpr std::size_t kParallelThreshold = 1u << 15;

// Pixel-center sample grid: output sample i maps to source
// (i + 0.5) * in/out - 0.5 on each axis.
inline double src_coord(int i, int in_dim, int out_dim) {
  return (i + 0.5) * (static_cast<double>(in_dim) / out_dim) - 0.5;
}

struct Tap {
  int i0;
  int i1;
  double t;  // weight of i1
};

inline Tap make_tap(double s, int in_dim) {
  const double f = std::floor(s);
  int i0 = static_cast<int>(f);
  int i1 = i0 + 1;
  const double t = s - f;
  i0 = std::clamp(i0, 0, in_dim - 1);
  i1 = std::clamp(i1, 0, in_dim - 1);
  return {i0, i1, t};
}

}  // namespace

Raster Raster::make(int w, int h, int ch, std::uint8_t fill) {
  Raster r;
  r.width = w;
  r.height = h;
  r.channels = ch;
  r.data.assign(static_cast<std::size_t>(w) * h * ch, fill);
  return r;
}

ProbMap ProbMap::make(int w, int h, float fill) {
  ProbMap p;
  p.width = w;
  p.height = h;
  p.values.assign(static_cast<std::size_t>(w) * h, fill);
  return p;
}

TrimapMask TrimapMask::make(int w, int h, TrimapLabel fill) {
  TrimapMask m;
  m.width = w;
  m.height = h;
  m.labels.assign(static_cast<std::size_t>(w) * h, fill);
  return m;
}

PixelRect rasterize_box(const Box& b, int image_w, int image_h) {
  int x = static_cast<int>(std::floor(b.x0));
  int y = static_cast<int>(std::floor(b.y0));
  int w = std::max(1, static_cast<int>(std::lround(b.width())));
  int h = std::max(1, static_cast<int>(std::lround(b.height())));

  // Clip to the image grid.
  if (x < 0) {
    w += x;
    x = 0;
  }
  if (y < 0) {
    h += y;
    y = 0;
  }
  w = std::min(w, image_w - x);
  h = std::min(h, image_h - y);
  if (x >= image_w || y >= image_h || w <= 0 || h <= 0) {
    std::ostringstream msg;
    msg << "box (" << b.x0 << "," << b.y0 << "," << b.x1 << "," << b.y1
        << ") lies outside a " << image_w << "x" << image_h << " image";
    throw BoxOutsideImage(msg.str());
  }
  return {x, y, w, h};
}

Box enlarge_box(const Box& b, double factor, int image_w, int image_h) {
  const double dx = b.width() * factor / 2.0;
  const double dy = b.height() * factor / 2.0;
  Box e{b.x0 - dx, b.y0 - dy, b.x1 + dx, b.y1 + dy};
  e.x0 = std::max(e.x0, 0.0);
  e.y0 = std::max(e.y0, 0.0);
  e.x1 = std::min(e.x1, static_cast<double>(image_w));
  e.y1 = std::min(e.y1, static_cast<double>(image_h));
  if (e.x1 <= e.x0 || e.y1 <= e.y0) {
    std::ostringstream msg;
    msg << "box (" << b.x0 << "," << b.y0 << "," << b.x1 << "," << b.y1
        << ") lies outside a " << image_w << "x" << image_h << " image";
    throw BoxOutsideImage(msg.str());
  }
  return e;
}

Raster crop(const Raster& img, const Box& b) {
  const PixelRect r = rasterize_box(b, img.width, img.height);
  Raster out = Raster::make(r.w, r.h, img.channels);
  const std::size_t row_bytes = static_cast<std::size_t>(r.w) * img.channels;
  for (int y = 0; y < r.h; ++y) {
    const std::uint8_t* src = &img.data[((static_cast<std::size_t>(r.y) + y) *
                                             img.width +
                                         r.x) *
                                        img.channels];
    std::copy_n(src, row_bytes, &out.data[y * row_bytes]);
  }
  return out;
}

Raster resize_bilinear(const Raster& img, int out_w, int out_h) {
  const int ch = img.channels;
  Raster out = Raster::make(out_w, out_h, ch);
  const std::size_t total = out.pixel_count();

#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (int y = 0; y < out_h; ++y) {
    const Tap ty = make_tap(src_coord(y, img.height, out_h), img.height);
    for (int x = 0; x < out_w; ++x) {
      const Tap tx = make_tap(src_coord(x, img.width, out_w), img.width);
      for (int c = 0; c < ch; ++c) {
        const double v00 = img.at(tx.i0, ty.i0, c);
        const double v10 = img.at(tx.i1, ty.i0, c);
        const double v01 = img.at(tx.i0, ty.i1, c);
        const double v11 = img.at(tx.i1, ty.i1, c);
        const double top = v00 + (v10 - v00) * tx.t;
        const double bot = v01 + (v11 - v01) * tx.t;
        const double v = top + (bot - top) * ty.t;
        out.at(x, y, c) = static_cast<std::uint8_t>(
            std::clamp<long>(std::lround(v), 0, 255));
      }
    }
  }
  return out;
}

Raster resize_min_side(const Raster& img, int target) {
  const int min_side = std::min(img.width, img.height);
  if (min_side == target) {
    return img;
  }
  const double scale = static_cast<double>(target) / min_side;
  int out_w, out_h;
  if (img.width <= img.height) {
    out_w = target;
    out_h = std::max(1, static_cast<int>(std::lround(img.height * scale)));
  } else {
    out_h = target;
    out_w = std::max(1, static_cast<int>(std::lround(img.width * scale)));
  }
  return resize_bilinear(img, out_w, out_h);
}

ProbMap resample_probmap(const ProbMap& p, int out_w, int out_h) {
  if (out_w == p.width && out_h == p.height) {
    return p;
  }
  ProbMap out = ProbMap::make(out_w, out_h);
  const std::size_t total = out.values.size();

#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (int y = 0; y < out_h; ++y) {
    const Tap ty = make_tap(src_coord(y, p.height, out_h), p.height);
    for (int x = 0; x < out_w; ++x) {
      const Tap tx = make_tap(src_coord(x, p.width, out_w), p.width);
      const double v00 = p.at(tx.i0, ty.i0);
      const double v10 = p.at(tx.i1, ty.i0);
      const double v01 = p.at(tx.i0, ty.i1);
      const double v11 = p.at(tx.i1, ty.i1);
      const double top = v00 + (v10 - v00) * tx.t;
      const double bot = v01 + (v11 - v01) * tx.t;
      const double v = top + (bot - top) * ty.t;
      out.at(x, y) = static_cast<float>(std::clamp(v, 0.0, 1.0));
    }
  }
  return out;
}

Raster to_gray(const Raster& img) {
  if (img.channels == 1) {
    return img;
  }
  Raster out = Raster::make(img.width, img.height, 1);
  const std::size_t n = img.pixel_count();

#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const std::uint8_t r = img.data[i * 3 + 0];
    const std::uint8_t g = img.data[i * 3 + 1];
    const std::uint8_t b = img.data[i * 3 + 2];
    const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
    out.data[i] = static_cast<std::uint8_t>(
        std::clamp<long>(std::lround(luma), 0, 255));
  }
  return out;
}

}  // namespace textseg
