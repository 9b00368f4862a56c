#include "textseg/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <csetjmp>
#include <memory>
#include <vector>

#include "textseg/errors.hpp"

namespace textseg {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Swallow libpng warnings; errors longjmp back to the caller's setjmp.
void quiet_warning(png_structp, png_const_charp) {}

// Reads the file as 8-bit gray or RGB rows. `palette` is filled only when
// keep_palette is set and the file is an indexed PNG (rows then hold
// palette indices).
Raster read_png_impl(const std::string& path, bool keep_palette,
                     std::vector<png_color>* palette, bool* is_palette) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) {
    throw IoError("cannot open PNG file: " + path);
  }

  PngReader ctx;
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   quiet_warning);
  if (!ctx.png) throw IoError("libpng read init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng info init failed");

  Raster out;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw IoError("failed to decode PNG: " + path);
  }

  png_init_io(ctx.png, file.get());
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);

  const bool indexed = color_type == PNG_COLOR_TYPE_PALETTE;
  if (is_palette) *is_palette = indexed;

  if (indexed && keep_palette) {
    png_set_packing(ctx.png);  // one index per byte
    png_colorp pal = nullptr;
    int pal_size = 0;
    png_get_PLTE(ctx.png, ctx.info, &pal, &pal_size);
    palette->assign(pal, pal + pal_size);
  } else {
    if (bit_depth == 16) png_set_strip_16(ctx.png);
    if (indexed) png_set_palette_to_rgb(ctx.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
      png_set_expand_gray_1_2_4_to_8(ctx.png);
    }
    if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) {
      png_set_tRNS_to_alpha(ctx.png);
    }
    if (color_type & PNG_COLOR_MASK_ALPHA) {
      png_set_strip_alpha(ctx.png);
    }
    if (indexed) png_set_strip_alpha(ctx.png);  // tRNS expanded above
  }
  png_read_update_info(ctx.png, ctx.info);

  const int ch = png_get_channels(ctx.png, ctx.info);
  if (ch != 1 && ch != 3) {
    throw IoError("unsupported PNG channel layout in " + path);
  }

  out.width = static_cast<int>(w);
  out.height = static_cast<int>(h);
  out.channels = ch;
  out.data.resize(static_cast<std::size_t>(w) * h * ch);

  row_ptrs.resize(h);
  const std::size_t stride = static_cast<std::size_t>(w) * ch;
  for (png_uint_32 y = 0; y < h; ++y) {
    row_ptrs[y] = out.data.data() + y * stride;
  }
  png_read_image(ctx.png, row_ptrs.data());
  png_read_end(ctx.png, nullptr);
  return out;
}

void write_rows(const std::string& path, int width, int height,
                int color_type, const png_color* palette, int palette_size,
                const std::uint8_t* data, std::size_t stride) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) {
    throw IoError("cannot write PNG file: " + path);
  }

  PngWriter ctx;
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    quiet_warning);
  if (!ctx.png) throw IoError("libpng write init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng info init failed");

  std::vector<png_bytep> row_ptrs(height);
  if (setjmp(png_jmpbuf(ctx.png))) {
    throw IoError("failed to encode PNG: " + path);
  }

  png_init_io(ctx.png, file.get());
  png_set_compression_level(ctx.png, 6);
  png_set_IHDR(ctx.png, ctx.info, width, height, 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_PLTE(ctx.png, ctx.info, const_cast<png_color*>(palette),
                 palette_size);
  }
  png_write_info(ctx.png, ctx.info);

  for (int y = 0; y < height; ++y) {
    row_ptrs[y] = const_cast<png_bytep>(data + y * stride);
  }
  png_write_image(ctx.png, row_ptrs.data());
  png_write_end(ctx.png, ctx.info);
}

constexpr png_color kTrimapPalette[3] = {
    {0, 0, 0},        // background
    {255, 0, 0},      // foreground
    {255, 255, 0},    // uncertain
};

bool same_color(const png_color& a, const png_color& b) {
  return a.red == b.red && a.green == b.green && a.blue == b.blue;
}

}  // namespace

Raster read_png(const std::string& path) {
  return read_png_impl(path, false, nullptr, nullptr);
}

void write_png(const Raster& img, const std::string& path) {
  if (img.channels != 1 && img.channels != 3) {
    throw IoError("write_png expects 1 or 3 channels");
  }
  const int color_type = img.channels == 1 ? PNG_COLOR_TYPE_GRAY
                                           : PNG_COLOR_TYPE_RGB;
  write_rows(path, img.width, img.height, color_type, nullptr, 0,
             img.data.data(),
             static_cast<std::size_t>(img.width) * img.channels);
}

void encode_mask(const TrimapMask& m, const std::string& path) {
  static_assert(sizeof(TrimapLabel) == 1);
  write_rows(path, m.width, m.height, PNG_COLOR_TYPE_PALETTE, kTrimapPalette,
             3, reinterpret_cast<const std::uint8_t*>(m.labels.data()),
             static_cast<std::size_t>(m.width));
}

TrimapMask decode_mask(const std::string& path) {
  std::vector<png_color> palette;
  bool is_palette = false;
  Raster raw = read_png_impl(path, true, &palette, &is_palette);
  if (!is_palette) {
    throw CorruptMask("not an indexed-color mask PNG: " + path);
  }

  // Map each palette entry to a label; entries outside the fixed trimap
  // palette poison any pixel that uses them.
  constexpr int kBadEntry = -1;
  std::vector<int> entry_label(palette.size(), kBadEntry);
  for (std::size_t i = 0; i < palette.size(); ++i) {
    for (int l = 0; l < 3; ++l) {
      if (same_color(palette[i], kTrimapPalette[l])) {
        entry_label[i] = l;
        break;
      }
    }
  }

  TrimapMask m = TrimapMask::make(raw.width, raw.height);
  for (std::size_t i = 0; i < raw.data.size(); ++i) {
    const std::uint8_t idx = raw.data[i];
    if (idx >= entry_label.size() || entry_label[idx] == kBadEntry) {
      throw CorruptMask("unknown palette entry " + std::to_string(idx) +
                        " in mask PNG: " + path);
    }
    m.labels[i] = static_cast<TrimapLabel>(entry_label[idx]);
  }
  return m;
}

}  // namespace textseg
