#pragma once

#include <string>

#include "textseg/raster.hpp"

namespace textseg {

/// Read an 8-bit PNG as gray (1 channel) or RGB (3 channels). Palette
/// images expand to RGB, 16-bit depth is reduced, alpha is stripped.
Raster read_png(const std::string& path);

/// Write a gray or RGB raster as an 8-bit PNG.
void write_png(const Raster& img, const std::string& path);

/// Trimap mask codec. Masks are stored as indexed-color PNGs with the
/// fixed palette 0 = black (background), 1 = red (foreground),
/// 2 = yellow (uncertain).
void encode_mask(const TrimapMask& m, const std::string& path);

/// Inverse of encode_mask. Palette entries are matched by color, so any
/// indexed PNG restricted to black/red/yellow decodes; anything else
/// throws CorruptMask.
TrimapMask decode_mask(const std::string& path);

}  // namespace textseg
