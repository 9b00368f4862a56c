#pragma once

#include <cstdint>

namespace textseg {

// Built-in 1-bit glyph atlas covering printable ASCII 0x20..0x7E.
// Bit x of kBuiltinGlyphBits[c - 0x20][y] is pixel (x, y) of glyph c.
extern const int kBuiltinGlyphWidth;
extern const int kBuiltinGlyphHeight;
extern const std::uint16_t kBuiltinGlyphBits[95][28];

}  // namespace textseg
