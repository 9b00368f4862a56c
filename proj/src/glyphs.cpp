// Built-in glyph atlas: printable ASCII 0x20..0x7E, 16x28 cells,
// one bit per pixel, bit x of word y = pixel (x, y) of the cell.
// Shapes derived from DejaVu Sans Mono Bold (Bitstream Vera license).
// Generated by tools/make_glyph_atlas.py; do not edit by hand.

#include "textseg/glyphs.hpp"

namespace textseg {

const int kBuiltinGlyphWidth = 16;
const int kBuiltinGlyphHeight = 28;

const std::uint16_t kBuiltinGlyphBits[95][28] = {
    // 0x20 ' '
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x21 '!'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0180, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x22 '"'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x23 '#'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x18c0, 0x1cc0, 0x1cc0, 0x0ce0, 0x3ffc, 0x3ffc, 0x0670, 0x0670, 0x0630, 0x1ffe, 0x1ffe, 0x0318, 0x0398, 0x0398, 0x019c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x24 '$'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0080, 0x0080, 0x0080, 0x07e0, 0x0ff0, 0x0cb8, 0x00b8, 0x00b8, 0x00f8, 0x03f0, 0x0fe0, 0x0f80, 0x1c80, 0x1c80, 0x0f98, 0x0ff8, 0x03f0, 0x0080, 0x0080, 0x0080, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x25 '%'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x00fc, 0x00cc, 0x00c6, 0x00cc, 0x10fc, 0x0c78, 0x0380, 0x00e0, 0x0e38, 0x1f04, 0x3380, 0x3180, 0x3380, 0x1f00, 0x0e00, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x26 '&'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x07f0, 0x0478, 0x0038, 0x0070, 0x0070, 0x00f0, 0x01f8, 0x31dc, 0x339c, 0x3f8e, 0x3f0e, 0x1f1c, 0x1e3c, 0x1ff8, 0x3ff0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x27 '''
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x28 '('
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0700, 0x0300, 0x0380, 0x0180, 0x01c0, 0x01c0, 0x01c0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x01c0, 0x01c0, 0x01c0, 0x0180, 0x0380, 0x0300, 0x0700, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x29 ')'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0060, 0x00e0, 0x00e0, 0x01c0, 0x01c0, 0x0180, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0180, 0x01c0, 0x01c0, 0x00e0, 0x00e0, 0x0060, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2a '*'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0180, 0x0180, 0x0988, 0x0ff8, 0x03e0, 0x03e0, 0x0ff8, 0x0988, 0x0180, 0x0180, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2b '+'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x3ffc, 0x3ffc, 0x3ffc, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2c ','
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x00c0, 0x00e0, 0x0060, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2d '-'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07f0, 0x07f0, 0x07f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2e '.'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x2f '/'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c00, 0x0c00, 0x0e00, 0x0600, 0x0600, 0x0300, 0x0300, 0x0380, 0x0180, 0x01c0, 0x00c0, 0x00e0, 0x0060, 0x0070, 0x0030, 0x0038, 0x0018, 0x001c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x30 '0'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x07f0, 0x0e78, 0x0e38, 0x1e38, 0x1c38, 0x1dbc, 0x1dfc, 0x1dbc, 0x1c3c, 0x1c38, 0x1e38, 0x0e38, 0x0e78, 0x07f0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x31 '1'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x03f8, 0x0398, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x1ff8, 0x1ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x32 '2'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03f0, 0x07f8, 0x0f18, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0f00, 0x0780, 0x03c0, 0x01e0, 0x00f0, 0x0070, 0x0038, 0x0ffc, 0x0ffc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x33 '3'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03f0, 0x0ff8, 0x0e18, 0x0e00, 0x0e00, 0x0e00, 0x07e0, 0x07e0, 0x0e00, 0x1e00, 0x1c00, 0x1c00, 0x1e00, 0x0e1c, 0x0ffc, 0x03f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x34 '4'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0f00, 0x0f80, 0x0fc0, 0x0fc0, 0x0fe0, 0x0f70, 0x0f70, 0x0f38, 0x0f1c, 0x0f1c, 0x1ffc, 0x1ffc, 0x0f00, 0x0f00, 0x0f00, 0x0f00, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x35 '5'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0ff8, 0x0ff8, 0x0038, 0x0038, 0x0038, 0x03f8, 0x07f8, 0x0f08, 0x0e00, 0x1c00, 0x1c00, 0x1c00, 0x0e00, 0x0f08, 0x07f8, 0x03f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x36 '6'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07c0, 0x0fe0, 0x0c70, 0x0038, 0x0038, 0x07f8, 0x0ffc, 0x1e7c, 0x1c3c, 0x1c3c, 0x1c38, 0x1c38, 0x1c38, 0x0e78, 0x0ff0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x37 '7'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ffc, 0x1ffc, 0x0e00, 0x0e00, 0x0f00, 0x0700, 0x0780, 0x0780, 0x0380, 0x03c0, 0x01c0, 0x01c0, 0x01e0, 0x00e0, 0x00f0, 0x0070, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x38 '8'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x0ff0, 0x0e38, 0x0c38, 0x0c38, 0x0e38, 0x07f0, 0x07f0, 0x0e38, 0x1c38, 0x1c1c, 0x1c1c, 0x1c38, 0x0e38, 0x0ff0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x39 '9'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x07f0, 0x0f38, 0x0e3c, 0x1e1c, 0x1e1c, 0x1e1c, 0x1e3c, 0x1f38, 0x1ff8, 0x1de0, 0x0c00, 0x0e00, 0x0f18, 0x07f8, 0x01f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3a ':'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3b ';'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01e0, 0x00e0, 0x00e0, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3c '<'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1000, 0x1e00, 0x1f80, 0x07f0, 0x00fc, 0x001c, 0x00fc, 0x07f0, 0x1f80, 0x1e00, 0x1000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3d '='
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ffc, 0x1ffc, 0x1ffc, 0x0000, 0x0000, 0x1ffc, 0x1ffc, 0x1ffc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3e '>'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0004, 0x003c, 0x01fc, 0x07e0, 0x1f00, 0x1c00, 0x1f00, 0x07e0, 0x01fc, 0x003c, 0x0004, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x3f '?'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x0ff8, 0x0e10, 0x0e00, 0x0e00, 0x0700, 0x0780, 0x03c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x40 '@'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07c0, 0x0ff0, 0x1c38, 0x181c, 0x180c, 0x1f8c, 0x1fc6, 0x18e6, 0x1866, 0x1866, 0x18e6, 0x1fce, 0x1f8c, 0x000c, 0x0018, 0x1878, 0x1ff0, 0x0fc0, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x41 'A'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03c0, 0x03e0, 0x03e0, 0x07e0, 0x0770, 0x0770, 0x0670, 0x0e30, 0x0e38, 0x0ff8, 0x0ff8, 0x1c18, 0x1c1c, 0x1c1c, 0x1c1c, 0x381e, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x42 'B'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07fc, 0x0ffc, 0x1e1c, 0x1c1c, 0x1c1c, 0x0e1c, 0x07fc, 0x07fc, 0x1e1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1e1c, 0x0ffc, 0x07fc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x43 'C'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0f80, 0x1fe0, 0x18f0, 0x1078, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x1078, 0x18f0, 0x1fe0, 0x0f80, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x44 'D'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01fc, 0x07fc, 0x0f3c, 0x0e3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x0e3c, 0x0f3c, 0x07fc, 0x01fc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x45 'E'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ff8, 0x1ff8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0ff8, 0x0ff8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x1ff8, 0x1ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x46 'F'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ff8, 0x1ff8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0ff8, 0x0ff8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x47 'G'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07c0, 0x1fe0, 0x1870, 0x1038, 0x0038, 0x003c, 0x003c, 0x003c, 0x1f3c, 0x1f3c, 0x1c3c, 0x1c38, 0x1c38, 0x1c70, 0x1fe0, 0x0fc0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x48 'H'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1ffc, 0x1ffc, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x1c3c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x49 'I'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0ff8, 0x0ff8, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0ff8, 0x0ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4a 'J'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0fe0, 0x0fe0, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0e00, 0x0f04, 0x071c, 0x07fc, 0x01f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4b 'K'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x3c1c, 0x1e1c, 0x0f1c, 0x071c, 0x039c, 0x03dc, 0x01fc, 0x03fc, 0x03fc, 0x07bc, 0x073c, 0x0f1c, 0x0e1c, 0x1e1c, 0x1c1c, 0x3c1c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4c 'L'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x0078, 0x1ff8, 0x1ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4d 'M'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1e3c, 0x1e3c, 0x1e3c, 0x1e7c, 0x1f7c, 0x1b7c, 0x1bfc, 0x1bdc, 0x19dc, 0x19dc, 0x181c, 0x181c, 0x181c, 0x181c, 0x181c, 0x181c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4e 'N'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c3c, 0x1c3c, 0x1c7c, 0x1c7c, 0x1c7c, 0x1cfc, 0x1cdc, 0x1ddc, 0x1d9c, 0x1d9c, 0x1f9c, 0x1f1c, 0x1f1c, 0x1e1c, 0x1e1c, 0x1e1c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x4f 'O'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x07f0, 0x0e38, 0x1e38, 0x1c3c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c3c, 0x1e38, 0x0e38, 0x07f0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x50 'P'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07f8, 0x0ff8, 0x1e38, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1e38, 0x0ff8, 0x07f8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x51 'Q'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x07f0, 0x0e38, 0x1e38, 0x1c3c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c3c, 0x1e38, 0x0e38, 0x0ff0, 0x07e0, 0x0f00, 0x0e00, 0x0400, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x52 'R'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03fc, 0x0ffc, 0x0e3c, 0x1e3c, 0x1e3c, 0x1e3c, 0x1e3c, 0x0e3c, 0x07fc, 0x03fc, 0x073c, 0x0f3c, 0x0e3c, 0x1e3c, 0x1c3c, 0x383c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x53 'S'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07e0, 0x0ff0, 0x0e38, 0x083c, 0x003c, 0x0038, 0x0078, 0x03f0, 0x0fc0, 0x0f00, 0x1e00, 0x1c00, 0x1c0c, 0x1e1c, 0x0ffc, 0x03f0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x54 'T'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ffc, 0x1ffc, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x55 'U'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c3c, 0x1e38, 0x0ff8, 0x07e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x56 'V'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x3c1c, 0x1c1c, 0x1c1c, 0x1c3c, 0x1e38, 0x0e38, 0x0e38, 0x0e38, 0x0e70, 0x0770, 0x0770, 0x0770, 0x07e0, 0x03e0, 0x03e0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x57 'W'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x380e, 0x380e, 0x380e, 0x380e, 0x39cc, 0x39cc, 0x19cc, 0x1bdc, 0x1bfc, 0x1b7c, 0x1f7c, 0x1f7c, 0x1e78, 0x1e38, 0x1e38, 0x0e38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x58 'X'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x3c1c, 0x1c3c, 0x0e38, 0x0e78, 0x0770, 0x07e0, 0x03e0, 0x01c0, 0x03c0, 0x03e0, 0x07f0, 0x0770, 0x0e78, 0x1e38, 0x1c1c, 0x3c1c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x59 'Y'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x381e, 0x1c1c, 0x1c3c, 0x0e38, 0x0e78, 0x0770, 0x07f0, 0x03e0, 0x03e0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5a 'Z'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ffc, 0x1ffc, 0x1e00, 0x1f00, 0x0f00, 0x0f80, 0x0780, 0x03c0, 0x03e0, 0x01e0, 0x00f0, 0x00f8, 0x0078, 0x003c, 0x1ffc, 0x1ffc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5b '['
    {0x0000, 0x0000, 0x0000, 0x0000, 0x07c0, 0x07c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x00c0, 0x07c0, 0x07c0, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5c 'backslash'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x001c, 0x0018, 0x0038, 0x0030, 0x0070, 0x0060, 0x00e0, 0x00c0, 0x01c0, 0x0180, 0x0380, 0x0300, 0x0300, 0x0600, 0x0600, 0x0e00, 0x0c00, 0x1c00, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5d ']'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x03f0, 0x03f0, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x03f0, 0x03f0, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5e '^'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x03e0, 0x07f0, 0x0f70, 0x0e38, 0x181c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x5f '_'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x3ffe, 0x3ffe, 0x0000, 0x0000},
    // 0x60 '`'
    {0x0000, 0x0000, 0x0000, 0x0070, 0x0060, 0x00c0, 0x0180, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x61 'a'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07f0, 0x0ff8, 0x1e18, 0x1c00, 0x1ff0, 0x1ff8, 0x1c3c, 0x1c1c, 0x1e1c, 0x1e3c, 0x1ff8, 0x1df0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x62 'b'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x07b8, 0x0ff8, 0x1e78, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1e78, 0x0ff8, 0x07b8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x63 'c'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07c0, 0x0fe0, 0x0870, 0x0078, 0x0038, 0x0038, 0x0038, 0x0038, 0x0078, 0x0870, 0x0fe0, 0x07c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x64 'd'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x1e00, 0x1e00, 0x1e00, 0x1e00, 0x1e00, 0x1ef0, 0x1ff8, 0x1f38, 0x1e3c, 0x1e1c, 0x1e1c, 0x1e1c, 0x1e1c, 0x1e3c, 0x1f38, 0x1ff8, 0x1ef0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x65 'e'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x0ff0, 0x1e38, 0x1c3c, 0x1c1c, 0x1ffc, 0x1ffc, 0x001c, 0x003c, 0x1038, 0x1ff0, 0x07e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x66 'f'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x1f80, 0x1fc0, 0x01c0, 0x01c0, 0x01c0, 0x1ff8, 0x1ff8, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x67 'g'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1de0, 0x1ff8, 0x1e38, 0x1e3c, 0x1e1c, 0x1c1c, 0x1c1c, 0x1e1c, 0x1e3c, 0x1e38, 0x1ff8, 0x1de0, 0x1c00, 0x1e00, 0x0e08, 0x0ff8, 0x03f0, 0x0000, 0x0000},
    // 0x68 'h'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x07b8, 0x0ff8, 0x0e78, 0x0e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x69 'i'
    {0x0000, 0x0000, 0x0000, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x0000, 0x0000, 0x03f8, 0x03f8, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x03c0, 0x3ff8, 0x3ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x6a 'j'
    {0x0000, 0x0000, 0x0000, 0x0380, 0x0380, 0x0380, 0x0380, 0x0000, 0x0000, 0x03f0, 0x03f0, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x0380, 0x03c0, 0x01f8, 0x00f8, 0x0000, 0x0000},
    // 0x6b 'k'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x1e38, 0x0f38, 0x07b8, 0x03b8, 0x01f8, 0x03f8, 0x03f8, 0x0738, 0x0f38, 0x0e38, 0x1c38, 0x3c38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x6c 'l'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x00fc, 0x00fc, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x01e0, 0x1fc0, 0x1f80, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x6d 'm'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0eec, 0x1ffc, 0x19dc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x19cc, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x6e 'n'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07b8, 0x0ff8, 0x0e78, 0x0e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x1e38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x6f 'o'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x0ff0, 0x0e38, 0x1c3c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c1c, 0x1c3c, 0x0e38, 0x0ff0, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x70 'p'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x07b8, 0x0ff8, 0x1e78, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1c38, 0x1e78, 0x0ff8, 0x07b8, 0x0038, 0x0038, 0x0038, 0x0038, 0x0038, 0x0000, 0x0000},
    // 0x71 'q'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ef0, 0x1ff8, 0x1f38, 0x1e3c, 0x1e1c, 0x1e1c, 0x1e1c, 0x1e1c, 0x1e3c, 0x1f38, 0x1ff8, 0x1ef0, 0x1e00, 0x1e00, 0x1e00, 0x1e00, 0x1e00, 0x0000, 0x0000},
    // 0x72 'r'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1e70, 0x1ff0, 0x11f0, 0x00f0, 0x0070, 0x0070, 0x0070, 0x0070, 0x0070, 0x0070, 0x0070, 0x0070, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x73 's'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x03e0, 0x0ff0, 0x0c38, 0x0038, 0x00f8, 0x07f8, 0x0fe0, 0x0f00, 0x0e00, 0x0e08, 0x0ff8, 0x03e0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x74 't'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x00e0, 0x00e0, 0x00e0, 0x1ffc, 0x1ffc, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x00e0, 0x01e0, 0x1fc0, 0x1f80, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x75 'u'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0e38, 0x0f38, 0x0ff8, 0x0ef0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x76 'v'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c1c, 0x1c1c, 0x1c38, 0x0e38, 0x0e38, 0x0e70, 0x0770, 0x0770, 0x07e0, 0x03e0, 0x03e0, 0x03c0, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x77 'w'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x300e, 0x380e, 0x380e, 0x39cc, 0x19cc, 0x19cc, 0x1bdc, 0x1f7c, 0x1f78, 0x1e78, 0x0e78, 0x0e38, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x78 'x'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1e3c, 0x0e38, 0x0f70, 0x07f0, 0x03e0, 0x01c0, 0x03e0, 0x03e0, 0x0770, 0x0e78, 0x1e38, 0x1c3c, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x79 'y'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1c1c, 0x1c1c, 0x1e38, 0x0e38, 0x0e78, 0x0f70, 0x0770, 0x07e0, 0x07e0, 0x03e0, 0x03c0, 0x03c0, 0x01c0, 0x01c0, 0x00e0, 0x00fc, 0x007c, 0x0000, 0x0000},
    // 0x7a 'z'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x1ff8, 0x1ff8, 0x1e00, 0x0f00, 0x0780, 0x03c0, 0x01e0, 0x00f0, 0x00f0, 0x0078, 0x1ff8, 0x1ff8, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x7b '{'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0f00, 0x0f80, 0x03c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01e0, 0x00f8, 0x00f8, 0x01e0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x03c0, 0x0f80, 0x0f00, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x7c '|'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x0000, 0x0000},
    // 0x7d '}'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x00f8, 0x01f8, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x03c0, 0x0f80, 0x0f80, 0x03c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01c0, 0x01f8, 0x00f8, 0x0000, 0x0000, 0x0000, 0x0000},
    // 0x7e '~'
    {0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x10f8, 0x1ffc, 0x0f04, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000, 0x0000},
};

}  // namespace textseg
