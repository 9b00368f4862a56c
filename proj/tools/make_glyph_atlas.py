#!/usr/bin/env python3
"""Regenerate src/glyphs.cpp, the built-in bitmap glyph atlas.

Rasterizes printable ASCII (0x20..0x7E) from DejaVu Sans Mono Bold into a
fixed-cell 1-bit atlas and emits it as a C++ source file. Run from the
repository root:

    python3 tools/make_glyph_atlas.py > src/glyphs.cpp
"""

import sys

from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono-Bold.ttf"
CELL_W = 16
CELL_H = 28
FONT_SIZE = 22
BASELINE = 21  # rows above the baseline inside the cell
FIRST, LAST = 0x20, 0x7E


def render_glyph(font, ch):
    img = Image.new("L", (CELL_W, CELL_H), 0)
    draw = ImageDraw.Draw(img)
    ascent, _ = font.getmetrics()
    draw.text((1, BASELINE - ascent), ch, fill=255, font=font)
    return img


def main():
    font = ImageFont.truetype(FONT, FONT_SIZE)
    rows = []
    for code in range(FIRST, LAST + 1):
        img = render_glyph(font, chr(code))
        bits = []
        for y in range(CELL_H):
            word = 0
            for x in range(CELL_W):
                if img.getpixel((x, y)) >= 128:
                    word |= 1 << x
            bits.append(word)
        rows.append((code, bits))

    out = sys.stdout
    out.write("// Built-in glyph atlas: printable ASCII 0x20..0x7E, %dx%d cells,\n" % (CELL_W, CELL_H))
    out.write("// one bit per pixel, bit x of word y = pixel (x, y) of the cell.\n")
    out.write("// Shapes derived from DejaVu Sans Mono Bold (Bitstream Vera license).\n")
    out.write("// Generated by tools/make_glyph_atlas.py; do not edit by hand.\n\n")
    out.write("#include \"textseg/glyphs.hpp\"\n\n")
    out.write("namespace textseg {\n\n")
    out.write("const int kBuiltinGlyphWidth = %d;\n" % CELL_W)
    out.write("const int kBuiltinGlyphHeight = %d;\n\n" % CELL_H)
    out.write("const std::uint16_t kBuiltinGlyphBits[95][%d] = {\n" % CELL_H)
    for code, bits in rows:
        name = chr(code) if code != 0x5C else "backslash"
        out.write("    // 0x%02x '%s'\n" % (code, name))
        body = ", ".join("0x%04x" % w for w in bits)
        out.write("    {%s},\n" % body)
    out.write("};\n\n")
    out.write("}  // namespace textseg\n")


if __name__ == "__main__":
    main()
