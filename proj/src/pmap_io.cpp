#include "textseg/pmap_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "textseg/errors.hpp"

namespace textseg {

namespace {

static_assert(std::endian::native == std::endian::little,
              "PMAP I/O assumes a little-endian host");

constexpr char kMagic[4] = {'P', 'M', 'A', 'P'};
constexpr std::uint64_t kMaxPixels = 1ull << 30;

}  // namespace

void write_pmap(const ProbMap& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write PMAP file: " + path);
  }
  const std::uint32_t w = static_cast<std::uint32_t>(p.width);
  const std::uint32_t h = static_cast<std::uint32_t>(p.height);
  out.write(kMagic, 4);
  out.write(reinterpret_cast<const char*>(&w), 4);
  out.write(reinterpret_cast<const char*>(&h), 4);
  out.write(reinterpret_cast<const char*>(p.values.data()),
            static_cast<std::streamsize>(p.values.size() * sizeof(float)));
  if (!out) {
    throw IoError("short write on PMAP file: " + path);
  }
}

ProbMap read_pmap(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path)) {
      throw MissingProbMap("missing PMAP file: " + path);
    }
    throw IoError("cannot open PMAP file: " + path);
  }

  char magic[4];
  std::uint32_t w = 0, h = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&w), 4);
  in.read(reinterpret_cast<char*>(&h), 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw CorruptProbMap("bad PMAP header in " + path);
  }
  if (w == 0 || h == 0 ||
      static_cast<std::uint64_t>(w) * h > kMaxPixels) {
    throw CorruptProbMap("implausible PMAP dimensions in " + path);
  }

  ProbMap p = ProbMap::make(static_cast<int>(w), static_cast<int>(h));
  in.read(reinterpret_cast<char*>(p.values.data()),
          static_cast<std::streamsize>(p.values.size() * sizeof(float)));
  if (in.gcount() !=
      static_cast<std::streamsize>(p.values.size() * sizeof(float))) {
    throw CorruptProbMap("truncated PMAP payload in " + path);
  }
  for (float v : p.values) {
    if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
      throw CorruptProbMap("PMAP value out of [0,1] in " + path);
    }
  }
  return p;
}

}  // namespace textseg
