#pragma once

#include <string>

#include "textseg/raster.hpp"

namespace textseg {

// Binary probability-map interchange format:
//   magic "PMAP", u32 LE width, u32 LE height,
//   then width*height f32 LE row-major values in [0,1].

void write_pmap(const ProbMap& p, const std::string& path);

/// Throws MissingProbMap when the file does not exist and CorruptProbMap
/// on bad magic, truncation, or out-of-range values.
ProbMap read_pmap(const std::string& path);

}  // namespace textseg
