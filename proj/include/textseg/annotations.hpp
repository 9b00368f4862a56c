#pragma once

#include <string>
#include <vector>

#include "textseg/raster.hpp"

namespace textseg {

enum class Legibility { Legible, Illegible };
enum class TextClass { MachinePrinted, Handwritten, Other };
enum class Language { English, Other };

/// One box-level text annotation. Boxes qualified for confident
/// supervision are legible, machine printed and English; everything else
/// only contributes to the uncertainty region downstream.
struct BBoxAnnotation {
  std::string id;
  Box box;
  Legibility legibility = Legibility::Illegible;
  TextClass text_class = TextClass::Other;
  Language language = Language::Other;

  bool qualified() const {
    return legibility == Legibility::Legible &&
           text_class == TextClass::MachinePrinted &&
           language == Language::English;
  }
};

struct ImageRecord {
  std::string image_id;
  std::string file_name;
  int width = 0;
  int height = 0;
  std::vector<BBoxAnnotation> boxes;
};

/// Load a COCO-Text-style annotation file (see README for the schema
/// subset). Degenerate boxes (w or h <= 0) are dropped with a warning.
/// Records come back sorted by image id. Throws SchemaError with the
/// offending field or id on malformed input.
std::vector<ImageRecord> load_annotations(const std::string& path);

struct BoxPartition {
  std::vector<BBoxAnnotation> qualified;
  std::vector<BBoxAnnotation> disqualified;
};

/// Split a record's boxes by the legibility filter. Every box lands in
/// exactly one side.
BoxPartition partition_boxes(const ImageRecord& record);

/// Keep only records with at least one qualified box.
std::vector<ImageRecord> select_images(const std::vector<ImageRecord>& records);

}  // namespace textseg
