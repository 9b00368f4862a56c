#include "textseg/annotations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "textseg/errors.hpp"
#include "textseg/log.hpp"

namespace textseg {

namespace {

using nlohmann::json;

std::string normalize_attr(std::string s) {
  // trim
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = ' ';
  }
  return s;
}

// Unrecognized strings map to the non-qualifying variant so unknown boxes
// can never be promoted to confident supervision.
Legibility parse_legibility(const std::string& raw) {
  return normalize_attr(raw) == "legible" ? Legibility::Legible
                                          : Legibility::Illegible;
}

TextClass parse_text_class(const std::string& raw) {
  const std::string v = normalize_attr(raw);
  if (v == "machine printed") return TextClass::MachinePrinted;
  if (v == "handwritten") return TextClass::Handwritten;
  return TextClass::Other;
}

Language parse_language(const std::string& raw) {
  return normalize_attr(raw) == "english" ? Language::English
                                          : Language::Other;
}

const json& require_field(const json& obj, const char* field,
                          const std::string& context) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw SchemaError("missing required field \"" + std::string(field) +
                      "\" in " + context);
  }
  return *it;
}

int line_of_offset(const std::string& path, std::size_t byte_offset) {
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const std::size_t end = std::min(byte_offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

std::vector<ImageRecord> load_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open annotation file: " + path);
  }

  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << "JSON parse failure in " << path << " at line "
        << line_of_offset(path, e.byte) << " (byte " << e.byte
        << "): " << e.what();
    throw SchemaError(msg.str());
  }

  const json& imgs = require_field(root, "imgs", path);
  const json& anns = require_field(root, "anns", path);
  if (!imgs.is_object() || !anns.is_object()) {
    throw SchemaError("\"imgs\" and \"anns\" must be objects in " + path);
  }

  // nlohmann objects iterate in key order, which fixes record order.
  std::map<std::string, ImageRecord> records;
  for (const auto& [img_id, entry] : imgs.items()) {
    const std::string ctx = "image \"" + img_id + "\"";
    ImageRecord rec;
    rec.image_id = img_id;
    rec.file_name = require_field(entry, "file_name", ctx).get<std::string>();
    rec.width = require_field(entry, "width", ctx).get<int>();
    rec.height = require_field(entry, "height", ctx).get<int>();
    if (rec.width < 1 || rec.height < 1) {
      throw SchemaError("non-positive dimensions for " + ctx);
    }
    records.emplace(img_id, std::move(rec));
  }

  for (const auto& [ann_id, entry] : anns.items()) {
    const std::string ctx = "annotation \"" + ann_id + "\"";
    const std::string image_id =
        require_field(entry, "image_id", ctx).get<std::string>();
    const auto rec = records.find(image_id);
    if (rec == records.end()) {
      throw SchemaError(ctx + " references unknown image id \"" + image_id +
                        "\"");
    }

    const json& bbox = require_field(entry, "bbox", ctx);
    if (!bbox.is_array() || bbox.size() != 4) {
      throw SchemaError("field \"bbox\" of " + ctx +
                        " must be an [x,y,w,h] array");
    }
    const double x = bbox[0].get<double>();
    const double y = bbox[1].get<double>();
    const double w = bbox[2].get<double>();
    const double h = bbox[3].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(w) ||
        !std::isfinite(h)) {
      throw SchemaError("non-finite bbox coordinates in " + ctx);
    }
    if (w <= 0 || h <= 0) {
      log_warn("dropping degenerate box \"" + ann_id + "\" (w=" +
               std::to_string(w) + ", h=" + std::to_string(h) + ")");
      continue;
    }

    BBoxAnnotation box;
    box.id = ann_id;
    box.box = Box::from_xywh(x, y, w, h);
    box.legibility = parse_legibility(
        require_field(entry, "legibility", ctx).get<std::string>());
    box.text_class = parse_text_class(
        require_field(entry, "class", ctx).get<std::string>());
    box.language = parse_language(
        require_field(entry, "language", ctx).get<std::string>());
    rec->second.boxes.push_back(std::move(box));
  }

  std::vector<ImageRecord> out;
  out.reserve(records.size());
  for (auto& [_, rec] : records) {
    out.push_back(std::move(rec));
  }
  return out;
}

BoxPartition partition_boxes(const ImageRecord& record) {
  BoxPartition p;
  for (const BBoxAnnotation& b : record.boxes) {
    (b.qualified() ? p.qualified : p.disqualified).push_back(b);
  }
  return p;
}

std::vector<ImageRecord> select_images(
    const std::vector<ImageRecord>& records) {
  std::vector<ImageRecord> out;
  for (const ImageRecord& rec : records) {
    const bool any_qualified =
        std::any_of(rec.boxes.begin(), rec.boxes.end(),
                    [](const BBoxAnnotation& b) { return b.qualified(); });
    if (any_qualified) {
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace textseg
