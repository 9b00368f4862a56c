#pragma once

#include <stdexcept>
#include <string>

namespace textseg {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A box has no overlap with the image it refers to.
class BoxOutsideImage : public Error {
  using Error::Error;
};

// Mask/prob-map operands whose dimensions do not agree.
class ShapeMismatch : public Error {
  using Error::Error;
};

// Trimap PNG that cannot be mapped back to the three labels.
class CorruptMask : public Error {
  using Error::Error;
};

// PMAP file with bad magic, truncated payload, or out-of-range values.
class CorruptProbMap : public Error {
  using Error::Error;
};

// External scorer directory lacks the requested <box_id>.pmap file.
class MissingProbMap : public Error {
  using Error::Error;
};

class EmptyCorpus : public Error {
  using Error::Error;
};

class FontError : public Error {
  using Error::Error;
};

// Synthetic sampling could not place a word within the retry budget.
class GenerationExhausted : public Error {
  using Error::Error;
};

// Malformed configuration file or invalid field value.
class ConfigError : public Error {
  using Error::Error;
};

// Annotation JSON that parses but violates the documented schema.
class SchemaError : public Error {
  using Error::Error;
};

class IoError : public Error {
  using Error::Error;
};

}  // namespace textseg
