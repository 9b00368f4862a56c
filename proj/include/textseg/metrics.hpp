#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "textseg/raster.hpp"

namespace textseg {

/// How uncertain pixels enter the confusion counts. Text is the positive
/// class; excluded pixels are counted nowhere.
enum class PredUncertain { AsText, AsBackground, Excluded };
enum class GtUncertain { Excluded, AsText };

struct UncertainPolicy {
  PredUncertain prediction_uncertain = PredUncertain::AsText;
  GtUncertain groundtruth_uncertain = GtUncertain::Excluded;
};

struct PixelMetrics {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

/// Harmonic mean 2PR/(P+R); 0 when P+R is 0.
double f1_score(double precision, double recall);

/// Derive precision/recall/F1 from raw counts (0 on empty denominators).
PixelMetrics finalize_counts(std::uint64_t tp, std::uint64_t fp,
                             std::uint64_t fn, std::uint64_t tn);

/// Confusion counts and derived scores for one mask pair.
/// Throws ShapeMismatch when dimensions differ.
PixelMetrics evaluate_pair(const TrimapMask& pred, const TrimapMask& gt,
                           const UncertainPolicy& policy);

/// Micro-average accumulator: counts are summed across pairs and the
/// scores derived once at the end.
class CorpusAccumulator {
 public:
  explicit CorpusAccumulator(const UncertainPolicy& policy)
      : policy_(policy) {}

  void add(const TrimapMask& pred, const TrimapMask& gt);
  void add_counts(const PixelMetrics& m);

  std::size_t pairs() const { return pairs_; }

  /// Throws EmptyCorpus when no pair was added.
  PixelMetrics micro() const;

 private:
  UncertainPolicy policy_;
  std::size_t pairs_ = 0;
  std::uint64_t tp_ = 0, fp_ = 0, fn_ = 0, tn_ = 0;
};

/// Micro-averaged corpus metrics over mask pairs (pred, gt).
PixelMetrics evaluate_corpus(
    const std::vector<std::pair<TrimapMask, TrimapMask>>& pairs,
    const UncertainPolicy& policy);

/// Macro aggregation: precision/recall/F1 are the arithmetic means of the
/// per-pair scores; counts are still the sums. Throws EmptyCorpus on an
/// empty list.
PixelMetrics macro_average(const std::vector<PixelMetrics>& per_pair);

/// JSON metrics report {tp, fp, fn, tn, precision, recall, f1, policy}.
void write_report(const PixelMetrics& m, const UncertainPolicy& policy,
                  const std::string& path);
PixelMetrics read_report(const std::string& path);

const char* to_string(PredUncertain p);
const char* to_string(GtUncertain g);

}  // namespace textseg
