#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congruence/core.hpp"

namespace cgd {

struct WalkParams {
  int dim = 2;
  int length = 32;
  double step_scale = 1.0;      // Gaussian step magnitude
  int smoothing_window = 1;     // moving-average width
  std::uint64_t seed = 0;

  void validate() const;
};

struct DatasetEntry {
  std::string id;
  std::optional<std::string> label;
  TimeSeries series;
};

/// Labeled collection with unique ids and a uniform dimension.
class Dataset {
 public:
  Dataset() = default;

  void add(std::string id, std::optional<std::string> label, TimeSeries series);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const DatasetEntry& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<DatasetEntry>& entries() const { return entries_; }

 private:
  std::vector<DatasetEntry> entries_;
};

enum class Format {
  CsvSingle,        // one series per file, header dim0,...,dim{k-1}
  JsonlCollection,  // one {"id","label","points"} object per line
};

/// Smoothed cumulative Gaussian walk; stand-in generator for synthetic
/// benchmark series. Deterministic per seed.
TimeSeries generate_walk(const WalkParams& params);

/// Reinterpolates the polyline of `series` to m points at equal arc-length
/// spacing (endpoints preserved). A zero-length input collapses to m copies
/// of the first point.
TimeSeries arc_length_resample(const TimeSeries& series, int m);

Dataset load_dataset(const std::string& path, Format format);
void save_dataset(const Dataset& ds, const std::string& path, Format format);

/// Single-series convenience wrappers over the dataset formats. For
/// jsonl-collection the file must contain exactly one entry.
TimeSeries load_series(const std::string& path, Format format);
void save_series(const TimeSeries& series, const std::string& path, Format format,
                 const std::string& id = "series");

}  // namespace cgd
