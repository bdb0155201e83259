#include "congruence/data.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace cgd {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_double(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("invalid number '" + token + "'", line);
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

void save_series_csv(const TimeSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (int j = 0; j < series.dim(); ++j) {
    out << (j ? "," : "") << "dim" << j;
  }
  out << '\n';
  for (int i = 0; i < series.length(); ++i) {
    for (int j = 0; j < series.dim(); ++j) {
      out << (j ? "," : "") << format_double(series[i](j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

TimeSeries load_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("missing header row", 1);
  }
  const size_t k = split_csv(line).size();
  if (k == 0) throw ParseError("empty header row", 1);

  std::vector<Vector> points;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != k) {
      throw ParseError("expected " + std::to_string(k) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    Vector p(static_cast<int>(k));
    for (size_t j = 0; j < k; ++j) {
      p(static_cast<int>(j)) = parse_double(fields[j], line_no);
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) {
    throw ParseError("csv-single file contains no data rows", line_no);
  }
  return TimeSeries(std::move(points));
}

void write_jsonl_entry(std::ostream& out, const DatasetEntry& entry) {
  out << "{\"id\": " << nlohmann::json(entry.id).dump() << ", \"label\": ";
  if (entry.label) {
    out << nlohmann::json(*entry.label).dump();
  } else {
    out << "null";
  }
  out << ", \"points\": [";
  for (int i = 0; i < entry.series.length(); ++i) {
    if (i) out << ", ";
    out << '[';
    for (int j = 0; j < entry.series.dim(); ++j) {
      if (j) out << ", ";
      out << format_double(entry.series[i](j));
    }
    out << ']';
  }
  out << "]}\n";
}

Dataset load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  Dataset ds;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw ParseError("invalid JSON object", line_no);
    }
    if (!obj.contains("id") || !obj["id"].is_string()) {
      throw ParseError("missing string field 'id'", line_no);
    }
    if (!obj.contains("points") || !obj["points"].is_array() || obj["points"].empty()) {
      throw ParseError("missing non-empty array field 'points'", line_no);
    }
    std::optional<std::string> label;
    if (obj.contains("label") && !obj["label"].is_null()) {
      if (!obj["label"].is_string()) {
        throw ParseError("field 'label' must be a string or null", line_no);
      }
      label = obj["label"].get<std::string>();
    }
    std::vector<Vector> points;
    size_t dim = 0;
    for (const auto& row : obj["points"]) {
      if (!row.is_array() || row.empty()) {
        throw ParseError("each point must be a non-empty array of numbers", line_no);
      }
      if (dim == 0) dim = row.size();
      if (row.size() != dim) {
        throw ParseError("inconsistent point arity within entry", line_no);
      }
      Vector p(static_cast<int>(dim));
      int j = 0;
      for (const auto& value : row) {
        if (!value.is_number()) {
          throw ParseError("point coordinates must be numbers", line_no);
        }
        p(j++) = value.get<double>();
      }
      points.push_back(std::move(p));
    }
    try {
      ds.add(obj["id"].get<std::string>(), std::move(label),
             TimeSeries(std::move(points)));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return ds;
}

}  // namespace

void WalkParams::validate() const {
  if (dim < 1) throw DimensionError("walk params: dimension must be >= 1");
  if (length < 2) throw LengthError("walk params: length must be >= 2");
  if (step_scale < 0.0) throw Error("walk params: step_scale must be >= 0");
  if (smoothing_window < 1) throw Error("walk params: smoothing_window must be >= 1");
}

void Dataset::add(std::string id, std::optional<std::string> label, TimeSeries series) {
  for (const DatasetEntry& e : entries_) {
    if (e.id == id) throw Error("duplicate dataset id '" + id + "'");
  }
  if (!entries_.empty() && entries_.front().series.dim() != series.dim()) {
    throw DimensionError("dataset entries must share one dimension");
  }
  entries_.push_back({std::move(id), std::move(label), std::move(series)});
}

TimeSeries generate_walk(const WalkParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const int n = params.length;
  const int k = params.dim;
  std::vector<Vector> walk;
  walk.reserve(static_cast<size_t>(n));
  Vector pos = Vector::Zero(k);
  walk.push_back(pos);
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < k; ++j) pos(j) += params.step_scale * gauss(rng);
    walk.push_back(pos);
  }

  if (params.smoothing_window == 1) return TimeSeries(std::move(walk));

  const int half = params.smoothing_window / 2;
  std::vector<Vector> smoothed;
  smoothed.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - half);
    const int hi = std::min(n - 1, i + half);
    Vector acc = Vector::Zero(k);
    for (int j = lo; j <= hi; ++j) acc += walk[static_cast<size_t>(j)];
    smoothed.push_back(acc / static_cast<double>(hi - lo + 1));
  }
  return TimeSeries(std::move(smoothed));
}

namespace {

// One pass of uniform arc-length sampling: m points equally spaced along the
// polyline, endpoints kept exactly.
std::vector<Vector> uniform_arc_pass(const std::vector<Vector>& pts, int m) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> cum(static_cast<size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) {
    cum[static_cast<size_t>(i)] =
        cum[static_cast<size_t>(i - 1)] + (pts[static_cast<size_t>(i)] -
                                           pts[static_cast<size_t>(i - 1)]).norm();
  }
  const double total = cum.back();
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(m));
  if (total == 0.0) {
    for (int j = 0; j < m; ++j) out.push_back(pts.front());
    return out;
  }
  int seg = 0;
  out.push_back(pts.front());
  for (int j = 1; j < m - 1; ++j) {
    const double target = total * static_cast<double>(j) / (m - 1);
    while (seg < n - 2 && cum[static_cast<size_t>(seg + 1)] < target) ++seg;
    const double span = cum[static_cast<size_t>(seg + 1)] - cum[static_cast<size_t>(seg)];
    if (span == 0.0) {
      out.push_back(pts[static_cast<size_t>(seg)]);
    } else {
      const double t = (target - cum[static_cast<size_t>(seg)]) / span;
      out.push_back((1.0 - t) * pts[static_cast<size_t>(seg)] +
                    t * pts[static_cast<size_t>(seg + 1)]);
    }
  }
  out.push_back(pts.back());
  return out;
}

double max_gap_imbalance(const std::vector<Vector>& pts) {
  double worst = 0.0;
  for (size_t i = 0; i + 2 < pts.size(); ++i) {
    const double d1 = (pts[i + 1] - pts[i]).norm();
    const double d2 = (pts[i + 2] - pts[i + 1]).norm();
    worst = std::max(worst, std::abs(d1 - d2));
  }
  return worst;
}

}  // namespace

TimeSeries arc_length_resample(const TimeSeries& series, int m) {
  if (m < 2) throw LengthError("arc_length_resample: target length must be >= 2");
  if (series.length() < 2) {
    throw LengthError("arc_length_resample: input must have >= 2 points");
  }
  const int n = series.length();

  double total = 0.0;
  for (int i = 1; i < n; ++i) total += (series[i] - series[i - 1]).norm();

  std::vector<Vector> input;
  input.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) input.push_back(series[i]);

  // Uniform arc-length sampling alone leaves unequal chords wherever the
  // polyline bends, so iterate it: a polyline is a fixed point of the pass
  // exactly when all its segments have equal length, and repeated passes
  // contract toward such a fixed point while pinning both endpoints.
  std::vector<Vector> out = uniform_arc_pass(input, m);
  const double target = 1e-12 * total;
  for (int iter = 0; iter < 100000; ++iter) {
    if (max_gap_imbalance(out) <= target) break;
    out = uniform_arc_pass(out, m);
  }
  return TimeSeries(std::move(out));
}

Dataset load_dataset(const std::string& path, Format format) {
  if (format == Format::JsonlCollection) return load_jsonl(path);
  Dataset ds;
  ds.add(std::filesystem::path(path).stem().string(), std::nullopt,
         load_series_csv(path));
  return ds;
}

void save_dataset(const Dataset& ds, const std::string& path, Format format) {
  if (format == Format::CsvSingle) {
    if (ds.size() != 1) {
      throw IoError("csv-single holds exactly one series per file; got " +
                    std::to_string(ds.size()) + " entries");
    }
    save_series_csv(ds[0].series, path);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const DatasetEntry& entry : ds.entries()) {
    write_jsonl_entry(out, entry);
  }
  if (!out) throw IoError("write failed: " + path);
}

TimeSeries load_series(const std::string& path, Format format) {
  if (format == Format::CsvSingle) return load_series_csv(path);
  Dataset ds = load_jsonl(path);
  if (ds.size() != 1) {
    throw IoError("expected exactly one series in " + path + ", got " +
                  std::to_string(ds.size()));
  }
  return ds[0].series;
}

void save_series(const TimeSeries& series, const std::string& path, Format format,
                 const std::string& id) {
  if (format == Format::CsvSingle) {
    save_series_csv(series, path);
    return;
  }
  Dataset ds;
  ds.add(id, std::nullopt, series);
  save_dataset(ds, path, Format::JsonlCollection);
}

}  // namespace cgd
