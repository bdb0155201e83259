#include "congruence.h"

#include <random>
#include <string>

#include "congruence/approx.hpp"
#include "congruence/core.hpp"
#include "congruence/data.hpp"
#include "congruence/optimize.hpp"

struct cgd_series {
  cgd::TimeSeries value;
};

struct cgd_dataset {
  cgd::Dataset value;
};

namespace {

thread_local std::string g_last_error;

cgd_status fail(cgd_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
cgd_status guarded(Fn&& fn) {
  try {
    fn();
    return CGD_OK;
  } catch (const cgd::DimensionError& e) {
    return fail(CGD_ERR_DIMENSION, e.what());
  } catch (const cgd::LengthError& e) {
    return fail(CGD_ERR_LENGTH, e.what());
  } catch (const cgd::ParseError& e) {
    return fail(CGD_ERR_PARSE, e.what());
  } catch (const cgd::IoError& e) {
    return fail(CGD_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(CGD_ERR_UNKNOWN, e.what());
  }
}

cgd::Format to_format(cgd_format format) {
  return format == CGD_FORMAT_CSV_SINGLE ? cgd::Format::CsvSingle
                                         : cgd::Format::JsonlCollection;
}

bool null_arg(const void* p) { return p == nullptr; }

}  // namespace

extern "C" {

const char* cgd_last_error(void) { return g_last_error.c_str(); }

void cgd_opt_config_default(cgd_opt_config* cfg) {
  if (!cfg) return;
  const cgd::OptimizerConfig defaults;
  cfg->max_iterations = defaults.max_iterations;
  cfg->objective_tolerance = defaults.objective_tolerance;
  cfg->constraint_tolerance = defaults.constraint_tolerance;
  cfg->multistart_count = defaults.multistart_count;
  cfg->seed = defaults.seed;
}

cgd_status cgd_series_create(const double* data, int n, int k, cgd_series** out) {
  if (null_arg(data) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new cgd_series{cgd::TimeSeries::from_row_major(data, n, k)}; });
}

void cgd_series_free(cgd_series* series) { delete series; }

int cgd_series_length(const cgd_series* series) {
  return series ? series->value.length() : 0;
}

int cgd_series_dim(const cgd_series* series) {
  return series ? series->value.dim() : 0;
}

cgd_status cgd_series_copy_points(const cgd_series* series, double* out) {
  if (null_arg(series) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  const int n = series->value.length();
  const int k = series->value.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      out[static_cast<ptrdiff_t>(i) * k + j] = series->value[i](j);
    }
  }
  return CGD_OK;
}

cgd_status cgd_series_load(const char* path, cgd_format format, cgd_series** out) {
  if (null_arg(path) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new cgd_series{cgd::load_series(path, to_format(format))}; });
}

cgd_status cgd_series_save(const cgd_series* series, const char* path,
                           cgd_format format, const char* id) {
  if (null_arg(series) || null_arg(path)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    cgd::save_series(series->value, path, to_format(format), id ? id : "series");
  });
}

cgd_status cgd_distance(cgd_measure measure, const cgd_series* s,
                        const cgd_series* t, double* out) {
  if (null_arg(s) || null_arg(t) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    switch (measure) {
      case CGD_MEASURE_DTW:
        *out = cgd::dtw_distance(s->value, t->value);
        break;
      case CGD_MEASURE_DELTA:
        *out = cgd::delta_distance(s->value, t->value);
        break;
      case CGD_MEASURE_FAST_DELTA:
        *out = cgd::fast_delta_distance(s->value, t->value);
        break;
      case CGD_MEASURE_GREEDY:
        *out = cgd::greedy_delta_distance(s->value, t->value);
        break;
      case CGD_MEASURE_FAST_GREEDY:
        *out = cgd::fast_greedy_delta_distance(s->value, t->value);
        break;
      default:
        throw cgd::Error("unknown measure");
    }
  });
}

cgd_status cgd_congruence_upper(const cgd_series* s, const cgd_series* t,
                                const cgd_opt_config* cfg, cgd_opt_result* out) {
  if (null_arg(s) || null_arg(t) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    cgd::OptimizerConfig config;
    if (cfg) {
      config.max_iterations = cfg->max_iterations;
      config.objective_tolerance = cfg->objective_tolerance;
      config.constraint_tolerance = cfg->constraint_tolerance;
      config.multistart_count = cfg->multistart_count;
      config.seed = cfg->seed;
    }
    const cgd::OptimizerResult result = cgd::congruence_upper(s->value, t->value, config);
    out->value = result.value;
    out->iterations_used = result.iterations_used;
    out->converged = result.converged ? 1 : 0;
    out->orthogonality_residual = result.orthogonality_residual;
  });
}

cgd_status cgd_congruence_oracle_2d(const cgd_series* s, const cgd_series* t,
                                    int angle_steps, double* out) {
  if (null_arg(s) || null_arg(t) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = cgd::congruence_oracle_2d(s->value, t->value, angle_steps); });
}

cgd_status cgd_generate_walk(int k, int n, double step_scale, int smoothing_window,
                             uint64_t seed, cgd_series** out) {
  if (null_arg(out)) return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    cgd::WalkParams params;
    params.dim = k;
    params.length = n;
    params.step_scale = step_scale;
    params.smoothing_window = smoothing_window;
    params.seed = seed;
    *out = new cgd_series{cgd::generate_walk(params)};
  });
}

cgd_status cgd_arc_length_resample(const cgd_series* series, int m, cgd_series** out) {
  if (null_arg(series) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new cgd_series{cgd::arc_length_resample(series->value, m)}; });
}

cgd_status cgd_random_transform(const cgd_series* series, uint64_t seed,
                                double translation_scale, cgd_series** out) {
  if (null_arg(series) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const int k = series->value.dim();
    const cgd::Matrix m = cgd::random_orthogonal(k, seed);
    std::mt19937_64 rng(cgd::mix_seed(seed, 0x7261ULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    cgd::Vector v(k);
    for (int j = 0; j < k; ++j) v(j) = translation_scale * gauss(rng);
    *out = new cgd_series{cgd::apply_isometry(series->value, cgd::Isometry(m, v))};
  });
}

cgd_status cgd_dataset_create(cgd_dataset** out) {
  if (null_arg(out)) return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  *out = new cgd_dataset{};
  return CGD_OK;
}

void cgd_dataset_free(cgd_dataset* ds) { delete ds; }

cgd_status cgd_dataset_add(cgd_dataset* ds, const char* id, const char* label,
                           const cgd_series* series) {
  if (null_arg(ds) || null_arg(id) || null_arg(series)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    ds->value.add(id, label ? std::optional<std::string>(label) : std::nullopt,
                  series->value);
  });
}

int cgd_dataset_size(const cgd_dataset* ds) { return ds ? ds->value.size() : 0; }

cgd_status cgd_dataset_get(const cgd_dataset* ds, int index, const char** id,
                           const char** label, cgd_series** series) {
  if (null_arg(ds)) return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  if (index < 0 || index >= ds->value.size()) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "dataset index out of range");
  }
  const cgd::DatasetEntry& entry = ds->value[index];
  if (id) *id = entry.id.c_str();
  if (label) *label = entry.label ? entry.label->c_str() : nullptr;
  if (series) *series = new cgd_series{entry.series};
  return CGD_OK;
}

cgd_status cgd_dataset_load(const char* path, cgd_format format, cgd_dataset** out) {
  if (null_arg(path) || null_arg(out)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new cgd_dataset{cgd::load_dataset(path, to_format(format))}; });
}

cgd_status cgd_dataset_save(const cgd_dataset* ds, const char* path, cgd_format format) {
  if (null_arg(ds) || null_arg(path)) {
    return fail(CGD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { cgd::save_dataset(ds->value, path, to_format(format)); });
}

}  // extern "C"
