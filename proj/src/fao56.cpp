#include "agropinn/fao56.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace agropinn::fao56 {

void CropParameters::validate() const {
  const auto positive_len = [](int len, const char* name) {
    if (len <= 0) {
      throw ConfigError(std::string("crop: stage length ") + name +
                        " must be positive");
    }
  };
  positive_len(len_ini, "len_ini");
  positive_len(len_dev, "len_dev");
  positive_len(len_mid, "len_mid");
  positive_len(len_late, "len_late");
  const auto kcb_range = [](double kcb, const char* name) {
    if (!(kcb > 0.0) || kcb > 2.0) {
      throw ConfigError(std::string("crop: ") + name +
                        " must lie in (0, 2]");
    }
  };
  kcb_range(kcb_ini, "kcb_ini");
  kcb_range(kcb_mid, "kcb_mid");
  kcb_range(kcb_end, "kcb_end");
  if (ke_max < 0.0) throw ConfigError("crop: ke_max must be >= 0");
  if (ky_vegetative < 0.0 || ky_flowering < 0.0 || ky_average < 0.0) {
    throw ConfigError("crop: yield response factors must be >= 0");
  }
}

CropParameters CropParameters::from_file(const std::string& path) {
  const auto kv = parse_kv_file(path);
  static const std::set<std::string> known = {
      "kcb_ini",  "kcb_mid",  "kcb_end",  "len_ini",
      "len_dev",  "len_mid",  "len_late", "ke_max",
      "ky_vegetative", "ky_flowering", "ky_average"};
  for (const auto& [key, value] : kv) {
    if (!known.count(key)) {
      throw ConfigError(path + ": unknown crop parameter '" + key + "'");
    }
  }
  CropParameters crop;
  crop.kcb_ini = kv_get_double(kv, "kcb_ini", crop.kcb_ini);
  crop.kcb_mid = kv_get_double(kv, "kcb_mid", crop.kcb_mid);
  crop.kcb_end = kv_get_double(kv, "kcb_end", crop.kcb_end);
  crop.len_ini = kv_get_int(kv, "len_ini", crop.len_ini);
  crop.len_dev = kv_get_int(kv, "len_dev", crop.len_dev);
  crop.len_mid = kv_get_int(kv, "len_mid", crop.len_mid);
  crop.len_late = kv_get_int(kv, "len_late", crop.len_late);
  crop.ke_max = kv_get_double(kv, "ke_max", crop.ke_max);
  crop.ky_vegetative = kv_get_double(kv, "ky_vegetative", crop.ky_vegetative);
  crop.ky_flowering = kv_get_double(kv, "ky_flowering", crop.ky_flowering);
  crop.ky_average = kv_get_double(kv, "ky_average", crop.ky_average);
  crop.validate();
  return crop;
}

namespace {

void check_day_index(int day_index, const CropParameters& crop) {
  if (day_index < 0 || day_index > crop.season_length()) {
    throw ConfigError("day_index " + std::to_string(day_index) +
                      " outside season [0, " +
                      std::to_string(crop.season_length()) + "]");
  }
}

}  // namespace

double basal_kcb(int day_index, const CropParameters& crop) {
  crop.validate();
  check_day_index(day_index, crop);
  const int dev_start = crop.len_ini;
  const int mid_start = dev_start + crop.len_dev;
  const int late_start = mid_start + crop.len_mid;
  if (day_index < dev_start) return crop.kcb_ini;
  if (day_index < mid_start) {
    const double f = static_cast<double>(day_index - dev_start) / crop.len_dev;
    return crop.kcb_ini + f * (crop.kcb_mid - crop.kcb_ini);
  }
  if (day_index < late_start) return crop.kcb_mid;
  const double f = static_cast<double>(day_index - late_start) / crop.len_late;
  return crop.kcb_mid + f * (crop.kcb_end - crop.kcb_mid);
}

double ky_for_day(int day_index, const CropParameters& crop) {
  crop.validate();
  check_day_index(day_index, crop);
  const int mid_start = crop.len_ini + crop.len_dev;
  const int late_start = mid_start + crop.len_mid;
  if (day_index < mid_start) return crop.ky_vegetative;
  if (day_index < late_start) return crop.ky_flowering;
  return crop.ky_average;
}

double kc_curve(int day_index, const CropParameters& crop, KcMode mode,
                bool wet_surface, int days_since_wetting, int drying_window) {
  const double kcb = basal_kcb(day_index, crop);
  if (mode == KcMode::kSingle) return kcb;
  if (drying_window <= 0) {
    throw ConfigError("kc_curve: drying_window must be positive");
  }
  const double ke_full = std::max(crop.ke_max - kcb, 0.0);
  const int dry_days = wet_surface ? 0 : days_since_wetting;
  if (dry_days < 0) {
    throw ConfigError("kc_curve: days_since_wetting must be >= 0");
  }
  double wetness = 0.0;
  if (dry_days < drying_window) {
    wetness = 1.0 - static_cast<double>(dry_days) / drying_window;
  }
  return kcb + ke_full * wetness;
}

double stress_ks(double depletion, double taw, double raw) {
  if (!(taw > 0.0)) throw ConfigError("stress_ks: taw must be positive");
  if (raw < 0.0 || raw >= taw) {
    throw ConfigError("stress_ks: raw must satisfy 0 <= raw < taw");
  }
  if (depletion <= raw) return 1.0;
  if (depletion >= taw) return 0.0;
  return (taw - depletion) / (taw - raw);
}

SimulationTrace simulate_etx(std::span<const meteo::DailyWeather> weather,
                             const CropParameters& crop,
                             const SimulateOptions& options) {
  crop.validate();
  const int season = crop.season_length();
  if (static_cast<int>(weather.size()) < season) {
    throw DataError("simulate_etx: weather covers " +
                    std::to_string(weather.size()) + " days, season needs " +
                    std::to_string(season));
  }
  SimulationTrace trace;
  trace.dates.reserve(season);
  trace.et0.reserve(season);
  trace.kc.reserve(season);
  trace.etx.reserve(season);
  int days_since_wetting = kNeverWetted;
  for (int day = 0; day < season; ++day) {
    const meteo::DailyWeather& w = weather[day];
    const bool wet = w.precip >= options.wet_precip_threshold_mm;
    if (wet) {
      days_since_wetting = 0;
    } else if (days_since_wetting != kNeverWetted) {
      ++days_since_wetting;
    }
    const auto psy = meteo::psychrometrics(w.t_min, w.t_max,
                                           options.pressure_kpa);
    const auto et0 = meteo::penman_monteith_et0(w, psy.state);
    const double kc = kc_curve(day, crop, options.mode, wet,
                               days_since_wetting, options.drying_window);
    trace.dates.push_back(w.date);
    trace.et0.push_back(et0.value);
    trace.kc.push_back(kc);
    trace.etx.push_back(kc * et0.value);
  }
  return trace;
}

std::vector<double> aggregate_to_acquisitions(
    std::span<const double> daily_values, std::span<const Date> daily_dates,
    std::span<const Date> acquisitions) {
  if (daily_values.size() != daily_dates.size()) {
    throw DataError("aggregate_to_acquisitions: values and dates differ in length");
  }
  if (daily_dates.empty()) {
    throw DataError("aggregate_to_acquisitions: empty daily series");
  }
  if (acquisitions.empty()) {
    throw DataError("aggregate_to_acquisitions: no acquisition dates");
  }
  for (std::size_t i = 0; i + 1 < daily_dates.size(); ++i) {
    if (!(daily_dates[i] < daily_dates[i + 1])) {
      throw DataError("aggregate_to_acquisitions: daily dates must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i + 1 < acquisitions.size(); ++i) {
    if (!(acquisitions[i] < acquisitions[i + 1])) {
      throw DataError("aggregate_to_acquisitions: acquisition dates must be strictly increasing");
    }
  }
  if (acquisitions.front() < daily_dates.front() ||
      daily_dates.back() < acquisitions.back()) {
    throw DataError("aggregate_to_acquisitions: acquisitions outside the daily date range");
  }
  std::vector<double> sums(acquisitions.size(), 0.0);
  std::size_t window = 0;
  for (std::size_t i = 0; i < daily_dates.size() && window < acquisitions.size(); ++i) {
    sums[window] += daily_values[i];
    if (daily_dates[i] == acquisitions[window]) ++window;
  }
  if (window != acquisitions.size()) {
    throw DataError("aggregate_to_acquisitions: acquisition date not present in the daily series");
  }
  return sums;
}

void write_trace_csv(const SimulationTrace& trace, const std::string& path) {
  std::ostringstream out;
  out << "date,et0,kc,etx\n";
  for (std::size_t i = 0; i < trace.dates.size(); ++i) {
    out << trace.dates[i].iso() << ',' << format_double(trace.et0[i]) << ','
        << format_double(trace.kc[i]) << ',' << format_double(trace.etx[i])
        << '\n';
  }
  write_text_file_atomic(path, out.str());
}

}  // namespace agropinn::fao56
