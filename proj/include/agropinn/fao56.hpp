#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "agropinn/common.hpp"
#include "agropinn/meteo.hpp"

namespace agropinn::fao56 {

enum class KcMode { kSingle, kDual };

/// Sentinel for a surface that has never been wetted within the season.
inline constexpr int kNeverWetted = std::numeric_limits<int>::max();

/// Crop description: basal coefficient curve anchors, four growth stage
/// lengths in days, evaporation ceiling for the dual coefficient, and
/// per-stage yield response factors.
struct CropParameters {
  double kcb_ini = 0.30;
  double kcb_mid = 1.15;
  double kcb_end = 0.40;
  int len_ini = 25;
  int len_dev = 30;
  int len_mid = 35;
  int len_late = 20;
  double ke_max = 1.20;
  double ky_vegetative = 0.5;
  double ky_flowering = 1.5;
  double ky_average = 1.05;

  int season_length() const { return len_ini + len_dev + len_mid + len_late; }
  void validate() const;

  /// Reads a key=value file whose keys are exactly the field names above.
  /// Missing keys keep their defaults; unknown keys are rejected.
  static CropParameters from_file(const std::string& path);
};

/// Basal crop coefficient on a given season day (0-based). Constant during
/// the initial and mid stages, linear in between and during late season,
/// continuous at every stage boundary.
double basal_kcb(int day_index, const CropParameters& crop);

/// Yield response factor active on a given season day: vegetative over the
/// initial and development stages, flowering over mid season, average over
/// late season.
double ky_for_day(int day_index, const CropParameters& crop);

/// Crop coefficient. Single mode returns the basal curve. Dual mode adds a
/// soil evaporation component Ke = max(ke_max - Kcb, 0) that is full on a
/// wet day and decays linearly to zero over `drying_window` days after the
/// last wetting.
double kc_curve(int day_index, const CropParameters& crop, KcMode mode,
                bool wet_surface, int days_since_wetting = kNeverWetted,
                int drying_window = 4);

/// Soil water stress coefficient in [0, 1] from root zone depletion against
/// total and readily available water (all mm).
double stress_ks(double depletion, double taw, double raw);

/// Daily simulation output. `ks` and `eta` are filled only by simulations
/// that track soil water stress.
struct SimulationTrace {
  std::vector<Date> dates;
  std::vector<double> et0;
  std::vector<double> kc;
  std::vector<double> etx;
  std::vector<double> ks;
  std::vector<double> eta;
};

struct SimulateOptions {
  KcMode mode = KcMode::kSingle;
  double pressure_kpa = kStandardPressureKpa;
  double wet_precip_threshold_mm = 1.0;
  int drying_window = 4;
};

/// Runs the crop coefficient model over one season: daily reference
/// evapotranspiration, crop coefficient, and crop water demand
/// etx = kc * et0. Weather must cover at least season_length() days; extra
/// trailing days are ignored.
SimulationTrace simulate_etx(std::span<const meteo::DailyWeather> weather,
                             const CropParameters& crop,
                             const SimulateOptions& options = {});

/// Sums a daily series over inter-acquisition windows. Window i covers the
/// days after acquisition i-1 up to and including acquisition i; the first
/// window starts at the first daily date. Acquisition dates must be strictly
/// increasing and lie within the daily date range.
std::vector<double> aggregate_to_acquisitions(
    std::span<const double> daily_values, std::span<const Date> daily_dates,
    std::span<const Date> acquisitions);

/// Writes a trace as CSV with header date,et0,kc,etx.
void write_trace_csv(const SimulationTrace& trace, const std::string& path);

}  // namespace agropinn::fao56
