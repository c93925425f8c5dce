#pragma once

#include <string>
#include <vector>

#include "agropinn/common.hpp"

namespace agropinn::meteo {

/// One day of weather at a site. Units: temperatures degC, wind speed at 2 m
/// height m/s, net radiation and soil heat flux MJ m-2 day-1, vapour
/// pressures kPa, precipitation mm.
struct DailyWeather {
  Date date;
  double t_min = 0.0;
  double t_max = 0.0;
  double t_mean = 0.0;
  double u2 = 0.0;
  double rn = 0.0;
  double g = 0.0;
  double e_s = 0.0;
  double e_a = 0.0;
  double precip = 0.0;

  /// Throws DataError when value ranges are violated.
  void validate() const;
};

/// Slope of the saturation vapour pressure curve (kPa/degC) and the
/// psychrometric constant (kPa/degC).
struct PsychrometricState {
  double delta = 0.0;
  double gamma = 0.0;
};

struct Psychrometrics {
  double e_s = 0.0;
  PsychrometricState state;
};

/// Saturation vapour pressure e0(T) in kPa at air temperature T in degC:
/// e0(T) = 0.6108 exp(17.27 T / (T + 237.3)).
double saturation_vapor_pressure(double t_c);

/// Daily saturation vapour pressure as the mean of e0 at the temperature
/// extremes, curve slope delta evaluated at the mean temperature, and
/// gamma = 0.665e-3 * pressure.
Psychrometrics psychrometrics(double t_min, double t_max, double pressure_kpa);

struct Et0Result {
  double value = 0.0;  ///< mm/day
  bool clamped = false;  ///< true when a negative raw value was clamped to 0
};

/// Penman-Monteith reference evapotranspiration for a daily record:
///
///   et0 = (0.408 delta (rn - g) + gamma 900/(T+273) u2 (e_s - e_a))
///         / (delta + gamma (1 + 0.34 u2))
///
/// with T the daily mean temperature. Negative raw values (possible in
/// winter conditions) are clamped to zero and flagged.
Et0Result penman_monteith_et0(const DailyWeather& w,
                              const PsychrometricState& p);

/// Loads a daily weather CSV with header
/// date,t_min,t_max,u2,rn,g,e_a,precip. Derives t_mean and e_s, validates
/// every record, and requires strictly increasing dates.
std::vector<DailyWeather> load_weather_csv(
    const std::string& path, double pressure_kpa = kStandardPressureKpa);

}  // namespace agropinn::meteo
