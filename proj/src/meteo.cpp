#include "agropinn/meteo.hpp"

#include <cmath>
#include <sstream>

namespace agropinn::meteo {

void DailyWeather::validate() const {
  std::ostringstream where;
  where << "weather " << date.iso() << ": ";
  if (!(t_min <= t_mean && t_mean <= t_max)) {
    throw DataError(where.str() + "temperatures must satisfy t_min <= t_mean <= t_max");
  }
  if (u2 < 0.0) throw DataError(where.str() + "wind speed u2 must be >= 0");
  if (e_s < 0.0) throw DataError(where.str() + "e_s must be >= 0");
  if (e_a < 0.0 || e_a > e_s) {
    throw DataError(where.str() + "actual vapour pressure must satisfy 0 <= e_a <= e_s");
  }
  if (precip < 0.0) throw DataError(where.str() + "precipitation must be >= 0");
}

double saturation_vapor_pressure(double t_c) {
  return 0.6108 * std::exp(17.27 * t_c / (t_c + 237.3));
}

Psychrometrics psychrometrics(double t_min, double t_max,
                              double pressure_kpa) {
  if (t_max < t_min) {
    throw DataError("psychrometrics: t_max < t_min");
  }
  if (pressure_kpa <= 0.0) {
    throw DataError("psychrometrics: pressure must be positive");
  }
  Psychrometrics out;
  out.e_s = 0.5 * (saturation_vapor_pressure(t_min) +
                   saturation_vapor_pressure(t_max));
  const double t_mean = 0.5 * (t_min + t_max);
  const double e0_mean = saturation_vapor_pressure(t_mean);
  const double denom = t_mean + 237.3;
  out.state.delta = 4098.0 * e0_mean / (denom * denom);
  out.state.gamma = 0.665e-3 * pressure_kpa;
  return out;
}

Et0Result penman_monteith_et0(const DailyWeather& w,
                              const PsychrometricState& p) {
  w.validate();
  if (!(p.delta > 0.0) || !(p.gamma > 0.0)) {
    throw DataError("penman_monteith_et0: delta and gamma must be positive");
  }
  const double den = p.delta + p.gamma * (1.0 + 0.34 * w.u2);
  if (!(den > 0.0)) {
    throw NumericError("penman_monteith_et0: non-positive denominator, inputs corrupt");
  }
  const double radiation_term = 0.408 * p.delta * (w.rn - w.g);
  const double wind_term =
      p.gamma * (900.0 / (w.t_mean + 273.0)) * w.u2 * (w.e_s - w.e_a);
  const double raw = (radiation_term + wind_term) / den;
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

std::vector<DailyWeather> load_weather_csv(const std::string& path,
                                           double pressure_kpa) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty weather file");
  const std::string expected = "date,t_min,t_max,u2,rn,g,e_a,precip";
  if (trim(line) != expected) {
    throw DataError(path + ": expected header '" + expected + "'");
  }
  std::vector<DailyWeather> days;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    const std::string where = path + ":" + std::to_string(lineno);
    if (cells.size() != 8) {
      throw DataError(where + ": expected 8 columns, got " +
                      std::to_string(cells.size()));
    }
    DailyWeather w;
    w.date = Date::from_iso(trim(cells[0]));
    w.t_min = parse_double(cells[1], where + " t_min");
    w.t_max = parse_double(cells[2], where + " t_max");
    w.u2 = parse_double(cells[3], where + " u2");
    w.rn = parse_double(cells[4], where + " rn");
    w.g = parse_double(cells[5], where + " g");
    w.e_a = parse_double(cells[6], where + " e_a");
    w.precip = parse_double(cells[7], where + " precip");
    w.t_mean = 0.5 * (w.t_min + w.t_max);
    w.e_s = psychrometrics(w.t_min, w.t_max, pressure_kpa).e_s;
    w.validate();
    if (!days.empty() && !(days.back().date < w.date)) {
      throw DataError(where + ": dates must be strictly increasing");
    }
    days.push_back(w);
  }
  if (days.empty()) throw DataError(path + ": no weather records");
  return days;
}

}  // namespace agropinn::meteo
