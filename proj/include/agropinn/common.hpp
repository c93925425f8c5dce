#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace agropinn {

inline constexpr const char* kVersion = "0.1.0";

/// Floor applied to crop water demand before it is used as a divisor, in mm.
inline constexpr double kDemandFloorMm = 1e-6;

/// Standard atmospheric pressure at sea level, kPa.
inline constexpr double kStandardPressureKpa = 101.3;

/// Invalid configuration: bad option values, malformed config files,
/// inconsistent model/training settings. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent input data: malformed files, violated value
/// ranges, shape mismatches. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure during computation: non-finite losses, impossible
/// denominators, diverged optimisation. CLI exit code 4.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Calendar date. Serial conversions use the proleptic Gregorian calendar
/// with day 0 = 1970-01-01.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  static Date from_iso(const std::string& text);
  static Date from_serial(std::int64_t days);
  std::int64_t serial() const;
  std::string iso() const;
  bool valid() const;

  friend bool operator==(const Date& a, const Date& b) {
    return a.year == b.year && a.month == b.month && a.day == b.day;
  }
  friend bool operator!=(const Date& a, const Date& b) { return !(a == b); }
  friend bool operator<(const Date& a, const Date& b) {
    return a.serial() < b.serial();
  }
  friend bool operator<=(const Date& a, const Date& b) {
    return a.serial() <= b.serial();
  }
};

/// Deterministic random stream with a pinned algorithm so that generated
/// values are reproducible across platforms and standard library versions.
/// Core generator is splitmix64; uniform doubles take the top 53 bits and
/// normal deviates use Box-Muller with a cached spare.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Normal deviate via Box-Muller.
  double normal(double mean = 0.0, double sd = 1.0);
  /// Derived stream that is independent of this one for distinct keys.
  Rng fork(std::uint64_t key) const;
  /// Deterministic Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(
          uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Flat key=value config file: one pair per line, '#' starts a comment,
/// blank lines ignored. Keys may not repeat.
std::map<std::string, std::string> parse_kv_file(const std::string& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text,
                                                 const std::string& origin);

double kv_get_double(const std::map<std::string, std::string>& kv,
                     const std::string& key, double fallback);
int kv_get_int(const std::map<std::string, std::string>& kv,
               const std::string& key, int fallback);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

/// Parses a double, rejecting trailing garbage and non-finite values.
double parse_double(const std::string& text, const std::string& context);
std::int64_t parse_int(const std::string& text, const std::string& context);

/// Shortest decimal form that round-trips a double exactly.
std::string format_double(double v);

/// Reads a whole file; throws DataError when it cannot be opened.
std::string read_text_file(const std::string& path);
/// Writes via a temporary file plus rename so readers never observe a
/// partially written file.
void write_text_file_atomic(const std::string& path,
                            const std::string& content);

}  // namespace agropinn
