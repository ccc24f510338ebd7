#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crig/error.hpp"
#include "crig/json_io.hpp"
#include "crig/rational.hpp"
#include "crig/rotation.hpp"

namespace crig {

inline constexpr const char* kReportSchema = "1";

/// Certified numeric values. Every number in a report sits inside one of
/// these objects, tagged with how it was obtained and where it came from.
enum class Source { Computed, Configured };

namespace value {
Json exact(const Rational& r, Source s = Source::Computed);
Json exact(std::int64_t k, Source s = Source::Computed);
/// Exact when the interval is exact, else its bounds.
Json interval(const CertifiedInterval& v, Source s = Source::Computed);
/// A floating-point value measured over `samples` sample points.
Json sampled(double v, std::uint64_t samples, Source s = Source::Computed);
/// A configured floating-point parameter.
Json configured(double v);
}  // namespace value

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// Records an input parameter.
  void echo(const std::string& key, Json v) { args_[key] = std::move(v); }
  void check(std::string name, bool pass, std::string detail = {});
  void check(const CheckResult& c) { checks_.push_back(c); }
  /// Results are keyed; nested objects are allowed.
  Json& result(const std::string& key) { return results_[key]; }

  bool pass() const;
  ExitCode exit_code() const { return pass() ? ExitCode::Pass : ExitCode::CheckFailure; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  Json to_json() const;

 private:
  std::string command_;
  Json args_ = Json::object();
  std::vector<CheckResult> checks_;
  Json results_ = Json::object();
};

/// Throws InputError describing the first violation: wrong schema version,
/// missing or mistyped top-level fields, an overall verdict that disagrees
/// with the checks, or a number outside a certified value object.
void validate_report(const Json& report);

}  // namespace crig
