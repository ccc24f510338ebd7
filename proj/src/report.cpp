#include "crig/report.hpp"

#include <algorithm>

namespace crig {
namespace {

const char* source_name(Source s) { return s == Source::Computed ? "computed" : "configured"; }

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw InputError("report " + path + ": " + what);
}

void validate_value(const Json& v, const std::string& path) {
  const std::string cert = v["cert"].is_string() ? v["cert"].get<std::string>() : "";
  require(v.contains("source") && v["source"].is_string() &&
              (v["source"] == "computed" || v["source"] == "configured"),
          path, "value needs source computed or configured");
  std::vector<std::string> allowed{"cert", "source"};
  if (cert == "exact") {
    // Configured reals are exact as given; computed exact values are rationals.
    const bool configured_real = v.contains("value") && v["value"].is_number() && v["source"] == "configured";
    require(configured_real || (v.contains("value") && v["value"].is_string()), path,
            "exact value must be a rational string");
    if (!configured_real) parse_rational(v["value"].get<std::string>());
    allowed.push_back("value");
  } else if (cert == "interval") {
    require(v.contains("lo") && v["lo"].is_number() && v.contains("hi") && v["hi"].is_number(), path,
            "interval needs numeric lo and hi");
    require(v["lo"].get<double>() <= v["hi"].get<double>(), path, "interval has lo > hi");
    allowed.insert(allowed.end(), {"lo", "hi"});
  } else if (cert == "sampled") {
    require(v.contains("value") && v["value"].is_number(), path, "sampled value must be a number");
    require(v.contains("samples") && v["samples"].is_number_unsigned(), path, "sampled value needs a sample count");
    allowed.insert(allowed.end(), {"value", "samples"});
  } else {
    require(false, path, "unknown certification kind \"" + cert + "\"");
  }
  for (const auto& [k, _] : v.items())
    require(std::find(allowed.begin(), allowed.end(), k) != allowed.end(), path, "unexpected field \"" + k + "\"");
}

void validate_tree(const Json& j, const std::string& path) {
  if (j.is_number()) require(false, path, "bare number outside a certified value");
  if (j.is_object()) {
    if (j.contains("cert")) return validate_value(j, path);
    for (const auto& [k, v] : j.items()) validate_tree(v, path + "." + k);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) validate_tree(j[i], path + "[" + std::to_string(i) + "]");
  }
}

}  // namespace

namespace value {

Json exact(const Rational& r, Source s) { return {{"cert", "exact"}, {"value", to_string(r)}, {"source", source_name(s)}}; }

Json exact(std::int64_t k, Source s) { return exact(Rational(k), s); }

Json interval(const CertifiedInterval& v, Source s) {
  if (v.exact && v.rational) return exact(*v.rational, s);
  return {{"cert", "interval"}, {"lo", v.lo}, {"hi", v.hi}, {"source", source_name(s)}};
}

Json sampled(double v, std::uint64_t samples, Source s) {
  return {{"cert", "sampled"}, {"value", v}, {"samples", samples}, {"source", source_name(s)}};
}

Json configured(double v) { return {{"cert", "exact"}, {"value", v}, {"source", "configured"}}; }

}  // namespace value

void Report::check(std::string name, bool pass, std::string detail) {
  checks_.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"schema", kReportSchema}, {"command", command_}, {"args", args_},
          {"checks", checks},        {"results", results_}, {"pass", pass()}};
}

void validate_report(const Json& r) {
  require(r.is_object(), "", "top level must be an object");
  require(r.contains("schema") && r["schema"] == kReportSchema, ".schema", "expected \"1\"");
  require(r.contains("command") && r["command"].is_string(), ".command", "missing");
  require(r.contains("args") && r["args"].is_object(), ".args", "missing");
  require(r.contains("results") && r["results"].is_object(), ".results", "missing");
  require(r.contains("pass") && r["pass"].is_boolean(), ".pass", "missing");
  require(r.contains("checks") && r["checks"].is_array(), ".checks", "missing");
  bool all = true;
  for (std::size_t i = 0; i < r["checks"].size(); ++i) {
    const Json& c = r["checks"][i];
    const std::string path = ".checks[" + std::to_string(i) + "]";
    require(c.is_object() && c.contains("name") && c["name"].is_string() && c.contains("pass") &&
                c["pass"].is_boolean() && c.contains("detail") && c["detail"].is_string(),
            path, "needs name, pass and detail");
    all = all && c["pass"].get<bool>();
  }
  require(r["pass"].get<bool>() == all, ".pass", "disagrees with the checks");
  for (const auto& [k, _] : r.items())
    require(k == "schema" || k == "command" || k == "args" || k == "results" || k == "pass" || k == "checks", "." + k,
            "unexpected top-level field");
  validate_tree(r["args"], ".args");
  validate_tree(r["results"], ".results");
}

}  // namespace crig
