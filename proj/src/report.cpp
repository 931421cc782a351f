#include "qtt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qtt {

namespace {

const char* expect_name(Expect e) {
  switch (e) {
    case Expect::Below:
      return "below";
    case Expect::Above:
      return "above";
    case Expect::Info:
      return "info";
  }
  return "info";
}

std::string join(const std::string& prefix, const std::string& id) { return prefix.empty() ? id : prefix + " " + id; }

}  // namespace

nlohmann::json cplx_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

void Report::below(const std::string& id, double residual, double tol) {
  cases_.push_back({id, residual, tol, Expect::Below, std::isfinite(residual) && residual < tol});
}

void Report::above(const std::string& id, double residual, double threshold) {
  cases_.push_back({id, residual, threshold, Expect::Above, std::isfinite(residual) && residual > threshold});
}

void Report::info(const std::string& id, double residual) { cases_.push_back({id, residual, 0.0, Expect::Info, true}); }

void Report::below(const std::string& prefix, const std::vector<NamedResidual>& rs, double tol) {
  for (const auto& r : rs) below(join(prefix, r.name), r.residual, tol);
}

void Report::above(const std::string& prefix, const std::vector<NamedResidual>& rs, double threshold) {
  for (const auto& r : rs) above(join(prefix, r.name), r.residual, threshold);
}

void Report::error(const std::string& id, const std::string& what) {
  cases_.push_back({id, std::numeric_limits<double>::quiet_NaN(), 0.0, Expect::Below, false});
  errors_.push_back(id + ": " + what);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (ReportCase c : other.cases_) {
    c.id = join(prefix, c.id);
    cases_.push_back(c);
  }
  for (const auto& [k, v] : other.values_.items()) values_[join(prefix, k)] = v;
  for (const auto& e : other.errors_) errors_.push_back(join(prefix, e));
}

bool Report::passed() const {
  return std::all_of(cases_.begin(), cases_.end(), [](const ReportCase& c) { return c.pass; });
}

double Report::worst_below() const {
  double w = 0.0;
  for (const auto& c : cases_)
    if (c.expect == Expect::Below) w = std::isfinite(c.residual) ? std::max(w, c.residual) : INFINITY;
  return w;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(cases_.begin(), cases_.end(), [](const ReportCase& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
  std::vector<ReportCase> sorted = cases_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const ReportCase& a, const ReportCase& b) { return a.id < b.id; });
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : sorted) {
    nlohmann::json j{{"case", c.id}, {"expect", expect_name(c.expect)}, {"pass", c.pass}};
    j["residual"] = std::isfinite(c.residual) ? nlohmann::json(c.residual) : nlohmann::json(nullptr);
    if (c.expect != Expect::Info) j["tolerance"] = c.tolerance;
    cases.push_back(j);
  }
  nlohmann::json out{{"suite", suite_}, {"pass", passed()}, {"cases", cases}};
  if (!values_.empty()) out["values"] = values_;
  if (!errors_.empty()) out["errors"] = errors_;
  return out;
}

std::string Report::summary() const {
  std::string s;
  char buf[512];
  for (const auto& c : cases_) {
    if (c.expect == Expect::Info) continue;
    std::snprintf(buf, sizeof buf, "  %-4s %-60s %.3e %s %.1e\n", c.pass ? "ok" : "FAIL", c.id.c_str(), c.residual,
                  c.expect == Expect::Below ? "<" : ">", c.tolerance);
    s += buf;
  }
  for (const auto& e : errors_) s += "  error " + e + "\n";
  std::snprintf(buf, sizeof buf, "%s: %zu cases, %zu failed\n", suite_.c_str(), cases_.size(), failures());
  return s + buf;
}

}  // namespace qtt
