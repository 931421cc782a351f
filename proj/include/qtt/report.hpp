#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qtt/common.hpp"

namespace qtt {

// below: residual must be < tolerance; above: a negative control, residual must be > tolerance;
// info: reported only.
enum class Expect { Below, Above, Info };

struct ReportCase {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  Expect expect = Expect::Below;
  bool pass = true;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void below(const std::string& id, double residual, double tol);
  void above(const std::string& id, double residual, double threshold);
  void info(const std::string& id, double residual);
  void below(const std::string& prefix, const std::vector<NamedResidual>& rs, double tol);
  void above(const std::string& prefix, const std::vector<NamedResidual>& rs, double threshold);
  void value(const std::string& key, const nlohmann::json& v) { values_[key] = v; }
  // Records a thrown error as a failed case.
  void error(const std::string& id, const std::string& what);
  void merge(const Report& other, const std::string& prefix = "");

  const std::string& suite() const { return suite_; }
  const std::vector<ReportCase>& cases() const { return cases_; }
  bool passed() const;
  double worst_below() const;
  std::size_t failures() const;

  // Cases sorted by id; values keyed by name.
  nlohmann::json to_json() const;
  std::string summary() const;

 private:
  std::string suite_;
  std::vector<ReportCase> cases_;
  nlohmann::json values_ = nlohmann::json::object();
  std::vector<std::string> errors_;
};

nlohmann::json cplx_json(cplx z);

}  // namespace qtt
