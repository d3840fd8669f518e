#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3lat/cone.hpp"

namespace k3lat::cli {

inline constexpr const char* kReportSchema = "k3lat-report/1";

enum class Status { Pass, Fail, Flagged };

const char* to_string(Status status);
using k3lat::to_string;

// One evaluated assertion or replay check.
struct Outcome {
  std::string id;    // "line 12" for scenarios, "<selector>/<case>" for replay checks
  std::string text;  // the assertion as written, or a description of the check
  Status status = Status::Fail;
  std::string expected;
  std::string actual;
  nlohmann::json certificate;  // null when the operation carries none
  std::string certificate_summary;
  std::vector<std::string> notes;
  double wall_time_ms = 0;
};

struct Report {
  std::string source;  // scenario path or "replay:<selector>"
  std::optional<Integer> max_degree;
  bool timing = true;  // when false, wall times are omitted from the output
  std::vector<Outcome> outcomes;

  std::size_t count(Status status) const;
  bool all_pass() const { return count(Status::Fail) == 0; }
};

nlohmann::json class_to_json(const DivisorClass& d);
nlohmann::json certificate_to_json(const Certificate& certificate);

nlohmann::json to_json(const Report& report);
// Inverse of to_json; throws std::runtime_error on schema violations.
Report report_from_json(const nlohmann::json& j);

void emit_text(const Report& report, std::ostream& os);
void emit_json(const Report& report, std::ostream& os);

}  // namespace k3lat::cli
