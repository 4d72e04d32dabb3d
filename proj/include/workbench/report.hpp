#pragma once

// Structured command reports. Checks are emitted sorted by name so that the
// order in which parallel workers finish never reaches the output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace workbench {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct CheckRecord {
  std::string name;
  bool pass = false;
  nlohmann::json witness;  // inputs that reproduce the check, plus what was observed
};

class Report {
 public:
  Report() = default;
  Report(std::string command, nlohmann::json parameters)
      : command_(std::move(command)), parameters_(std::move(parameters)) {}

  const std::string& command() const { return command_; }
  const nlohmann::json& parameters() const { return parameters_; }
  nlohmann::json& parameters() { return parameters_; }

  void add(std::string name, bool pass, nlohmann::json witness = nlohmann::json::object());
  void append(const Report& other);
  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::size_t failures() const;
  bool pass() const { return failures() == 0; }

  /// Free-form command output: `results` in JSON, `lines` in text mode.
  nlohmann::json& results() { return results_; }
  const nlohmann::json& results() const { return results_; }
  void line(std::string text) { lines_.push_back(std::move(text)); }
  const std::vector<std::string>& lines() const { return lines_; }

  void set_elapsed_ms(std::int64_t ms) { elapsed_ms_ = ms; }

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  nlohmann::json parameters_ = nlohmann::json::object();
  std::vector<CheckRecord> checks_;
  nlohmann::json results_ = nlohmann::json::object();
  std::vector<std::string> lines_;
  std::int64_t elapsed_ms_ = 0;
};

/// Drops the timing block; what remains is a function of argv alone.
nlohmann::json normalized(nlohmann::json report);

}  // namespace workbench
