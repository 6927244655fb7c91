#pragma once

#include <string>
#include <vector>

namespace dml {

enum class Verdict {
  Pass,
  Fail,
  Match,
  Mismatch,
  MismatchSuspectedTypo,  ///< differs from a printed value that is most likely a misprint
  Unwitnessed,
  Info,
};

std::string to_string(Verdict v);
/// Fail and Mismatch make a report fail; every other verdict is neutral or passing.
bool is_failure(Verdict v);

struct Finding {
  std::string section;
  std::string label;
  std::string computed;
  std::string claimed;  ///< empty when there is no claim to compare with
  Verdict verdict = Verdict::Info;
};

/// Result tree of one command: inputs and findings, serialized with a fixed key order.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& value);
  void add(Finding f);
  void info(const std::string& section, const std::string& label, const std::string& value);
  void check(const std::string& section, const std::string& label, bool pass, const std::string& detail = "");
  /// MATCH when computed == claimed, MISMATCH otherwise.
  void compare(const std::string& section, const std::string& label, const std::string& computed,
               const std::string& claimed);
  void merge(const Report& other);

  bool passed() const;
  const std::string& command() const noexcept { return command_; }
  const std::vector<Finding>& findings() const noexcept { return findings_; }

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<Finding> findings_;
};

}  // namespace dml
