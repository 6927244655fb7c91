#include "dml/shell/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace dml {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::MismatchSuspectedTypo: return "MISMATCH-SUSPECTED-TYPO";
    case Verdict::Unwitnessed: return "UNWITNESSED";
    case Verdict::Info: return "INFO";
  }
  return "?";
}

bool is_failure(Verdict v) { return v == Verdict::Fail || v == Verdict::Mismatch; }

void Report::input(const std::string& key, const std::string& value) { inputs_.emplace_back(key, value); }

void Report::add(Finding f) { findings_.push_back(std::move(f)); }

void Report::info(const std::string& section, const std::string& label, const std::string& value) {
  add({section, label, value, "", Verdict::Info});
}

void Report::check(const std::string& section, const std::string& label, bool pass, const std::string& detail) {
  add({section, label, detail, "", pass ? Verdict::Pass : Verdict::Fail});
}

void Report::compare(const std::string& section, const std::string& label, const std::string& computed,
                     const std::string& claimed) {
  add({section, label, computed, claimed, computed == claimed ? Verdict::Match : Verdict::Mismatch});
}

void Report::merge(const Report& other) {
  for (const auto& f : other.findings_) findings_.push_back(f);
}

bool Report::passed() const {
  return std::none_of(findings_.begin(), findings_.end(), [](const Finding& f) { return is_failure(f.verdict); });
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command_ << "\n";
  for (const auto& [k, v] : inputs_) os << "  " << k << ": " << v << "\n";
  std::string section;
  for (const auto& f : findings_) {
    if (f.section != section) {
      section = f.section;
      os << "[" << section << "]\n";
    }
    os << "  " << f.label;
    if (!f.computed.empty()) os << " = " << f.computed;
    if (!f.claimed.empty()) os << " (claimed " << f.claimed << ")";
    if (f.verdict != Verdict::Info) os << "  " << to_string(f.verdict);
    os << "\n";
  }
  os << (passed() ? "result: PASS" : "result: FAIL") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs_) j["inputs"][k] = v;
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : findings_) {
    nlohmann::ordered_json x;
    x["section"] = f.section;
    x["label"] = f.label;
    x["computed"] = f.computed;
    if (!f.claimed.empty()) x["claimed"] = f.claimed;
    x["verdict"] = to_string(f.verdict);
    j["findings"].push_back(std::move(x));
  }
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

}  // namespace dml
