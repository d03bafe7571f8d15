#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qnull {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<std::string> witness;
};

/// Ordered list of named pass/fail checks produced by a verification harness.
struct Report {
  std::string name;
  std::vector<Check> checks;

  Check& add(std::string check_name, bool pass, std::string detail = {}, std::optional<std::string> witness = {}) {
    checks.push_back(Check{std::move(check_name), pass, std::move(detail), std::move(witness)});
    return checks.back();
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.pass, c.detail, c.witness});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["report"] = name;
    j["pass"] = pass();
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.detail.empty()) e["detail"] = c.detail;
      if (c.witness) e["witness"] = *c.witness;
      arr.push_back(std::move(e));
    }
    return j;
  }

  std::string to_text() const {
    std::string out = name + ": " + (pass() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : checks) {
      out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.name;
      if (!c.detail.empty()) out += " -- " + c.detail;
      if (c.witness) out += " (witness: " + *c.witness + ")";
      out += "\n";
    }
    return out;
  }
};

}  // namespace qnull
