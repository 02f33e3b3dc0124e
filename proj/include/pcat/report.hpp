#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pcat {

struct Violation {
  std::string what;
  std::vector<std::string> witness;
};

/// One named law or axiom, checked over some number of instances.
struct Check {
  static constexpr std::size_t kMaxRecorded = 8;

  std::string name;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<Violation> failures{};  // the first kMaxRecorded failures
  std::vector<std::string> notes{};  // coverage remarks and positive evidence

  bool passed() const { return failure_count == 0; }

  void fail(std::string what, std::vector<std::string> witness = {}) {
    ++failure_count;
    if (failures.size() < kMaxRecorded) failures.push_back({std::move(what), std::move(witness)});
  }

  /// Counts one instance and records a failure when `ok` is false.
  template <class WitnessFn>
  void expect(bool ok, WitnessFn&& describe) {
    ++instances;
    if (!ok) {
      auto [what, witness] = describe();
      fail(std::move(what), std::move(witness));
    }
  }
};

/// Result of a validator or law checker. Validators never throw on invalid
/// input; they return a report listing every violated rule with witnesses.
struct Report {
  std::string subject;
  std::deque<Check> checks{};  // deque: references from check() stay valid

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }

  Check& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back(Check{name});
    return checks.back();
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed();
  }

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed()) out.push_back(c.name);
    return out;
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) {
      Check copy = c;
      copy.name = prefix + c.name;
      checks.push_back(std::move(copy));
    }
  }
};

using ValidationReport = Report;
using LawReport = Report;

inline nlohmann::json to_json(const Check& c) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : c.failures) failures.push_back({{"what", f.what}, {"witness", f.witness}});
  nlohmann::json j{{"name", c.name},
                   {"passed", c.passed()},
                   {"instances", c.instances},
                   {"failure_count", c.failure_count},
                   {"failures", failures}};
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"subject", r.subject}, {"ok", r.ok()}, {"checks", checks}};
}

inline std::string summarize(const Report& r) {
  std::string out = r.subject + ": " + (r.ok() ? "ok" : "FAILED") + "\n";
  for (const auto& c : r.checks) {
    out += "  " + std::string(c.passed() ? "pass " : "FAIL ") + c.name + " (" +
           std::to_string(c.instances) + " instances";
    if (!c.passed()) out += ", " + std::to_string(c.failure_count) + " failures";
    out += ")\n";
    for (const auto& n : c.notes) out += "       note: " + n + "\n";
    for (const auto& f : c.failures) {
      out += "       " + f.what;
      if (!f.witness.empty()) {
        out += " [";
        for (std::size_t i = 0; i < f.witness.size(); ++i) out += (i ? "; " : "") + f.witness[i];
        out += "]";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace pcat
