#pragma once

#include <string>
#include <vector>

namespace fq {

enum class Status { Pass, Fail, Undecidable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Undecidable: return "undecidable";
  }
  return "?";
}

/// One verified (or refuted) law, with a witness when it fails.
struct CheckResult {
  std::string check;
  Status status = Status::Pass;
  std::string witness;   // object/arrow ids involved in a failure
  std::string anchor;    // stable identifier of the statement being checked
};

struct Report {
  std::string subject;
  std::vector<CheckResult> items;

  bool ok() const {
    for (auto& c : items)
      if (c.status == Status::Fail) return false;
    return true;
  }
  void pass(std::string check, std::string anchor = "") {
    items.push_back({std::move(check), Status::Pass, "", std::move(anchor)});
  }
  void fail(std::string check, std::string witness, std::string anchor = "") {
    items.push_back({std::move(check), Status::Fail, std::move(witness), std::move(anchor)});
  }
  void add(std::string check, bool okv, std::string witness, std::string anchor = "") {
    if (okv)
      pass(std::move(check), std::move(anchor));
    else
      fail(std::move(check), std::move(witness), std::move(anchor));
  }
  void merge(const Report& r) {
    for (auto& c : r.items) items.push_back(c);
  }
  std::string first_failure() const {
    for (auto& c : items)
      if (c.status == Status::Fail) return c.check + " [" + c.witness + "]";
    return "";
  }
};

}  // namespace fq
