// Verification result record. Timing is carried for operator feedback but is
// never serialized into machine outputs, which must be byte-stable.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace arcspan {

struct Report {
  std::string id;
  std::string status;  // "pass" | "fail" | "reported"
  std::map<std::string, long long> counts;
  std::vector<std::string> witnesses;
  double wall_ms = 0.0;

  bool passed() const { return status != "fail"; }
  void note_failure(const std::string& w, size_t cap = 5) {
    status = "fail";
    if (witnesses.size() < cap) witnesses.push_back(w);
  }
};

}  // namespace arcspan
