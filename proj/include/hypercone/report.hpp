#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypercone/json_io.hpp"

namespace hypercone {

// One verdict row of a suite run. Ids are stable machine names of the module
// invariant exercised, so reports diff cleanly across runs.
struct ReportRow {
  std::string id;
  bool pass = false;
  std::string detail;
  long long cases = 0;
};

struct SuiteReport {
  int schema = 1;
  uint64_t seed = 0;
  std::vector<ReportRow> rows;

  void add(const std::string& id, bool pass, const std::string& detail = "", long long cases = 0) {
    rows.push_back({id, pass, detail, cases});
  }
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  json to_json() const;
  std::string to_csv() const;
  std::string to_human() const;
  std::string render(const std::string& format) const;  // json | csv | human
};

// Deterministic parallel map over case indices: worker count from the
// HYPERCONE_THREADS variable (default: hardware), results merged by index.
void parallel_for(long long count, const std::function<void(long long)>& body);

}  // namespace hypercone
