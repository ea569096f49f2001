#include "hypercone/report.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace hypercone {

json SuiteReport::to_json() const {
  json rows_j = json::array();
  for (const auto& r : rows)
    rows_j.push_back(
        {{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}, {"cases", r.cases}});
  return json{{"schema", schema}, {"seed", seed}, {"pass", all_pass()}, {"rows", rows_j}};
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "id,pass,cases,detail\n";
  for (const auto& r : rows) {
    std::string d = r.detail;
    for (char& ch : d)
      if (ch == ',' || ch == '\n') ch = ';';
    os << r.id << "," << (r.pass ? "pass" : "FAIL") << "," << r.cases << "," << d << "\n";
  }
  return os.str();
}

std::string SuiteReport::to_human() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.pass ? "[ ok ] " : "[FAIL] ") << r.id;
    if (r.cases) os << "  (" << r.cases << " cases)";
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

std::string SuiteReport::render(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return to_csv();
  return to_human();
}

void parallel_for(long long count, const std::function<void(long long)>& body) {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HYPERCONE_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) workers = (unsigned)v;
  }
  if (workers <= 1 || count < 64) {
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace hypercone
