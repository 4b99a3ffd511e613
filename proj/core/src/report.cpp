#include "propalg/report.hpp"

namespace propalg {

void CheckReport::expect(bool ok, const std::string& counterexample) {
  ++checks;
  if (!ok) record_failure(counterexample);
}

void CheckReport::record_failure(std::string message) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(message));
}

std::string CheckReport::to_text(bool with_timing) const {
  std::string out = (passed() ? "PASS " : "FAIL ") + id + " n=" + std::to_string(n) +
                    " checks=" + std::to_string(checks);
  if (!passed()) out += " failures=" + std::to_string(failure_count);
  if (with_timing) out += " elapsed_us=" + std::to_string(elapsed.count());
  out += "\n";
  for (const auto& line : notes) out += "  note: " + line + "\n";
  for (const auto& line : failures) out += "  counterexample: " + line + "\n";
  return out;
}

}  // namespace propalg
