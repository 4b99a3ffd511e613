#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace propalg {

/// Outcome of one verification run. Checks that pass leave `failures`
/// empty; the first few violations are kept as counterexamples.
struct CheckReport {
  static constexpr std::size_t kMaxRecordedFailures = 8;

  std::string id;
  unsigned n = 0;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::chrono::microseconds elapsed{0};

  bool passed() const noexcept { return failure_count == 0; }

  /// Counts one check; records `counterexample` when `ok` is false.
  void expect(bool ok, const std::string& counterexample);
  /// Same, but builds the message only on failure.
  template <typename Fn>
  void expect_lazy(bool ok, Fn&& describe) {
    ++checks;
    if (!ok) record_failure(describe());
  }
  void note(std::string line) { notes.push_back(std::move(line)); }

  std::optional<std::string> counterexample() const {
    if (failures.empty()) return std::nullopt;
    return failures.front();
  }

  /// Line-oriented text. Elapsed time is included only when requested so
  /// that default output is reproducible byte for byte.
  std::string to_text(bool with_timing = false) const;

 private:
  void record_failure(std::string message);
};

/// Runs `body` against a fresh report and records the elapsed time.
template <typename Fn>
CheckReport timed_check(std::string id, unsigned n, Fn&& body) {
  CheckReport report;
  report.id = std::move(id);
  report.n = n;
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace propalg
