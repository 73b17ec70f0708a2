#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hsg {

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

/// Outcome of one verification: passed + failures.size() == instances.
struct Report {
  std::string check_name;
  std::int64_t instances = 0;
  std::int64_t passed = 0;
  std::int64_t skipped = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> notes;

  void record(bool ok, std::string input, std::string expected, std::string got) {
    ++instances;
    if (ok)
      ++passed;
    else
      failures.push_back(Failure{std::move(input), std::move(expected), std::move(got)});
  }
  void expect_equal(std::int64_t expected, std::int64_t got, std::string input) {
    record(expected == got, std::move(input), std::to_string(expected), std::to_string(got));
  }
  bool ok() const noexcept { return failures.empty(); }
  void merge(const Report& other) {
    instances += other.instances;
    passed += other.passed;
    skipped += other.skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace hsg
