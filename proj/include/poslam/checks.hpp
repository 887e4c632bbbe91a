#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace poslam {

// Zero fields fall back to each suite's own default.
struct CheckOptions {
  std::size_t size = 0;   // enumeration bound in grammar nodes
  std::uint64_t seed = 0;
  std::size_t count = 0;  // number of random instances
  unsigned threads = 0;   // 0: hardware concurrency
};

struct CheckReport {
  std::string property;
  std::string corpus;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t excluded = 0;  // undecided instances, reported separately
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;  // informative, never a failure

  bool passed() const { return violations == 0; }
  void fail(std::string witness);
  void merge(CheckReport&& other);
};

const std::vector<std::string>& suite_names();

// Runs one named suite ("all" runs every suite). Throws PreconditionError for
// unknown names.
std::vector<CheckReport> run_suite(std::string_view name, const CheckOptions& opts);

}  // namespace poslam
