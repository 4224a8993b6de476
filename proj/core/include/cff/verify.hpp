#pragma once

// Verification suites: each compares a closed form or construction against
// an oracle over a range and yields one ReportLine per checked input.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cff/closed_forms.hpp"
#include "cff/hypercube.hpp"
#include "cff/limits.hpp"

namespace cff {

struct ReportLine {
  std::string suite;
  std::string input;
  std::string expected;
  std::string got;
  bool ok = false;
  std::uint64_t bits = 0;
  std::uint64_t micros = 0;
  /// Reported but not a failure: conjecture mismatches and points outside a
  /// formula's validity window. Not serialized.
  std::string advisory;
};

/// One JSON object with exactly suite, input, expected, got, ok, bits, micros.
std::string to_json(const ReportLine& line);

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// Parses "a..b" (or a single "a"). Throws DomainError.
Range parse_range(std::string_view text);

struct VerifyOptions {
  std::optional<Range> range;
  unsigned jobs = 1;
  Limits limits{};
  /// chi/omega/factor backend; unset means FullTerm for chi and omega, Native for factor.
  std::optional<Backend> backend;
};

struct SuiteResult {
  std::string suite;
  Range range;
  std::vector<ReportLine> lines;
  std::uint64_t failures = 0;    // not ok and not advisory
  std::uint64_t advisories = 0;  // not ok but advisory
  bool ok() const noexcept { return failures == 0; }
};

const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);
/// Throws DomainError for an unknown suite.
Range default_range(std::string_view suite);

/// Lines come back in ascending input order whatever the job count.
/// DomainError for an unknown suite; CapacityError propagates; every other
/// library error on an input becomes a failing line.
SuiteResult run_suite(std::string_view suite, const VerifyOptions& options = {});

/// A validated random 1D or 2D spec with t^k <= 10^5 and at least one zero,
/// built as the square of a random exponential polynomial.
HypercubeSpec random_spec(std::uint64_t seed);

}  // namespace cff
