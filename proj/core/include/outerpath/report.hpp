#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "outerpath/constructions.hpp"
#include "outerpath/dual.hpp"
#include "outerpath/path_counting.hpp"
#include "outerpath/search.hpp"

namespace outerpath {

inline constexpr std::string_view kSchema = "outerpath/1";

struct CheckResult {
  std::string name;
  std::string claim;
  bool passed = false;
  std::string observed;
  std::string expected;
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  std::vector<std::string> only;  // empty: every check
  int jobs = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// Check names in execution order.
std::vector<std::string> verify_check_names();

/// Maps a user-supplied name or alias to its check name; throws InvalidArgument
/// for unknown names.
std::string resolve_check_name(std::string_view name);

VerifyReport run_verify(const VerifyOptions& options);

// Serialization. Field order is fixed; elapsed times appear only with timing.
std::string to_json(const VerifyReport& report, bool timing);
std::string to_json(const std::vector<SearchReport>& reports, bool timing, bool witnesses = true);
std::string to_json(const PathCount& count, int n);
std::string to_json(const Construction& c, const ConstructionSpec& spec);
std::string to_json(const DualTree& dual);

std::string search_csv_header();
std::string to_csv_row(const SearchReport& report);

}  // namespace outerpath
