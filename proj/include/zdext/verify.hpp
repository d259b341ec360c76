#pragma once

// The acceptance criteria as runnable checks over the bundled worlds and
// map suite. Reports carry counts and the first failure, never timings, so
// equal seeds give byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

namespace zdext {

enum class Level { smoke, full };

struct VerifyOptions {
  Level level = Level::full;
  std::uint64_t seed = 7;
  int jobs = 1;  ///< criteria run concurrently when > 1
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  long checked = 0;
  std::string detail;    ///< what was covered, or the first failure
  double seconds = 0.0;  ///< wall time, left out of reports
};

constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, const VerifyOptions& opt);
/// `ids` empty means all criteria; results come back sorted by id.
std::vector<CriterionResult> run_verify(const VerifyOptions& opt, std::vector<int> ids = {});
std::string verify_report(const std::vector<CriterionResult>& rs, const VerifyOptions& opt);

/// Fixture files compiled into the library, as (file name, text).
const std::vector<std::pair<std::string, std::string>>& bundled_fixtures();

}  // namespace zdext
