#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace groupdet {

enum class CheckMode { kSymbolic, kPit };

std::string to_string(CheckMode mode);
CheckMode parse_mode(const std::string& text);

// Outcome of one theorem or lemma check. For exact checks `residual` is 0
// on success and 1 on failure; for randomized checks it is the largest
// relative residual over all evaluation points.
struct VerificationReport {
  std::string theorem;
  std::string group;
  std::string subgroup;
  CheckMode mode = CheckMode::kSymbolic;
  int n_points = 0;
  double tolerance = 0.0;
  double residual = 0.0;
  std::vector<double> residuals;
  bool passed = false;
  std::uint64_t seed = 0;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

// Wall-clock timing is excluded unless requested so that identical runs
// serialize to identical bytes.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = false);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

// |a − b| / max(|a|, |b|, 1)
template <class T>
double relative_residual(const T& a, const T& b) {
  using std::abs;
  const double scale = std::max({static_cast<double>(abs(a)), static_cast<double>(abs(b)), 1.0});
  return static_cast<double>(abs(a - b)) / scale;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace groupdet
