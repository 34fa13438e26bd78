#pragma once

// Batch front end: representation spec files, the four commands and their
// reports. Reports are plain JSON values so that they serialize identically
// on every run.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "coulomb/error.hpp"
#include "coulomb/lie.hpp"

namespace coulomb::cli {

using nlohmann::json;

inline constexpr const char* kSpecSchema = "coulomb-kit/rep-spec/1";
inline constexpr const char* kReportSchema = "coulomb-kit/report/1";

enum ExitCode : int { kSuccess = 0, kMathFail = 1, kInvalidInput = 2, kNonConvergent = 3 };

/// Parse error carrying a JSON-pointer location.
class SpecError : public ValidationError {
 public:
  SpecError(std::string location, const std::string& message)
      : ValidationError("at " + (location.empty() ? std::string("/") : location) + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct RepSpec {
  lie::RootDatum datum;
  lie::WeightRep rep;
  json source;
};

RepSpec parse_rep_spec(const json& document);
/// Reads and parses a file; JSON syntax errors become SpecError with the byte
/// offset.
RepSpec load_rep_spec(const std::filesystem::path& path);

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> warnings;
  int exit_status = kSuccess;

  json to_json() const;
  static Report from_json(const json& j);
  /// Human-readable rendering.
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

Report cmd_rep_info(const RepSpec& spec);
Report cmd_anomaly(const RepSpec& spec);

struct HilbertFlags {
  std::int64_t order = 10;
  std::int64_t shell_cap = 64;
  unsigned threads = 1;
};
Report cmd_hilbert(const RepSpec& spec, const HilbertFlags& flags);

Report cmd_kostant_verify(int n, std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// Report for input that could not be parsed (exit status 2).
Report invalid_input_report(const std::string& command, const std::string& message);

}  // namespace coulomb::cli
