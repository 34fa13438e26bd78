#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "coulomb/cli.hpp"
#include "coulomb/monopole.hpp"

namespace cli = coulomb::cli;

namespace {

int emit(const cli::Report& report, bool as_json) {
  if (as_json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.exit_status;
}

std::int64_t shell_cap_from_env() {
  const char* raw = std::getenv("COULOMB_KIT_SHELL_CAP");
  if (raw == nullptr || *raw == '\0') return coulomb::monopole::kDefaultShellCap;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) {
    throw coulomb::ValidationError(std::string("COULOMB_KIT_SHELL_CAP must be a positive integer, got \"") + raw +
                                   "\"");
  }
  return v;
}

template <class Run>
int run_on_spec(const std::string& command, const std::string& file, bool as_json, Run run) {
  std::optional<cli::RepSpec> spec;
  try {
    spec.emplace(cli::load_rep_spec(file));
  } catch (const coulomb::ValidationError& e) {
    std::cerr << "coulomb-kit " << command << ": " << file << ": " << e.what() << '\n';
    return cli::kInvalidInput;
  }
  auto report = run(*spec);
  report.inputs["file"] = file;
  return emit(report, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coulomb-kit: anomaly cancellation, monopole formulas and orthosymplectic constructions"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  unsigned threads = 1;

  auto* rep_info = app.add_subcommand("rep-info", "dimension, weights and symplectic structure of a representation");
  rep_info->add_option("file", file, "representation spec (JSON)")->required();
  rep_info->add_flag("--json", as_json, "machine-readable report");

  auto* anomaly = app.add_subcommand("anomaly", "trace form and anomaly-cancellation verdict");
  anomaly->add_option("file", file, "representation spec (JSON)")->required();
  anomaly->add_flag("--json", as_json, "machine-readable report");

  std::int64_t order = 10;
  auto* hilbert = app.add_subcommand("hilbert", "monopole-formula Hilbert series");
  hilbert->add_option("file", file, "representation spec (JSON)")->required();
  hilbert->add_option("--order", order, "expand through q^K")->required();
  hilbert->add_flag("--json", as_json, "machine-readable report");
  hilbert->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int n = 1;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  auto* kostant = app.add_subcommand("kostant-verify", "property suite for the orthosymplectic constructions");
  kostant->add_option("--n", n, "half the symplectic dimension")->required();
  kostant->add_option("--samples", samples, "samples per property")->required();
  kostant->add_option("--seed", seed, "RNG seed")->required();
  kostant->add_flag("--json", as_json, "machine-readable report");
  kostant->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInvalidInput;
  }

  try {
    if (*rep_info) {
      return run_on_spec("rep-info", file, as_json, [](const cli::RepSpec& s) { return cli::cmd_rep_info(s); });
    }
    if (*anomaly) {
      return run_on_spec("anomaly", file, as_json, [](const cli::RepSpec& s) { return cli::cmd_anomaly(s); });
    }
    if (*hilbert) {
      const cli::HilbertFlags flags{order, shell_cap_from_env(), threads};
      return run_on_spec("hilbert", file, as_json,
                         [&](const cli::RepSpec& s) { return cli::cmd_hilbert(s, flags); });
    }
    if (*kostant) {
      const auto t0 = std::chrono::steady_clock::now();
      auto report = cli::cmd_kostant_verify(n, samples, seed, threads);
      if (!as_json && report.exit_status != cli::kInvalidInput) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        report.results["runtime_seconds"] = dt.count();
      }
      if (report.exit_status == cli::kInvalidInput) {
        std::cerr << "coulomb-kit kostant-verify: " << report.results["error"].get<std::string>() << '\n';
      }
      return emit(report, as_json);
    }
  } catch (const coulomb::ValidationError& e) {
    std::cerr << "coulomb-kit: " << e.what() << '\n';
    return cli::kInvalidInput;
  } catch (const coulomb::PreconditionError& e) {
    std::cerr << "coulomb-kit: " << e.what() << '\n';
    return cli::kInvalidInput;
  } catch (const coulomb::ConvergenceError& e) {
    std::cerr << "coulomb-kit: " << e.what() << '\n';
    return cli::kNonConvergent;
  }
  return cli::kInvalidInput;
}
