#pragma once

// Command layer behind the CLI. Each command turns a manifest plus flags
// into a Report; the CLI only parses arguments and prints.

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "pglob/manifest.hpp"

namespace pglob {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitPrecondition = 3,
};

struct Report {
  std::string command;
  std::string status;
  nlohmann::json payload = nlohmann::json::object();
  int exit_code = kExitOk;

  nlohmann::json to_json() const;
};

/// Indented plain-text rendering of a report.
std::string render_pretty(const Report& r);

Report cmd_validate(const Manifest& m);
Report cmd_confluence(const Manifest& m);

struct DistanceOptions {
  bool oracle = false;
  std::optional<std::size_t> oracle_segments;  ///< default 2(lg1 + lg2 + 1)
  std::optional<std::size_t> oracle_depth;     ///< default max(lg) + 2
  bool group_formula = false;
  bool geodesic = false;
  std::optional<double> cap_infinite;
};
Report cmd_distance(const Manifest& m, const std::string& el1, const std::string& el2,
                    const DistanceOptions& opts);

Report cmd_truncation(const Manifest& m, std::size_t n, bool distances,
                      std::optional<double> cap_infinite);

Report cmd_topology(const Manifest& m, bool embedding, bool t1);

/// Manifest shape: {"glue": {"x1": space, "x2": space, "identify": [[z1, z2], ...]}}.
Report cmd_glue(const nlohmann::json& manifest);

/// `gamma` is "singletons" or the path of a JSON file holding {"gamma": [maps]}.
Report cmd_homogenize(const Manifest& m, std::size_t n, const std::string& gamma);

/// Runs `f`, mapping library exceptions to exit codes 2 and 3.
template <class F>
Report guarded(const std::string& command, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    return {command, "input_error", {{"error", e.what()}}, kExitInputError};
  } catch (const PreconditionError& e) {
    return {command, "precondition_violated", {{"error", e.what()}}, kExitPrecondition};
  } catch (const StepBudgetExceeded& e) {
    return {command, "precondition_violated", {{"error", e.what()}}, kExitPrecondition};
  } catch (const nlohmann::json::exception& e) {
    return {command, "input_error", {{"error", e.what()}}, kExitInputError};
  }
}

}  // namespace pglob
