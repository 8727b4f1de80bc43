// runner.hpp — one command = one experiment = one output directory.
//
// Dispatches a named command against an ExperimentConfig, writes report.json
// and data.csv into the configured output directory (atomically), and maps
// the outcome to an exit status: 0 when every certified check in the report
// passes, 1 when a check fails or a module rejects its inputs, 2 for
// configuration errors.

#pragma once

#include <string>

#include "lindyn/config.hpp"

namespace lindyn {

struct RunResult {
  int exit_status = 2;
  bool pass = false;
  std::string report_path;
  std::string data_path;
  std::string message;  // diagnostic when exit_status != 0
};

inline constexpr const char* kCommands[] = {"orbit",    "eigen",   "radius",
                                            "mixing",   "periodic", "witness",
                                            "scramble", "stats"};

RunResult run(const std::string& command, const ExperimentConfig& cfg);

}  // namespace lindyn
