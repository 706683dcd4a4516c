#ifndef WOLFKIT_WORKBENCH_HPP
#define WOLFKIT_WORKBENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wolfkit/json_io.hpp"

namespace wolfkit {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitInputError = 2, kExitNotSliceable = 3 };

enum class OutputFormat { Text, Json };

struct WorkbenchOptions {
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 0;
};

// Named report sections in a fixed order.
struct AnalysisReport {
  std::vector<std::pair<std::string, Report>> sections;
  Report& section(const std::string& name);
  bool any_failed() const;
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string output;
};

// A path to an instance file, or a catalog name when no such file exists.
Instance load_instance(const std::string& arg);

CommandResult cmd_check(const Instance& inst, const WorkbenchOptions& opts = {});
CommandResult cmd_analyze(const Instance& inst, const WorkbenchOptions& opts = {});
// Writes the trivialization JSON to `output_path` when non-empty.
CommandResult cmd_trivialize(const Instance& inst, const WorkbenchOptions& opts = {},
                             const std::string& output_path = {});
CommandResult cmd_beta(const Instance& inst, const Matrix& q, const Matrix& p,
                       const WorkbenchOptions& opts = {});
CommandResult cmd_catalog_list(const WorkbenchOptions& opts = {});
CommandResult cmd_catalog_emit(const std::string& name);

std::string render(const AnalysisReport& report, const WorkbenchOptions& opts,
                   const std::string& command, int exit_code);

// Full command line entry point; returns the process exit code.
int run_workbench(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wolfkit

#endif  // WOLFKIT_WORKBENCH_HPP
