#pragma once

// In-process command dispatch for the nslab tool; main() only forwards argv.

#include <string>
#include <vector>

namespace nslab_cli {

struct CommandOutcome {
  /// 0 every requested check passed, 1 violations found, 2 usage or input error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// args excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace nslab_cli
