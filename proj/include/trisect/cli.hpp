#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trisect::cli {

enum ExitCode : int { Success = 0, DomainFailure = 1, UsageFailure = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisect::cli
