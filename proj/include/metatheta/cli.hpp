// Command-line front end. run() never exits the process; it returns the exit status.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metatheta::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metatheta::cli
