#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revsynth {

/// Runs one toolkit command (args exclude the program name) and returns the
/// process exit status: 0 success or equivalent, 1 usage error, 2 validation
/// failure, 3 verification mismatch, 4 search exhausted.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace revsynth
