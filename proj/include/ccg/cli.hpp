#pragma once

#include <string>
#include <vector>

namespace ccg {

/// Front door used by both main() and the CLI tests.
/// Exit statuses: 0 pass, 1 check/resource failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args);

}  // namespace ccg
