#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mil {

// Dispatches a command line (without argv[0]); exit code 0 means
// success/valid/proved, 1 invalid/refuted/countermodel found, 2 usage or
// input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mil
