#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sipmark {

// Command-line front end: embed, extract, verify, inspect, tamper.
// args excludes the program name. Exit codes: 0 success, 1 validation
// failure, 2 usage error, 3 I/O error. Failures print a single
// `error=<stage>:<detail>` line on the error stream.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sipmark
