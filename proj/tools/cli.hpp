#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sesqui::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kInvalidInput = 2,
    kTermCap = 3,
    kInternal = 4,
};

// Runs one command line (without the program name). Results go to `out`
// unless --out is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sesqui::cli
