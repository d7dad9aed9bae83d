#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mqed::cli {

// Batch front-end. args excludes the program name. CSV or key=value output
// goes to `out` (or to the file named by --output); diagnostics and warnings
// go to `err`. Returns 0 on success, 2 on configuration or argument errors,
// 3 on numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mqed::cli
