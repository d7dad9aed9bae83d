#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mqed {

// Non-fatal diagnostics (regime-validity notices, truncation pressure).
// Callers that do not care pass nullptr.
using WarningList = std::vector<std::string>;

inline void warn(WarningList* sink, std::string message) {
    if (sink != nullptr) sink->push_back(std::move(message));
}

}  // namespace mqed
