#pragma once

#include <string>
#include <vector>

#include "mqed/warnings.hpp"

namespace mqed {

// Named scalar observables sampled on a strictly increasing time grid.
// Label columns carry per-sample tags (e.g. which Hamiltonian a protocol
// segment ran under).
struct TimeSeries {
    struct Column {
        std::string name;
        std::vector<double> values;
    };
    struct LabelColumn {
        std::string name;
        std::vector<std::string> values;
    };

    std::vector<double> times;
    std::vector<Column> columns;
    std::vector<LabelColumn> labels;
    WarningList warnings;

    const std::vector<double>* column(const std::string& name) const {
        for (const auto& c : columns) {
            if (c.name == name) return &c.values;
        }
        return nullptr;
    }
};

}  // namespace mqed
