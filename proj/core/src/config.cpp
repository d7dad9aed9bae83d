#include "mqed/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text,
                    const std::string& origin) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError(origin + ": non-numeric value for key " + key);
    }
    return value;
}

}  // namespace

PhysicalSetup parse_config(std::istream& in, const std::string& origin) {
    static const char* const known[] = {"b0",    "b1", "phi",   "gamma",
                                        "m_tip", "d",  "m_eff", "omega_c",
                                        "k_eff"};
    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string text = trim(line.substr(eq + 1));
        bool recognized = false;
        for (const char* k : known) {
            if (key == k) recognized = true;
        }
        if (!recognized) {
            throw ConfigError(origin + ": unknown key " + key);
        }
        if (values.count(key) != 0) {
            throw ConfigError(origin + ": duplicate key " + key);
        }
        values[key] = parse_number(key, text, origin);
    }

    PhysicalSetup setup;
    auto require = [&](const char* key) {
        const auto it = values.find(key);
        if (it == values.end()) {
            throw ConfigError(origin + ": missing required key " +
                              std::string(key));
        }
        return it->second;
    };
    setup.b0 = require("b0");
    setup.b1 = require("b1");
    setup.phi = require("phi");
    setup.gamma = require("gamma");
    setup.m_tip = require("m_tip");
    setup.d = require("d");
    setup.m_eff = require("m_eff");
    setup.omega_c = require("omega_c");
    if (values.count("k_eff") != 0) {
        setup.k_eff = values["k_eff"];
    }
    validate(setup);
    return setup;
}

PhysicalSetup load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path);
    }
    return parse_config(in, path);
}

}  // namespace mqed
