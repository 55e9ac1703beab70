#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dedekind {

struct SuiteItem {
    std::string label;
    bool passed = false;
    bool asserted = true;  // false: reported only, never fails the suite
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteItem> items;
    double seconds = 0;

    bool passed() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();  // appendix, classical, identities, isoperimetry, ursell, concretization
SuiteReport run_suite(const std::string& name);

}  // namespace dedekind
