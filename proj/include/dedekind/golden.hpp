#pragma once

#include <string>
#include <vector>

#include "dedekind/pipeline.hpp"

namespace dedekind {

// A published closed form, kept as text in the parser's syntax.
struct GoldenValue {
    Kind kind;
    Parity parity;
    int j;
    int branch;
    std::string expression;
    std::vector<std::string> rejected_readings;  // other parses of an ambiguous display
};

// The ten tabulated values: P_3, P_4 for all branches, R_2^0, R_2^1, R_3^0, R_3^1.
const std::vector<GoldenValue>& tabulated_values();
// P_1 and P_2 for all branches, read off the Korshunov-Sapozhenko formula.
const std::vector<GoldenValue>& classical_values();
// R_1^0 and R_1^1.
const std::vector<GoldenValue>& first_order_values();

struct GoldenCheck {
    GoldenValue golden;
    RationalFn expected;
    RationalFn computed;
    bool match = false;
    std::string label() const;
};

std::vector<GoldenCheck> check_golden(const std::vector<GoldenValue>& values, const PipelineOptions& opts = {});

}  // namespace dedekind
