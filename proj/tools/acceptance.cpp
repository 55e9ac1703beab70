#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "dedekind/eval.hpp"
#include "dedekind/golden.hpp"
#include "dedekind/oracle.hpp"
#include "dedekind/suites.hpp"

using namespace dedekind;

namespace {

// Tolerances and time budgets, in seconds.
constexpr double kTabulatedBudget = 600;
constexpr double kClassicalBudget = 60;
constexpr double kOracleN6Budget = 60;
constexpr double kIdentityBudget = 300;
constexpr double kIsoperimetryBudget = 120;
constexpr double kLogRatioLo = 0.95, kLogRatioHi = 1.05;
constexpr double kValueRatioLo = 0.80, kValueRatioHi = 1.05;
constexpr double kWindowRelTol = 0.10;

// Criteria whose failure is an established disagreement with a printed value, with the
// only labels allowed to fail.
const std::map<int, std::vector<std::string>> kKnownDiscrepancies = {{2, {"P_2^2"}}};

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<std::string> failed_labels;
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome from_suite(const std::string& name, double budget) {
    SuiteReport r = run_suite(name);
    Outcome o;
    int n_ok = 0;
    for (const auto& i : r.items) {
        if (i.passed) ++n_ok;
        else if (i.asserted) o.failed_labels.push_back(i.label);
    }
    o.pass = r.passed() && (budget <= 0 || r.seconds <= budget);
    o.detail = std::to_string(n_ok) + "/" + std::to_string(r.items.size()) + " items, " + std::to_string(r.seconds) + " s";
    if (budget > 0) o.detail += " (budget " + std::to_string(static_cast<int>(budget)) + " s)";
    for (const auto& l : o.failed_labels) {
        for (const auto& i : r.items)
            if (i.label == l) o.detail += "; " + l + ": " + i.detail;
    }
    return o;
}

Outcome classical() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    int ok = 0;
    auto checks = check_golden(classical_values());
    for (const auto& c : checks) {
        if (c.match) ++ok;
        else {
            o.failed_labels.push_back(c.label());
            o.detail += c.label() + ": computed " + c.computed.to_string() + ", printed " + c.expected.to_string() + "; ";
        }
    }
    double s = since(t0);
    o.pass = o.failed_labels.empty() && s <= kClassicalBudget;
    o.detail += std::to_string(ok) + "/" + std::to_string(checks.size()) + " equal";
    return o;
}

Outcome first_order() {
    Outcome o;
    auto checks = check_golden(first_order_values());
    o.pass = true;
    for (const auto& c : checks) {
        o.pass = o.pass && c.match;
        if (!c.match) o.failed_labels.push_back(c.label());
        o.detail += c.label() + (c.match ? " equal; " : " differs; ");
    }
    return o;
}

Outcome dedekind_numbers() {
    const long expect[] = {2, 3, 6, 20, 168, 7581, 7828354};
    Outcome o;
    o.pass = true;
    double t6 = 0;
    for (int n = 0; n <= 6; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        BigRat v = count_antichains(n, std::nullopt, std::nullopt, 1);
        if (n == 6) t6 = since(t0);
        o.detail += v.get_str() + (n < 6 ? ", " : "");
        if (v != expect[n]) {
            o.pass = false;
            o.failed_labels.push_back("n=" + std::to_string(n));
        }
    }
    o.pass = o.pass && t6 <= kOracleN6Budget;
    o.detail += "; n=6 in " + std::to_string(t6) + " s";
    return o;
}

Outcome small_n_sanity() {
    Real log_est = eval_log_psi(6, {Theorem::korshunov, Parity::even, 1});
    Real exact = 7828354;
    double log_ratio = (log_est / boost::multiprecision::log(exact)).convert_to<double>();
    double ratio = (boost::multiprecision::exp(log_est) / exact).convert_to<double>();
    Outcome o;
    o.pass = log_ratio >= kLogRatioLo && log_ratio <= kLogRatioHi && ratio >= kValueRatioLo && ratio <= kValueRatioHi;
    char buf[200];
    std::snprintf(buf, sizeof buf, "log ratio %.6f in [%.2f, %.2f], value ratio %.6f in [%.2f, %.2f]", log_ratio,
                  kLogRatioLo, kLogRatioHi, ratio, kValueRatioLo, kValueRatioHi);
    o.detail = buf;
    Real odd = eval_log_psi(5, {Theorem::korshunov, Parity::odd, 1});
    std::snprintf(buf, sizeof buf, "; n=5 value ratio %.4f (reported only)",
                  (boost::multiprecision::exp(odd) / 7581).convert_to<double>());
    o.detail += buf;
    return o;
}

Outcome window_constant() {
    WindowResult w = threshold_window(1000, 0);
    Real pi = boost::multiprecision::acos(Real(-1));
    Real exponent = 3 / boost::multiprecision::sqrt(2 * pi);
    double r_sum = (w.cluster_sum_1 / exponent).convert_to<double>();
    double r_surv = (w.survival / boost::multiprecision::exp(-exponent)).convert_to<double>();
    Outcome o;
    o.pass = std::abs(r_sum - 1) <= kWindowRelTol && std::abs(r_surv - 1) <= kWindowRelTol;
    char buf[200];
    std::snprintf(buf, sizeof buf, "cluster sum %.6f vs %.6f (ratio %.4f), survival ratio %.4f, tolerance %.0f%%",
                  w.cluster_sum_1.convert_to<double>(), exponent.convert_to<double>(), r_sum, r_surv,
                  kWindowRelTol * 100);
    o.detail = buf;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "tabulated P_3, P_4, R_2, R_3 coefficients", [] { return from_suite("appendix", kTabulatedBudget); }},
        {2, "P_1, P_2 against the Korshunov closed form", classical},
        {3, "printed R_1 values", first_order},
        {4, "Dedekind numbers n = 0..6", dedekind_numbers},
        {5, "exact partition-function identities", [] { return from_suite("identities", kIdentityBudget); }},
        {6, "symbolic cluster sums equal literal sums in B_8", [] { return from_suite("concretization", 0); }},
        {7, "Ursell values and deletion-contraction", [] { return from_suite("ursell", 0); }},
        {8, "small-n sanity of the closed form at n = 6", small_n_sanity},
        {9, "threshold constant at n = 1000, c = 0", window_constant},
        {10, "isoperimetry properties for n <= 8", [] { return from_suite("isoperimetry", kIsoperimetryBudget); }},
    };
    int passed = 0;
    bool unexpected = false;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
            o.failed_labels.push_back("exception");
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | " << o.detail
                  << std::endl;
        if (o.pass) {
            ++passed;
            continue;
        }
        auto known = kKnownDiscrepancies.find(c.id);
        bool explained = known != kKnownDiscrepancies.end() && !o.failed_labels.empty() &&
                         o.failed_labels == known->second;
        if (explained) std::cout << "  known discrepancy: the computed value disagrees with the printed one" << std::endl;
        else unexpected = true;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass" << std::endl;
    return unexpected ? 1 : 0;
}
