#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dedekind/eval.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/oracle.hpp"
#include "dedekind/suites.hpp"

using namespace dedekind;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BigRat parse_rat(const std::string& s) {
    BigRat r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) throw UsageError("not an exact rational: " + s);
    r.canonicalize();
    return r;
}

Parity parse_parity(const std::string& s) {
    try {
        return parity_from_name(s);
    } catch (const std::exception&) {
        throw UsageError("parity must be even or odd");
    }
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("layer range must look like a..b");
    try {
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("layer range must look like a..b");
    }
}

std::vector<int> parse_ns(const std::string& s) {
    std::vector<int> ns;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.find("..") != std::string::npos) {
            auto [a, b] = parse_range(cell);
            for (int n = a; n <= b; ++n) ns.push_back(n);
        } else {
            try {
                ns.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw UsageError("bad value for --n: " + cell);
            }
        }
    }
    if (ns.empty()) throw UsageError("--n is empty");
    return ns;
}

struct Global {
    unsigned precision = kDefaultPrecisionBits;
    bool serial = false;
    int max_j = 5;

    PipelineOptions pipeline() const {
        PipelineOptions o;
        o.engine.parallel = !serial;
        o.engine.max_j = max_j;
        return o;
    }
};

int run_coeffs(const Global& g, const std::string& kind_s, int j, const std::string& parity_s, const std::string& format) {
    Kind kind;
    try {
        kind = kind_from_name(kind_s);
    } catch (const std::exception&) {
        throw UsageError("kind must be one of S, P, F, B, R");
    }
    Parity parity = parse_parity(parity_s);
    if (j < 1) throw UsageError("--j must be at least 1");
    PipelineOptions opts = g.pipeline();
    std::vector<CoefficientFamily> fams;
    switch (kind) {
        case Kind::S: fams = compute_S(j, parity, opts); break;
        case Kind::P: fams = compute_P(j, parity, opts); break;
        case Kind::F: fams = {compute_F(j, parity, opts)}; break;
        case Kind::B: fams = {compute_B(j, parity, opts).back()}; break;
        case Kind::R: fams = {compute_R(j + 1, parity, opts).back()}; break;
    }
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : fams) out.push_back(f.to_json());
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& f : fams) std::cout << f.to_text() << '\n';
    }
    return kOk;
}

int run_exact(int n, std::optional<long> size, const std::string& layers_s, const std::string& lambda_s,
              const std::string& format) {
    std::optional<VertexSet> restrict_to;
    std::string restriction = "all";
    if (!layers_s.empty()) {
        auto [a, b] = parse_range(layers_s);
        if (a < 0 || b > n || a > b) throw UsageError("layer range outside 0..n");
        restrict_to = layers(n, a, b);
        restriction = "layers " + layers_s;
    }
    if (n < 0) throw UsageError("--n must be non-negative");
    EnumOptions eo;
    eo.parallel = true;
    SizeProfile p = antichain_profile(n, restrict_to, std::nullopt, eo);
    if (format == "json") {
        nlohmann::json rec = lambda_s.empty() ? oracle_record(n, restriction, p)
                                               : oracle_record(n, restriction, parse_rat(lambda_s),
                                                               p.evaluate(parse_rat(lambda_s)));
        if (size) rec["size"] = *size, rec["count_at_size"] = p.at(static_cast<std::size_t>(*size)).get_str();
        std::cout << rec.dump(2) << '\n';
    } else if (size) {
        if (*size < 0) throw UsageError("--size must be non-negative");
        std::cout << p.at(static_cast<std::size_t>(*size)).get_str() << '\n';
    } else if (!lambda_s.empty()) {
        std::cout << p.evaluate(parse_rat(lambda_s)).get_str() << '\n';
    } else {
        std::cout << p.total().get_str() << '\n';
    }
    return kOk;
}

int run_verify(const std::string& suite, const std::string& format) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names = {suite};
    bool ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : names) {
        SuiteReport r;
        try {
            r = run_suite(name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        ok = ok && r.passed();
        if (format == "json") {
            out.push_back(r.to_json());
            continue;
        }
        for (const auto& i : r.items)
            std::cout << (i.passed ? "PASS" : (i.asserted ? "FAIL" : "WARN")) << ' ' << name << ": " << i.label
                      << " [" << i.detail << "]\n";
        std::cout << "suite " << name << ' ' << (r.passed() ? "passed" : "failed") << " in " << r.seconds << " s\n";
    }
    if (format == "json") std::cout << out.dump(2) << '\n';
    return ok ? kOk : kVerifyFail;
}

int run_compare(const Global& g, const std::string& ns_s, const std::string& theorem_s, int t, std::optional<long> m,
                const std::string& out_fmt, const std::string& file) {
    Theorem th;
    try {
        th = theorem_from_name(theorem_s);
    } catch (const std::exception&) {
        throw UsageError("theorem must be 1.1, 1.3 or 1.4");
    }
    if (th == Theorem::window) throw UsageError("use the window subcommand for 1.2");
    if (t < 1) throw UsageError("--t must be at least 1");
    auto rows = compare_batch(parse_ns(ns_s), th, t, m, g.pipeline());
    std::ofstream fout;
    std::ostream* os = &std::cout;
    if (!file.empty()) {
        fout.open(file);
        if (!fout) throw UsageError("cannot write " + file);
        os = &fout;
    }
    if (out_fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(r.to_json());
        *os << arr.dump(2) << '\n';
    } else {
        write_csv(*os, rows);
    }
    return kOk;
}

int run_window(int n, const std::string& c_s) {
    if (n < 10) throw UsageError("--n must be at least 10");
    WindowResult w = threshold_window(n, parse_rat(c_s));
    nlohmann::json j{{"n", n},
                     {"c", c_s},
                     {"beta", format_real(w.beta)},
                     {"cluster_sum_1", format_real(w.cluster_sum_1)},
                     {"survival", format_real(w.survival)},
                     {"limit_exponent", format_real(w.limit_exponent)},
                     {"limit_constant", format_real(w.limit_constant)}};
    std::cout << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Antichain counts, cluster-expansion coefficients and asymptotic estimates"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--precision", g.precision, "Floating precision in bits")->check(CLI::Range(32u, 100000u));
    app.add_flag("--serial", g.serial, "Run kernels on one thread");
    app.add_option("--max-j", g.max_j, "Largest cluster size the engine may build")->check(CLI::Range(1, kHardMaxJ));

    auto* coeffs = app.add_subcommand("coeffs", "Coefficient families S, P, F, B, R");
    std::string kind, parity = "even", format = "text";
    int j = 1;
    coeffs->add_option("--kind", kind)->required();
    coeffs->add_option("--j", j)->required();
    coeffs->add_option("--parity", parity)->required();
    coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* exact = app.add_subcommand("exact", "Exact antichain counts by enumeration");
    int n = 0;
    std::optional<long> size;
    std::string layer_range, lambda;
    std::string exact_format = "text";
    exact->add_option("--n", n)->required()->check(CLI::Range(0, 6));
    exact->add_option("--size", size);
    exact->add_option("--layers", layer_range, "Restrict to layers a..b");
    exact->add_option("--lambda", lambda, "Evaluate the antichain polynomial at p/q");
    exact->add_option("--format", exact_format)->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite, verify_format = "text";
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_choices));
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

    auto* cmp = app.add_subcommand("compare", "Formula against exact values");
    std::string ns, theorem, out = "csv", file;
    int t = 1;
    std::optional<long> m;
    cmp->add_option("--n", ns, "n, a list a,b,c or a range a..b")->required();
    cmp->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"1.1", "1.3", "1.4"}));
    cmp->add_option("--t", t);
    cmp->add_option("--m", m);
    cmp->add_option("--out", out)->check(CLI::IsMember({"csv", "json"}));
    cmp->add_option("--file", file, "Write to a file instead of stdout");

    auto* window = app.add_subcommand("window", "Threshold window quantities");
    int wn = 10;
    std::string c = "0";
    window->add_option("--n", wn)->required();
    window->add_option("--c", c)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        set_precision_bits(g.precision);
        if (*coeffs) return run_coeffs(g, kind, j, parity, format);
        if (*exact) return run_exact(n, size, layer_range, lambda, exact_format);
        if (*verify) return run_verify(suite, verify_format);
        if (*cmp) return run_compare(g, ns, theorem, t, m, out, file);
        if (*window) return run_window(wn, c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFail;
    }
    return kUsage;
}
