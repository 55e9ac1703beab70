#include "dedekind/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "dedekind/cluster.hpp"
#include "dedekind/golden.hpp"
#include "dedekind/isoperimetry.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/oracle.hpp"

namespace dedekind {

namespace {

std::string rat_pair(const IdentityCheck& c) { return c.lhs.get_str() + " vs " + c.rhs.get_str(); }

void golden_items(SuiteReport& r, const std::vector<GoldenValue>& values) {
    for (const auto& c : check_golden(values))
        r.items.push_back({c.label(), c.match, true, c.match ? c.expected.to_string()
                                                            : "computed " + c.computed.to_string() + ", expected " +
                                                                  c.expected.to_string()});
}

void identity_items(SuiteReport& r) {
    for (BigRat lam : {BigRat(1), BigRat(1, 2), BigRat(3)}) {
        IdentityCheck c = verify_central_identity(4, lam);
        r.items.push_back({"central n=4 lambda=" + lam.get_str(), c.equal, true, rat_pair(c)});
    }
    for (auto [n, rr] : {std::pair{4, 2}, std::pair{5, 3}}) {
        std::vector<VertexSet> xs{VertexSet(n)};
        for (auto& x : sample_upper_antichains(n, rr, 5, 17)) xs.push_back(x);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            IdentityCheck c = verify_three_layer_identity(n, rr, xs[i], 1);
            r.items.push_back({"three-layer n=" + std::to_string(n) + " r=" + std::to_string(rr) + " X#" + std::to_string(i),
                               c.equal, true, rat_pair(c)});
        }
    }
    for (int n : {3, 5})
        for (BigRat lam : {BigRat(1), BigRat(1, 3)}) {
            IdentityCheck c = verify_polypart(n, lam);
            r.items.push_back({"polymer partition n=" + std::to_string(n) + " lambda=" + lam.get_str(), c.equal, true,
                               rat_pair(c)});
        }
}

void property_items(SuiteReport& r, const std::vector<PropertyCheck>& checks) {
    for (const auto& c : checks)
        r.items.push_back({c.name, c.passed(), c.asserted,
                           std::to_string(c.checked) + " checked, " + std::to_string(c.violations) + " violations" +
                               (c.first_violation.empty() ? "" : "; first: " + c.first_violation)});
}

void ursell_items(SuiteReport& r) {
    using E = std::vector<std::pair<int, int>>;
    struct Known {
        const char* name;
        int nv;
        E edges;
        BigRat value;
    };
    std::vector<Known> known{{"K1", 1, {}, BigRat(1)},
                             {"K2", 2, {{0, 1}}, BigRat(-1, 2)},
                             {"P3", 3, {{0, 1}, {1, 2}}, BigRat(1, 6)},
                             {"K3", 3, {{0, 1}, {1, 2}, {0, 2}}, BigRat(1, 3)}};
    for (const auto& k : known) {
        BigRat v = ursell(k.nv, k.edges);
        r.items.push_back({std::string("phi(") + k.name + ")", v == k.value, true, v.get_str()});
    }
    for (int nv = 1; nv <= 5; ++nv) {
        int m = nv * (nv - 1) / 2;
        std::uint64_t bad = 0, total = 0;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            E e;
            int bit = 0;
            for (int a = 0; a < nv; ++a)
                for (int b = a + 1; b < nv; ++b, ++bit)
                    if (mask >> bit & 1u) e.emplace_back(a, b);
            ++total;
            if (ursell(nv, e) != ursell_deletion_contraction(nv, e)) ++bad;
        }
        r.items.push_back({"deletion-contraction on " + std::to_string(nv) + " vertices", bad == 0, true,
                           std::to_string(total) + " graphs, " + std::to_string(bad) + " mismatches"});
    }
}

void concretization_items(SuiteReport& r) {
    const int n = 8, k = 4;
    for (int j = 1; j <= 2; ++j)
        for (BigRat l : {BigRat(1), BigRat(1, 2)}) {
            LiteralClusterSum lit = literal_cluster_sum(n, j, l);
            BigRat scale = BigRat(binomial(n, k - 1));
            for (int i = 0; i < j * (k + 1); ++i) scale /= (1 + l);
            std::map<Var, BigRat> pt{{Var::n, BigRat(n)}, {Var::lambda, l}};
            auto sym = [&](int power, MomentMode mode) -> BigRat {
                RootSums s = truncated_cumulant_sum(power, j, Parity::even, mode);
                return scale * (s.lower + s.upper).evaluate(pt);
            };
            std::string tag = " j=" + std::to_string(j) + " lambda=" + l.get_str();
            std::vector<std::pair<std::string, std::pair<BigRat, BigRat>>> rows{
                {"weight", {lit.weight, sym(0, MomentMode::size)}},
                {"size moment", {lit.size_moment, sym(1, MomentMode::size)}},
                {"shadow moment", {lit.shadow_moment, sym(1, MomentMode::shadow)}}};
            for (const auto& [what, vals] : rows)
                r.items.push_back({what + tag, vals.first == vals.second, true,
                                   vals.first.get_str() + " vs " + vals.second.get_str() + " over " +
                                       std::to_string(lit.clusters) + " clusters"});
        }
}

}  // namespace

bool SuiteReport::passed() const {
    for (const auto& i : items)
        if (i.asserted && !i.passed) return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j{{"suite", name}, {"passed", passed()}, {"seconds", seconds}, {"items", nlohmann::json::array()}};
    for (const auto& i : items)
        j["items"].push_back({{"label", i.label}, {"passed", i.passed}, {"asserted", i.asserted}, {"detail", i.detail}});
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"appendix", "classical", "identities", "isoperimetry", "ursell", "concretization"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    r.name = name;
    if (name == "appendix") {
        golden_items(r, tabulated_values());
    } else if (name == "classical") {
        golden_items(r, classical_values());
        golden_items(r, first_order_values());
    } else if (name == "identities") {
        identity_items(r);
    } else if (name == "isoperimetry") {
        property_items(r, check_shadow_bounds());
        property_items(r, check_two_linked_counts(6, 3));
    } else if (name == "ursell") {
        ursell_items(r);
    } else if (name == "concretization") {
        concretization_items(r);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace dedekind
