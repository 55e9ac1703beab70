#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dedekind/cluster.hpp"
#include "dedekind/series.hpp"

namespace dedekind {

enum class Kind { S, P, F, B, R };

const char* kind_name(Kind k);
Kind kind_from_name(const std::string& s);

struct CoefficientFamily {
    Kind kind = Kind::S;
    Parity parity = Parity::even;
    int j = 0;
    int branch = 0;
    RationalFn value;
    nlohmann::json provenance = nlohmann::json::object();

    std::string label() const;  // e.g. "R_2^1"
    std::string to_text() const;
    nlohmann::json to_json() const;
    static CoefficientFamily from_json(const nlohmann::json& j);
};

// Branches carried by each kind: {0} for even parity; {1, 2} for odd S and P; {1} for odd F, B, R.
std::vector<int> branches(Kind kind, Parity parity);

struct PipelineOptions {
    EngineOptions engine;
};

std::vector<CoefficientFamily> compute_S(int j, Parity parity, const PipelineOptions& opts = {});
std::vector<CoefficientFamily> compute_P(int j, Parity parity, const PipelineOptions& opts = {});
CoefficientFamily compute_F(int j, Parity parity, const PipelineOptions& opts = {});
// B_1..B_q.
std::vector<CoefficientFamily> compute_B(int q, Parity parity, const PipelineOptions& opts = {});
// R_1..R_{t-1}, using q = ceil(t/2) - 1 unless b_depth overrides it.
std::vector<CoefficientFamily> compute_R(int t, Parity parity, const PipelineOptions& opts = {},
                                         std::optional<int> b_depth = std::nullopt);

// Normalized size-j cluster sum: Σ_{‖Γ‖=j} w_C(Γ) = N σ_j (1+λ)^{-j(k+1)}.
RationalFn normalized_cluster_sum(int j, Parity parity, const PipelineOptions& opts = {});

// (n-k+1)(k+1) as a polynomial in n.
Poly mean_size_denominator(Parity parity);

// The series X = Σ_{j≤q} B_j (1-β)^{j+1} Y^j at the given order.
TruncatedSeries activity_shift_series(const std::vector<CoefficientFamily>& b, int order);

// E|A|/N - β as a series in Y after substituting λ = (β+X)/(1-β); vanishes below order q+1
// when X is built from compute_B(q).
TruncatedSeries mean_size_residual(const std::vector<CoefficientFamily>& b, Parity parity, int order,
                                   const PipelineOptions& opts = {});

// Σ_{‖Γ‖=j} w_C(Γ)(‖Γ‖ - λ/(1+λ)‖∂Γ‖) at a concrete n and λ from F_j, for certification
// against the literal-lattice sum.
BigRat mean_size_term_from_F(int n, int j, const BigRat& lambda, const PipelineOptions& opts = {});

}  // namespace dedekind
