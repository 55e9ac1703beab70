#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "dedekind/lattice.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SizeProfile {
    std::vector<BigInt> counts;  // counts[m] = number of antichains of size m

    BigRat evaluate(const BigRat& lambda) const;
    BigInt total() const;
    BigInt at(std::size_t m) const { return m < counts.size() ? counts[m] : BigInt(0); }
    Poly as_polynomial() const;
};

struct EnumOptions {
    bool parallel = false;
    std::uint64_t node_budget = 400'000'000;
};

// Antichains of B_n inside restrict_to (default: all of B_n), with vertices below an element of
// forbidden_above removed.
SizeProfile antichain_profile(int n, const std::optional<VertexSet>& restrict_to = std::nullopt,
                              const std::optional<VertexSet>& forbidden_above = std::nullopt,
                              const EnumOptions& opts = {});
BigRat count_antichains(int n, const std::optional<VertexSet>& restrict_to,
                        const std::optional<VertexSet>& forbidden_above, const BigRat& lambda,
                        const EnumOptions& opts = {});

// Z(U, lambda) by the deletion recursion Z(U) = Z(U - v) + lambda Z(U - N[v]), memoized.
BigRat independence_polynomial_recursive(const VertexSet& ground, const BigRat& lambda);

enum class LayerWindow { three, two };  // [r-2, r] or [r-1, r]

// Which lower-layer set must have expanding 2-linked components.
//  occupied: the components of S ∩ L_{r-1}.
//  blocked:  the components of (S ∩ L_{r-1}) ∪ N^+(S ∩ L_{r-2}), the set whose
//            2-linked pieces are the polymers in the polymer representation.
// The two agree on two-layer windows and whenever the expansion test is vacuous.
enum class ExpansionRule { blocked, occupied };

SizeProfile expansion_restricted_profile(int n, int r, const VertexSet& x, LayerWindow window,
                                         ExpansionRule rule = ExpansionRule::blocked,
                                         const EnumOptions& opts = {});
BigRat count_antichains_expansion_restricted(int n, int r, const VertexSet& x, LayerWindow window,
                                             const BigRat& lambda,
                                             ExpansionRule rule = ExpansionRule::blocked,
                                             const EnumOptions& opts = {});

bool expands(const VertexSet& a, const VertexSet& shadow, int n);

// Central polymer model: configurations A ⊆ L_{k-1} ∪ L_{k+1} (k = ceil(n/2)) decomposing into
// compatible expanding polymers, tabulated by (|A|, |∂A|).
struct CentralConfigurations {
    int n = 0;
    int k = 0;
    BigInt middle = 0;  // |L_k|
    std::map<std::pair<int, int>, BigInt> histogram;
};
CentralConfigurations central_configurations(int n);
BigRat brute_xi_central(int n, const BigRat& lambda);

BigRat brute_xi_three_layer(int n, int r, const VertexSet& x, const BigRat& lambda);

struct IdentityCheck {
    bool equal = false;
    BigRat lhs;
    BigRat rhs;
};
IdentityCheck verify_three_layer_identity(int n, int r, const VertexSet& x, const BigRat& lambda,
                             ExpansionRule rule = ExpansionRule::blocked);
IdentityCheck verify_central_identity(int n, const BigRat& lambda);
IdentityCheck verify_polypart(int n, const BigRat& lambda, ExpansionRule rule = ExpansionRule::blocked);

// Seeded sample of nonempty antichains inside layers r+1..n.
std::vector<VertexSet> sample_upper_antichains(int n, int r, int count, std::uint64_t seed);

struct MeanSize {
    BigRat direct;
    BigRat via_identity;
};
MeanSize mean_size_oracle(int n, const BigRat& lambda);

// Literal cluster sums over clusters of total size j in B_n for the central polymer model.
struct LiteralClusterSum {
    BigRat weight;          // sum of w_C(Γ)
    BigRat size_moment;     // sum of w_C(Γ)·||Γ||
    BigRat shadow_moment;   // sum of w_C(Γ)·||∂Γ||
    std::uint64_t clusters = 0;
};
LiteralClusterSum literal_cluster_sum(int n, int j, const BigRat& lambda);

// Ursell function by direct enumeration of edge subsets (independent reference, |V| <= 6).
BigRat ursell_bruteforce(int nv, const std::vector<std::pair<int, int>>& edges);

nlohmann::json oracle_record(int n, const std::string& restriction, const BigRat& lambda, const BigRat& value);
nlohmann::json oracle_record(int n, const std::string& restriction, const SizeProfile& profile);

}  // namespace dedekind
