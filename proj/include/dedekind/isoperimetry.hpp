#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dedekind {

// Outcome of one shadow inequality or counting bound over a family of test sets.
struct PropertyCheck {
    std::string name;
    bool asserted = true;  // false: reported only
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string first_violation;

    bool passed() const { return violations == 0; }
    nlohmann::json to_json() const;
};

struct IsoperimetryOptions {
    int n_min = 1;
    int n_max = 8;
    std::size_t exhaustive_limit = 20;  // layers up to this size are checked over all subsets
    int small_size = 3;                 // otherwise all subsets up to this size
    int random_samples = 2000;          // plus this many seeded random subsets per layer
    std::uint64_t seed = 20240917;
};

// Up-shadow inequalities for S ⊆ L_{i-1}, i <= ceil(n/2):
//   shadow-quadratic  |N^+(S)| >= n|S|/2 - |S|^2 (checked for every |S|, not only |S| <= n/10)
//   shadow-linear     |N^+(S)| >= n|S|/50 for |S| <= n^4                     (reported)
//   expansion-lower   |N^+(S)| >= (1+1/n)|S| for i <= floor(n/2)
//   expansion-middle  the same for i = ceil(n/2), |S| <= |L_floor(n/2)|/2      (reported)
std::vector<PropertyCheck> check_shadow_bounds(const IsoperimetryOptions& opts = {});

// Number of 2-linked sets of size t containing a fixed vertex is at most (e Δ^2)^(t-1),
// on the comparability graph of B_n and on each two-layer graph L_{i-1} ∪ L_i.
std::vector<PropertyCheck> check_two_linked_counts(int n_max = 6, int t_max = 3);

// Number of connected sets of size t containing vertex v in the graph with adjacency masks adj.
std::uint64_t count_connected_containing(const std::vector<std::uint64_t>& adj, int v, int t);

}  // namespace dedekind
