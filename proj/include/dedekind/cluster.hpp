#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dedekind/oracle.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

enum class Parity { even, odd };
enum class Root { lower, upper };  // v_1 = [k-1] or v_2 = [k+1]
enum class LayerTag { lower, upper };
enum class MomentMode { size, shadow };

const char* parity_name(Parity p);
Parity parity_from_name(const std::string& s);

// k as a polynomial in n: n/2 for even n, (n+1)/2 for odd n.
Poly middle_index(Parity p);

inline constexpr int kDefaultMaxJ = 5;
inline constexpr int kHardMaxJ = 6;

// Window W of a1 + a2 coordinates: bits [0, a1) are root coordinates (block I), bits
// [a1, a1+a2) lie outside the root (block J). A vertex is stored by delta = v xor root on W;
// outside W every vertex agrees with the root.
struct Window {
    int a1 = 0;
    int a2 = 0;
    Root root = Root::lower;

    int width() const { return a1 + a2; }
    std::uint32_t i_mask() const { return (1u << a1) - 1; }
    std::uint32_t j_mask() const { return ((1u << width()) - 1) & ~i_mask(); }
    // v ∩ W as a window set.
    std::uint32_t window_set(std::uint32_t delta) const { return delta ^ i_mask(); }
    // Layer of a delta, or nullopt when it is neither L_{k-1} nor L_{k+1}.
    std::optional<LayerTag> tag(std::uint32_t delta) const;
    std::vector<std::uint32_t> vertices() const;
};

struct WindowVertex {
    LayerTag layer_tag;
    std::uint32_t delta;
    bool operator==(const WindowVertex&) const = default;
    auto operator<=>(const WindowVertex&) const = default;
};

// Shadow slots of a vertex inside the window, as window sets of middle-layer elements.
std::vector<std::uint32_t> in_window_shadow(const Window& w, const WindowVertex& v);

// Same-layer vertices sharing a middle neighbour, or a lower vertex below an upper one.
bool shadows_meet(const Window& w, const WindowVertex& u, const WindowVertex& v);

struct Polymer {
    std::vector<WindowVertex> vertices;  // sorted, one layer
    int size() const { return static_cast<int>(vertices.size()); }
    LayerTag tag() const { return vertices.front().layer_tag; }
};

// |∂(A)| = in_window + coefficient·(k+1) + offset, linear in n through k.
// For a lower vertex the n-dependence enters through n-k+1 = (k+1) - (2k-n).
struct ShadowSize {
    int in_window = 0;  // |∪ in-window slots|
    int overlap = 0;    // Σ |in-window slots| - |∪ in-window slots|
    int lower_vertices = 0;
    int upper_vertices = 0;
    Poly as_poly(Parity p) const;  // exact |∂(A)| as a polynomial in n
};
ShadowSize shadow_size_linear(const Window& w, const Polymer& a);

struct Cluster {
    std::vector<Polymer> tuple;
    std::vector<std::pair<int, int>> incompat_edges;
    int size_j = 0;
    int overlap = 0;         // α for even n
    int lower_multiplicity;  // α grows by this for odd n
    BigRat phi;

    int alpha(Parity p) const { return overlap + (p == Parity::odd ? lower_multiplicity : 0); }
};

// Clusters of total size j whose vertex set has exactly l vertices, contains the root and has
// active coordinates exactly W.
std::vector<Cluster> enumerate_cluster_class(int j, int l, const Window& w);

// Σ φ(G_Γ) λ^j (1+λ)^{α(Γ)} over one class, stored as coefficients of φ keyed by
// (overlap, lower multiplicity) so that one enumeration serves both parities.
struct ClassSum {
    int j = 0;
    int l = 0;
    Window window;
    std::map<std::pair<int, int>, BigRat> terms;
    std::uint64_t clusters = 0;

    Poly weight_poly(Parity p) const;
    int max_alpha(Parity p) const;
    nlohmann::json to_json() const;
};
ClassSum class_sum(int j, int l, const Window& w);

struct EngineOptions {
    bool parallel = true;
    int max_j = kDefaultMaxJ;
};

// All nonempty classes for cluster size j, in canonical (root, l, a1, a2) order.
std::vector<ClassSum> cluster_classes(int j, const EngineOptions& opts = {});

// Per-root sums: lower[r] and upper[r] such that Σ_{‖Γ‖=j} w_C(Γ) =
//   C(n,k-1) lower (1+λ)^{-j(k+1)} + C(n,k+1) upper (1+λ)^{-j(k+1)}.
struct RootSums {
    Poly lower;
    Poly upper;
};

// Assembled Σ_{‖Γ‖=j} w_C(Γ) m(Γ)^power with m = ‖Γ‖ or ‖∂Γ‖.
RootSums truncated_cumulant_sum(int power, int j, Parity parity, MomentMode mode, const EngineOptions& opts = {});

// Cluster sum with parity conventions applied: {S^0_j} for even n, {S^1_j, S^2_j} for odd n.
std::vector<Poly> cluster_sum(int j, Parity parity, const EngineOptions& opts = {});

// Smallest n at which the window embedding of every class of size j is realized.
int symbolic_n_min(int j);

nlohmann::json dump_classes(int j, const EngineOptions& opts = {});

// Ursell function by the connected-subset recursion, memoized on the labelled graph.
BigRat ursell(int nv, const std::vector<std::pair<int, int>>& edges);
// Independent reference by deletion-contraction on the multigraph.
BigRat ursell_deletion_contraction(int nv, const std::vector<std::pair<int, int>>& edges);

// Clear the cached class sums (tests use this to compare schedules).
void clear_cluster_cache();

}  // namespace dedekind
