#include "dedekind/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "dedekind/lattice.hpp"

namespace dedekind {

nlohmann::json PropertyCheck::to_json() const {
    return {{"name", name},
            {"asserted", asserted},
            {"checked", checked},
            {"violations", violations},
            {"first_violation", first_violation}};
}

namespace {

using U128 = unsigned __int128;

int popcount128(U128 x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) + __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

struct LayerPair {
    int n, i;
    std::vector<Bits> lower;
    std::vector<U128> up;  // up-neighbours of each lower vertex, as a mask over L_i
    std::size_t upper_size;
};

LayerPair make_pair(int n, int i) {
    LayerPair p{n, i, layer(n, i - 1).elements(), {}, 0};
    std::vector<Bits> upper = layer(n, i).elements();
    p.upper_size = upper.size();
    if (upper.size() > 128) throw LatticeError("layer too large for shadow masks");
    for (Bits v : p.lower) {
        U128 m = 0;
        for (int c = 0; c < n; ++c)
            if (!(v >> c & 1u)) {
                auto it = std::lower_bound(upper.begin(), upper.end(), v | (Bits(1) << c));
                m |= U128(1) << (it - upper.begin());
            }
        p.up.push_back(m);
    }
    return p;
}

struct Checks {
    PropertyCheck quadratic{"shadow-quadratic", true, 0, 0, {}};
    PropertyCheck linear{"shadow-linear", false, 0, 0, {}};
    PropertyCheck lower{"expansion-lower", true, 0, 0, {}};
    PropertyCheck middle{"expansion-middle", false, 0, 0, {}};

    static void record(PropertyCheck& c, bool ok, const LayerPair& p, long s, long sh) {
        ++c.checked;
        if (ok) return;
        if (c.violations++ == 0)
            c.first_violation = "n=" + std::to_string(p.n) + " i=" + std::to_string(p.i) + " |S|=" + std::to_string(s) +
                                " |N+(S)|=" + std::to_string(sh);
    }

    void visit(const LayerPair& p, long s, long sh) {
        long n = p.n;
        record(quadratic, 2 * sh >= n * s - 2 * s * s, p, s, sh);
        if (s <= n * n * n * n) record(linear, 50 * sh >= n * s, p, s, sh);
        if (p.i <= p.n / 2) record(lower, n * sh >= (n + 1) * s, p, s, sh);
        if (p.i == (p.n + 1) / 2 && 2 * s <= static_cast<long>(binomial(p.n, p.n / 2)))
            record(middle, n * sh >= (n + 1) * s, p, s, sh);
    }
};

void subsets_up_to(const LayerPair& p, int max_size, Checks& checks) {
    std::vector<int> idx;
    std::vector<U128> acc{0};
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!idx.empty()) checks.visit(p, static_cast<long>(idx.size()), popcount128(acc.back()));
        if (static_cast<int>(idx.size()) == max_size) return;
        for (std::size_t v = from; v < p.lower.size(); ++v) {
            idx.push_back(static_cast<int>(v));
            acc.push_back(acc.back() | p.up[v]);
            rec(v + 1);
            acc.pop_back();
            idx.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<PropertyCheck> check_shadow_bounds(const IsoperimetryOptions& opts) {
    Checks checks;
    std::mt19937_64 rng(opts.seed);
    for (int n = std::max(opts.n_min, 1); n <= opts.n_max; ++n)
        for (int i = 1; i <= (n + 1) / 2; ++i) {
            LayerPair p = make_pair(n, i);
            std::size_t m = p.lower.size();
            if (m <= opts.exhaustive_limit) {
                std::vector<U128> sh(std::size_t(1) << m, 0);
                for (std::size_t s = 1; s < sh.size(); ++s) {
                    sh[s] = sh[s & (s - 1)] | p.up[__builtin_ctzll(s)];
                    checks.visit(p, __builtin_popcountll(s), popcount128(sh[s]));
                }
                continue;
            }
            subsets_up_to(p, opts.small_size, checks);
            std::vector<int> order(m);
            std::iota(order.begin(), order.end(), 0);
            std::uniform_int_distribution<std::size_t> size_dist(1, m);
            for (int r = 0; r < opts.random_samples; ++r) {
                std::shuffle(order.begin(), order.end(), rng);
                std::size_t s = size_dist(rng);
                U128 acc = 0;
                for (std::size_t q = 0; q < s; ++q) acc |= p.up[order[q]];
                checks.visit(p, static_cast<long>(s), popcount128(acc));
            }
        }
    return {checks.quadratic, checks.linear, checks.lower, checks.middle};
}

std::uint64_t count_connected_containing(const std::vector<std::uint64_t>& adj, int v, int t) {
    if (t < 1) return 0;
    std::set<std::uint64_t> level{std::uint64_t(1) << v};
    for (int s = 1; s < t; ++s) {
        std::set<std::uint64_t> next;
        for (std::uint64_t m : level) {
            std::uint64_t frontier = 0;
            for (std::uint64_t r = m; r; r &= r - 1) frontier |= adj[__builtin_ctzll(r)];
            frontier &= ~m;
            for (; frontier; frontier &= frontier - 1) next.insert(m | (frontier & -frontier));
        }
        level = std::move(next);
    }
    return level.size();
}

namespace {

void check_graph(const std::vector<Bits>& verts, const std::vector<std::uint64_t>& adj, int t_max,
                 const std::string& label, PropertyCheck& out) {
    std::size_t nv = verts.size();
    int delta = 0;
    for (auto a : adj) delta = std::max(delta, __builtin_popcountll(a));
    std::vector<std::uint64_t> sq(nv, 0);
    for (std::size_t u = 0; u < nv; ++u) {
        std::uint64_t m = adj[u];
        for (std::uint64_t r = adj[u]; r; r &= r - 1) m |= adj[__builtin_ctzll(r)];
        sq[u] = m & ~(std::uint64_t(1) << u);
    }
    for (int t = 1; t <= t_max; ++t) {
        double bound = std::pow(std::exp(1.0) * delta * delta, t - 1);
        for (std::size_t v = 0; v < nv; ++v) {
            std::uint64_t c = count_connected_containing(sq, static_cast<int>(v), t);
            ++out.checked;
            if (static_cast<double>(c) > bound && out.violations++ == 0)
                out.first_violation = label + " t=" + std::to_string(t) + " count=" + std::to_string(c);
        }
    }
}

std::vector<std::uint64_t> comparability_masks(const std::vector<Bits>& verts) {
    std::vector<std::uint64_t> adj(verts.size(), 0);
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = 0; b < verts.size(); ++b)
            if (a != b && comparable(verts[a], verts[b])) adj[a] |= std::uint64_t(1) << b;
    return adj;
}

}  // namespace

std::vector<PropertyCheck> check_two_linked_counts(int n_max, int t_max) {
    if (n_max > 6) throw LatticeError("two-linked counting limited to n <= 6");
    PropertyCheck full{"two-linked-count-comparability", true, 0, 0, {}};
    PropertyCheck layered{"two-linked-count-layers", true, 0, 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Bits> all = layers(n, 0, n).elements();
        check_graph(all, comparability_masks(all), t_max, "B_" + std::to_string(n), full);
        for (int i = 1; i <= n; ++i) {
            std::vector<Bits> two = layers(n, i - 1, i).elements();
            check_graph(two, comparability_masks(two), t_max,
                        "n=" + std::to_string(n) + " L" + std::to_string(i - 1) + "+L" + std::to_string(i), layered);
        }
    }
    return {full, layered};
}

}  // namespace dedekind
