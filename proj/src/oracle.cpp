#include "dedekind/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dedekind {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxGroundVertices = 64;

struct Ground {
    std::vector<Bits> elems;
    std::vector<Mask> comp;  // comparability incl. self
};

Ground build_ground(const std::vector<Bits>& elems) {
    if (elems.size() > kMaxGroundVertices)
        throw ResourceGuardError("ground set has " + std::to_string(elems.size()) + " vertices; limit is 64");
    Ground g{elems, std::vector<Mask>(elems.size(), 0)};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (comparable(elems[i], elems[j])) g.comp[i] |= Mask(1) << j;
    return g;
}

Mask all_mask(std::size_t n) { return n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }

BigRat rat_pow(const BigRat& x, long e) {
    BigRat r = 1, b = x;
    bool inv = e < 0;
    unsigned long u = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (u) {
        if (u & 1u) r *= b;
        u >>= 1u;
        if (u) b *= b;
    }
    return inv ? BigRat(1) / r : r;
}

BigInt to_big(std::uint64_t x) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    return r;
}

class BudgetExceeded {};

// Depth-first enumeration of antichains: each node is one antichain, children extend it by a
// later vertex incomparable to everything chosen so far.
struct Dfs {
    const Ground& g;
    std::vector<std::uint64_t> profile;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    std::vector<int> chosen;
    const std::function<bool(const std::vector<int>&)>* accept = nullptr;

    Dfs(const Ground& ground, std::uint64_t b) : g(ground), profile(ground.elems.size() + 1, 0), budget(b) {}

    void visit(Mask cand, int depth) {
        if (++nodes > budget) throw BudgetExceeded{};
        if (!accept || (*accept)(chosen)) ++profile[depth];
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            chosen.push_back(v);
            visit(cand & ~g.comp[v], depth + 1);
            chosen.pop_back();
        }
    }
};

SizeProfile run_enumeration(const Ground& g, const EnumOptions& opts,
                            const std::function<bool(const std::vector<int>&)>* accept) {
    std::size_t nv = g.elems.size();
    std::vector<std::uint64_t> total(nv + 1, 0);
    if (!opts.parallel) {
        Dfs d(g, opts.node_budget);
        d.accept = accept;
        try {
            d.visit(all_mask(nv), 0);
        } catch (const BudgetExceeded&) {
            throw ResourceGuardError("antichain enumeration exceeded node budget");
        }
        total = d.profile;
    } else {
        // Split over the first branching level; subtree profiles are merged in vertex order.
        std::vector<std::vector<std::uint64_t>> parts(nv);
        std::atomic<std::uint64_t> used{1};
        std::atomic<bool> exceeded{false};
        total[0] = (!accept || (*accept)({})) ? 1 : 0;
#pragma omp parallel for schedule(dynamic, 1)
        for (long v = 0; v < static_cast<long>(nv); ++v) {
            if (exceeded.load()) continue;
            Dfs d(g, opts.node_budget);
            d.accept = accept;
            Mask later = all_mask(nv) & ~all_mask(static_cast<std::size_t>(v) + 1);
            d.chosen.push_back(static_cast<int>(v));
            try {
                d.visit(later & ~g.comp[v], 1);
            } catch (const BudgetExceeded&) {
                exceeded = true;
            }
            if (used.fetch_add(d.nodes) + d.nodes > opts.node_budget) exceeded = true;
            parts[v] = std::move(d.profile);
        }
        if (exceeded) throw ResourceGuardError("antichain enumeration exceeded node budget");
        for (const auto& p : parts)
            for (std::size_t m = 0; m < p.size(); ++m) total[m] += p[m];
    }
    SizeProfile prof;
    std::size_t top = total.size();
    while (top > 1 && total[top - 1] == 0) --top;
    for (std::size_t m = 0; m < top; ++m) prof.counts.push_back(to_big(total[m]));
    return prof;
}

std::vector<Bits> restricted_ground(int n, const std::optional<VertexSet>& restrict_to,
                                    const std::optional<VertexSet>& forbidden_above) {
    VertexSet base = restrict_to ? *restrict_to : layers(n, 0, n);
    if (forbidden_above) base = restrict_below(base, *forbidden_above);
    return base.elements();
}

}  // namespace

BigRat SizeProfile::evaluate(const BigRat& lambda) const {
    BigRat r = 0;
    for (std::size_t m = counts.size(); m-- > 0;) r = r * lambda + BigRat(counts[m]);
    return r;
}

BigInt SizeProfile::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

Poly SizeProfile::as_polynomial() const {
    Poly p;
    for (std::size_t m = 0; m < counts.size(); ++m) p += Poly::var(Var::lambda, static_cast<unsigned>(m)) * BigRat(counts[m]);
    return p;
}

SizeProfile antichain_profile(int n, const std::optional<VertexSet>& restrict_to,
                              const std::optional<VertexSet>& forbidden_above, const EnumOptions& opts) {
    if (n < 0 || n > kMaxGround) throw LatticeError("ground set size out of range");
    Ground g = build_ground(restricted_ground(n, restrict_to, forbidden_above));
    return run_enumeration(g, opts, nullptr);
}

BigRat count_antichains(int n, const std::optional<VertexSet>& restrict_to,
                        const std::optional<VertexSet>& forbidden_above, const BigRat& lambda,
                        const EnumOptions& opts) {
    return antichain_profile(n, restrict_to, forbidden_above, opts).evaluate(lambda);
}

BigRat independence_polynomial_recursive(const VertexSet& ground, const BigRat& lambda) {
    Ground g = build_ground(ground.elements());
    std::unordered_map<Mask, BigRat> memo;
    std::function<BigRat(Mask)> z = [&](Mask m) -> BigRat {
        if (m == 0) return 1;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        int v = __builtin_ctzll(m);
        BigRat r = z(m & ~(Mask(1) << v)) + lambda * z(m & ~g.comp[v]);
        memo.emplace(m, r);
        return r;
    };
    return z(all_mask(g.elems.size()));
}

bool expands(const VertexSet& a, const VertexSet& shadow, int n) {
    return static_cast<long>(n) * static_cast<long>(shadow.size()) >= static_cast<long>(n + 1) * static_cast<long>(a.size());
}

namespace {

void check_r(int n, int r) {
    if (r != n / 2 && r != (n + 1) / 2) throw LatticeError("r must be floor(n/2) or ceil(n/2)");
    if (r < 1) throw LatticeError("r too small");
}

bool lower_components_expand(int n, int r, const std::vector<Bits>& lower) {
    if (lower.empty()) return true;
    VertexSet s(n, lower);
    for (const auto& c : two_linked_components(s, Ambient{n, r - 1, r}))
        if (!expands(c, up_shadow(c), n)) return false;
    return true;
}

}  // namespace

SizeProfile expansion_restricted_profile(int n, int r, const VertexSet& x, LayerWindow window,
                                         ExpansionRule rule, const EnumOptions& opts) {
    if (n > 7) throw ResourceGuardError("expansion-restricted counts need n <= 7");
    check_r(n, r);
    for (Bits w : x)
        if (__builtin_popcount(w) <= r) throw LatticeError("X must lie in layers above r");
    int lo = window == LayerWindow::three ? std::max(r - 2, 0) : r - 1;
    VertexSet base = restrict_below(layers(n, lo, r), x);
    Ground g = build_ground(base.elements());
    std::function<bool(const std::vector<int>&)> accept = [&](const std::vector<int>& chosen) {
        std::vector<Bits> lower;
        std::vector<Bits> bottom;
        for (int i : chosen) {
            Bits b = g.elems[i];
            int l = __builtin_popcount(b);
            if (l == r - 1) lower.push_back(b);
            else if (l == r - 2) bottom.push_back(b);
        }
        if (rule == ExpansionRule::blocked && !bottom.empty()) {
            VertexSet up = up_shadow(VertexSet(n, bottom));
            lower.insert(lower.end(), up.begin(), up.end());
        }
        return lower_components_expand(n, r, lower);
    };
    return run_enumeration(g, opts, &accept);
}

BigRat count_antichains_expansion_restricted(int n, int r, const VertexSet& x, LayerWindow window,
                                             const BigRat& lambda, ExpansionRule rule,
                                             const EnumOptions& opts) {
    return expansion_restricted_profile(n, r, x, window, rule, opts).evaluate(lambda);
}

namespace {

// Subsets of a vertex list (<= 24 vertices) with their expansion-validity and shadow data.
struct SubsetTable {
    std::vector<Bits> verts;
    std::vector<char> valid;
    std::vector<int> shadow;
};

SubsetTable tabulate_layer(int n, const std::vector<Bits>& verts, int mid, bool lower) {
    if (verts.size() > 24) throw ResourceGuardError("layer too large for subset enumeration");
    SubsetTable t;
    t.verts = verts;
    std::size_t total = std::size_t(1) << verts.size();
    t.valid.assign(total, 1);
    t.shadow.assign(total, 0);
    Ambient amb = lower ? Ambient{n, mid - 1, mid} : Ambient{n, mid, mid + 1};
    for (std::size_t m = 1; m < total; ++m) {
        std::vector<Bits> s;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (m >> i & 1u) s.push_back(verts[i]);
        VertexSet a(n, s);
        VertexSet sh = lower ? up_shadow(a) : down_shadow(a);
        t.shadow[m] = static_cast<int>(sh.size());
        for (const auto& c : two_linked_components(a, amb))
            if (!expands(c, lower ? up_shadow(c) : down_shadow(c), n)) {
                t.valid[m] = 0;
                break;
            }
    }
    return t;
}

// w(A) = λ^{|A|} (1+λ)^{-|N^+(A)|} Σ_{B ⊆ Int(A)} λ^{|B| - |N^+(B)|}
BigRat interior_weight(int n, const VertexSet& a, const BigRat& lambda) {
    long size = static_cast<long>(a.size());
    BigRat scale = rat_pow(1 + lambda, -static_cast<long>(up_shadow(a).size()));
    if (a.common_layer() <= 0) return scale * rat_pow(lambda, size);
    VertexSet in = interior(a);
    const auto& e = in.elements();
    BigRat s = 0;
    for (std::size_t m = 0; m < (std::size_t(1) << e.size()); ++m) {
        std::vector<Bits> b;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (m >> i & 1u) b.push_back(e[i]);
        long nb = b.empty() ? 0 : static_cast<long>(up_shadow(VertexSet(n, b)).size());
        // N^+(B) ⊆ A, so the combined exponent is at least |B|
        s += rat_pow(lambda, size + static_cast<long>(b.size()) - nb);
    }
    return scale * s;
}

// Σ over subsets of `lower` splitting into expanding 2-linked pieces of Π interior_weight.
BigRat lower_polymer_sum(int n, int r, const std::vector<Bits>& lower, const BigRat& lambda) {
    if (lower.size() > 20) throw ResourceGuardError("lower layer too large for subset enumeration");
    std::map<std::vector<Bits>, BigRat> memo;
    BigRat xi = 0;
    for (std::size_t m = 0; m < (std::size_t(1) << lower.size()); ++m) {
        std::vector<Bits> s;
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (m >> i & 1u) s.push_back(lower[i]);
        BigRat w = 1;
        bool ok = true;
        for (const auto& c : two_linked_components(VertexSet(n, s), Ambient{n, r - 1, r})) {
            if (!expands(c, up_shadow(c), n)) {
                ok = false;
                break;
            }
            auto it = memo.find(c.elements());
            if (it == memo.end()) it = memo.emplace(c.elements(), interior_weight(n, c, lambda)).first;
            w *= it->second;
        }
        if (ok) xi += w;
    }
    return xi;
}

}  // namespace

CentralConfigurations central_configurations(int n) {
    if (n < 1 || n > 5) throw ResourceGuardError("central configurations need 1 <= n <= 5");
    CentralConfigurations cc;
    cc.n = n;
    cc.k = (n + 1) / 2;
    int k = cc.k;
    cc.middle = to_big(binomial(n, k));
    std::vector<Bits> lo = k >= 1 ? layer(n, k - 1).elements() : std::vector<Bits>{};
    std::vector<Bits> hi = k + 1 <= n ? layer(n, k + 1).elements() : std::vector<Bits>{};
    SubsetTable tl = tabulate_layer(n, lo, k, true);
    SubsetTable th = tabulate_layer(n, hi, k, false);
    // Upper vertices comparable with each lower vertex.
    std::vector<std::uint32_t> clash(lo.size(), 0);
    for (std::size_t i = 0; i < lo.size(); ++i)
        for (std::size_t j = 0; j < hi.size(); ++j)
            if ((lo[i] & hi[j]) == lo[i]) clash[i] |= 1u << j;
    for (std::size_t a = 0; a < tl.valid.size(); ++a) {
        if (!tl.valid[a]) continue;
        std::uint32_t blocked = 0;
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (a >> i & 1u) blocked |= clash[i];
        for (std::size_t b = 0; b < th.valid.size(); ++b) {
            if (!th.valid[b] || (b & blocked)) continue;
            int size = __builtin_popcountll(a) + __builtin_popcountll(b);
            cc.histogram[{size, tl.shadow[a] + th.shadow[b]}] += 1;
        }
    }
    return cc;
}

BigRat brute_xi_central(int n, const BigRat& lambda) {
    CentralConfigurations cc = central_configurations(n);
    BigRat xi = 0;
    for (const auto& [key, count] : cc.histogram)
        xi += BigRat(count) * rat_pow(lambda, key.first) * rat_pow(1 + lambda, -key.second);
    return xi;
}

BigRat brute_xi_three_layer(int n, int r, const VertexSet& x, const BigRat& lambda) {
    if (n > 5) throw ResourceGuardError("three-layer polymer sum needs n <= 5");
    check_r(n, r);
    std::vector<Bits> lower = restrict_below(layer(n, r - 1), x).elements();
    return lower_polymer_sum(n, r, lower, lambda);
}

IdentityCheck verify_three_layer_identity(int n, int r, const VertexSet& x, const BigRat& lambda, ExpansionRule rule) {
    IdentityCheck c;
    long m = static_cast<long>(restrict_below(layer(n, r), x).size());
    c.lhs = rat_pow(1 + lambda, m) * brute_xi_three_layer(n, r, x, lambda);
    c.rhs = count_antichains_expansion_restricted(n, r, x, LayerWindow::three, lambda, rule);
    c.equal = c.lhs == c.rhs;
    return c;
}

IdentityCheck verify_central_identity(int n, const BigRat& lambda) {
    if (n % 2 != 0) throw LatticeError("central identity is for even n");
    int k = n / 2;
    IdentityCheck c;
    c.lhs = count_antichains(n, layers(n, k - 1, k + 1), std::nullopt, lambda);
    c.rhs = rat_pow(1 + lambda, static_cast<long>(binomial(n, k))) * brute_xi_central(n, lambda);
    c.equal = c.lhs == c.rhs;
    return c;
}

IdentityCheck verify_polypart(int n, const BigRat& lambda, ExpansionRule rule) {
    if (n != 3 && n != 5) throw ResourceGuardError("polymer partition identity is checked for n in {3, 5}");
    int k = (n + 1) / 2;
    long big_n = static_cast<long>(binomial(n, k));
    std::vector<Bits> hi = layer(n, k + 1).elements();
    SubsetTable th = tabulate_layer(n, hi, k, false);
    IdentityCheck c;
    c.lhs = 0;
    c.rhs = 0;
    for (std::size_t b = 0; b < th.valid.size(); ++b) {
        if (!th.valid[b]) continue;
        std::vector<Bits> xs;
        for (std::size_t i = 0; i < hi.size(); ++i)
            if (b >> i & 1u) xs.push_back(hi[i]);
        VertexSet x(n, xs);
        std::vector<Bits> lower = restrict_below(layer(n, k - 1), x).elements();
        BigRat upper_w = rat_pow(lambda, static_cast<long>(xs.size())) * rat_pow(1 + lambda, -th.shadow[b]);
        c.lhs += upper_w * lower_polymer_sum(n, k, lower, lambda);
        c.rhs += rat_pow(lambda, static_cast<long>(xs.size())) *
                 count_antichains_expansion_restricted(n, k, x, LayerWindow::three, lambda, rule);
    }
    c.lhs *= rat_pow(1 + lambda, big_n);
    c.equal = c.lhs == c.rhs;
    return c;
}

std::vector<VertexSet> sample_upper_antichains(int n, int r, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VertexSet pool = layers(n, r + 1, n);
    const auto& e = pool.elements();
    std::set<std::vector<Bits>> seen;
    std::vector<VertexSet> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts++ < 10000) {
        std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
        std::uniform_int_distribution<int> size(1, 3);
        int target = size(rng);
        std::vector<Bits> s;
        for (int tries = 0; tries < 20 && static_cast<int>(s.size()) < target; ++tries) {
            Bits v = e[pick(rng)];
            bool ok = true;
            for (Bits w : s)
                if (comparable(v, w)) ok = false;
            if (ok) s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        if (!s.empty() && seen.insert(s).second) out.emplace_back(n, s);
    }
    return out;
}

MeanSize mean_size_oracle(int n, const BigRat& lambda) {
    CentralConfigurations cc = central_configurations(n);
    long big_n = cc.middle.get_si();
    MeanSize out;
    // (a) polymer configuration plus independent fill of the free middle vertices.
    BigRat p = lambda / (1 + lambda);
    BigRat num = 0, den = 0;
    for (const auto& [key, count] : cc.histogram) {
        BigRat w = BigRat(count) * rat_pow(lambda, key.first) * rat_pow(1 + lambda, big_n - key.second);
        den += w;
        num += w * (key.first + p * (big_n - key.second));
    }
    out.direct = num / den;
    // (b) λ d/dλ log of the exact partition polynomial (1+λ)^N Ξ_C.
    Poly part;
    Poly one_plus = Poly(1) + Poly::var(Var::lambda);
    for (const auto& [key, count] : cc.histogram)
        part += Poly::var(Var::lambda, key.first) * one_plus.pow(static_cast<unsigned>(big_n - key.second)) * BigRat(count);
    std::map<Var, BigRat> at{{Var::lambda, lambda}};
    out.via_identity = lambda * part.derivative(Var::lambda).evaluate(at) / part.evaluate(at);
    return out;
}

BigRat ursell_bruteforce(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv > 6) throw ResourceGuardError("brute-force Ursell limited to 6 vertices");
    BigInt signed_count = 0;
    std::size_t ne = edges.size();
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << ne); ++m) {
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        int comps = nv;
        for (std::size_t e = 0; e < ne; ++e) {
            if (!(m >> e & 1u)) continue;
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps == 1) signed_count += (__builtin_popcountll(m) % 2 == 0) ? 1 : -1;
    }
    BigInt fact = 1;
    for (int i = 2; i <= nv; ++i) fact *= i;
    BigRat r(signed_count, fact);
    r.canonicalize();
    return r;
}

namespace {

struct LiteralPolymer {
    std::vector<Bits> verts;
    std::vector<Bits> shadow;  // sorted
};

bool shadows_meet(const LiteralPolymer& a, const LiteralPolymer& b) {
    auto i = a.shadow.begin(), j = b.shadow.begin();
    while (i != a.shadow.end() && j != b.shadow.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

void connected_sets(int n, const std::vector<Bits>& verts, const Ambient& amb, int max_size,
                    std::vector<std::vector<Bits>>& out) {
    std::set<std::vector<Bits>> level;
    for (Bits v : verts) level.insert({v});
    for (int s = 1; s <= max_size && !level.empty(); ++s) {
        for (const auto& c : level) out.push_back(c);
        if (s == max_size) break;
        std::set<std::vector<Bits>> next;
        for (const auto& c : level)
            for (Bits v : verts) {
                if (std::binary_search(c.begin(), c.end(), v)) continue;
                bool adj = false;
                for (Bits u : c)
                    if (amb.linked(u, v)) adj = true;
                if (!adj) continue;
                std::vector<Bits> d = c;
                d.insert(std::upper_bound(d.begin(), d.end(), v), v);
                next.insert(std::move(d));
            }
        level = std::move(next);
    }
    (void)n;
}

}  // namespace

LiteralClusterSum literal_cluster_sum(int n, int j, const BigRat& lambda) {
    if (n > 10 || j > 3) throw ResourceGuardError("literal cluster sums limited to n <= 10, j <= 3");
    int k = (n + 1) / 2;
    std::vector<LiteralPolymer> polys;
    for (int side = 0; side < 2; ++side) {
        int lay = side == 0 ? k - 1 : k + 1;
        if (lay < 0 || lay > n) continue;
        Ambient amb = side == 0 ? Ambient{n, k - 1, k} : Ambient{n, k, k + 1};
        std::vector<std::vector<Bits>> sets;
        connected_sets(n, layer(n, lay).elements(), amb, j, sets);
        for (auto& s : sets) {
            VertexSet a(n, s);
            VertexSet sh = side == 0 ? up_shadow(a) : down_shadow(a);
            if (!expands(a, sh, n)) continue;
            polys.push_back({s, sh.elements()});
        }
    }
    std::vector<std::vector<int>> by_size(j + 1);
    for (std::size_t i = 0; i < polys.size(); ++i) by_size[polys[i].verts.size()].push_back(static_cast<int>(i));

    std::map<std::uint32_t, BigRat> phi_cache;  // key: edge mask on <= 3 nodes, with node count
    LiteralClusterSum out;
    std::vector<int> tuple;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            int t = static_cast<int>(tuple.size());
            std::vector<std::pair<int, int>> edges;
            std::uint32_t key = static_cast<std::uint32_t>(t);
            int bit = 4;
            std::vector<int> parent(t);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b, ++bit)
                    if (shadows_meet(polys[tuple[a]], polys[tuple[b]])) {
                        edges.emplace_back(a, b);
                        key |= 1u << bit;
                        parent[find(a)] = find(b);
                    }
            for (int a = 1; a < t; ++a)
                if (find(a) != find(0)) return;
            auto it = phi_cache.find(key);
            if (it == phi_cache.end()) it = phi_cache.emplace(key, ursell_bruteforce(t, edges)).first;
            long shadow_total = 0;
            for (int p : tuple) shadow_total += static_cast<long>(polys[p].shadow.size());
            BigRat w = it->second * rat_pow(lambda, j) * rat_pow(1 + lambda, -shadow_total);
            out.weight += w;
            out.size_moment += w * j;
            out.shadow_moment += w * shadow_total;
            ++out.clusters;
            return;
        }
        for (int s = 1; s <= remaining; ++s)
            for (int p : by_size[s]) {
                tuple.push_back(p);
                rec(remaining - s);
                tuple.pop_back();
            }
    };
    rec(j);
    return out;
}

nlohmann::json oracle_record(int n, const std::string& restriction, const BigRat& lambda, const BigRat& value) {
    return {{"n", n},
            {"restriction", restriction},
            {"lambda", {lambda.get_num().get_str(), lambda.get_den().get_str()}},
            {"value", value.get_str()}};
}

nlohmann::json oracle_record(int n, const std::string& restriction, const SizeProfile& profile) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : profile.counts) counts.push_back(c.get_str());
    return {{"n", n}, {"restriction", restriction}, {"profile", counts}};
}

}  // namespace dedekind
