#include "dedekind/cluster.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "dedekind/series.hpp"

namespace dedekind {

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from_name(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("parity must be even or odd: " + s);
}

Poly middle_index(Parity p) {
    Poly n = Poly::var(Var::n);
    return p == Parity::even ? n * BigRat(1, 2) : (n + Poly(1)) * BigRat(1, 2);
}

std::optional<LayerTag> Window::tag(std::uint32_t delta) const {
    if (delta & ~(i_mask() | j_mask())) return std::nullopt;
    int di = __builtin_popcount(delta & i_mask());
    int dj = __builtin_popcount(delta & j_mask());
    if (root == Root::lower) {
        if (dj == di) return LayerTag::lower;
        if (dj == di + 2) return LayerTag::upper;
    } else {
        if (di == dj) return LayerTag::upper;
        if (di == dj + 2) return LayerTag::lower;
    }
    return std::nullopt;
}

std::vector<std::uint32_t> Window::vertices() const {
    std::vector<std::uint32_t> r;
    for (std::uint32_t d = 0; d < (1u << width()); ++d)
        if (tag(d)) r.push_back(d);
    return r;
}

std::vector<std::uint32_t> in_window_shadow(const Window& w, const WindowVertex& v) {
    std::uint32_t x = w.window_set(v.delta);
    std::vector<std::uint32_t> r;
    for (int i = 0; i < w.width(); ++i) {
        std::uint32_t b = 1u << i;
        if (v.layer_tag == LayerTag::lower && !(x & b)) r.push_back(x | b);
        if (v.layer_tag == LayerTag::upper && (x & b)) r.push_back(x & ~b);
    }
    std::sort(r.begin(), r.end());
    return r;
}

bool shadows_meet(const Window& w, const WindowVertex& u, const WindowVertex& v) {
    if (u.layer_tag == v.layer_tag) return __builtin_popcount(u.delta ^ v.delta) == 2;
    std::uint32_t lo = w.window_set(u.layer_tag == LayerTag::lower ? u.delta : v.delta);
    std::uint32_t hi = w.window_set(u.layer_tag == LayerTag::lower ? v.delta : u.delta);
    return (lo & ~hi) == 0;
}

Poly ShadowSize::as_poly(Parity p) const {
    Poly n = Poly::var(Var::n);
    Poly k = middle_index(p);
    return (n - k + Poly(1)) * BigRat(lower_vertices) + (k + Poly(1)) * BigRat(upper_vertices) - Poly(overlap);
}

// Shadow slots outside the window are v ∪ {i} or v \ {i} with i ∉ W. Every vertex agrees with
// the root off W, so such a slot determines v and i; these slots are distinct across vertices
// and never coincide with an in-window slot, whose part off W equals the root's.
ShadowSize shadow_size_linear(const Window& w, const Polymer& a) {
    ShadowSize s;
    std::set<std::uint32_t> all;
    int total = 0;
    for (const auto& v : a.vertices) {
        auto slots = in_window_shadow(w, v);
        total += static_cast<int>(slots.size());
        all.insert(slots.begin(), slots.end());
        if (v.layer_tag == LayerTag::lower) ++s.lower_vertices;
        else ++s.upper_vertices;
    }
    s.in_window = static_cast<int>(all.size());
    s.overlap = total - s.in_window;
    return s;
}

namespace {

using Mask = std::uint32_t;

// Connected sets in the graph adj containing vertex 0 of the given size, whose delta union is
// exactly full. Deltas add at most two coordinates per step, which prunes hopeless branches.
std::vector<std::vector<int>> rooted_connected_sets(const std::vector<std::uint32_t>& deltas,
                                                    const std::vector<std::vector<int>>& adj, int size,
                                                    std::uint32_t full) {
    std::set<std::vector<int>> level{{0}};
    for (int m = 1; m < size; ++m) {
        std::set<std::vector<int>> next;
        for (const auto& s : level)
            for (int u : s)
                for (int v : adj[u]) {
                    if (std::binary_search(s.begin(), s.end(), v)) continue;
                    std::vector<int> t = s;
                    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
                    std::uint32_t uni = 0;
                    for (int x : t) uni |= deltas[x];
                    if (__builtin_popcount(full & ~uni) > 2 * (size - m - 1)) continue;
                    next.insert(std::move(t));
                }
        level = std::move(next);
    }
    std::vector<std::vector<int>> out;
    for (const auto& s : level) {
        std::uint32_t uni = 0;
        for (int x : s) uni |= deltas[x];
        if (uni == full) out.push_back(s);
    }
    return out;
}

struct LocalPolymer {
    Mask mask;
    Mask reach;  // vertices sharing a shadow slot with the polymer, itself included
    int size;
    int overlap;
    int lower;
    Polymer poly;
};

struct TupleVisit {
    const std::vector<LocalPolymer>* polys;
    const std::vector<int>* tuple;
    std::vector<std::pair<int, int>> edges;
    BigRat phi;
};

// Enumerates every cluster of size j with vertex set exactly V for each admissible V.
void for_each_cluster(int j, int l, const Window& w, const std::function<void(const TupleVisit&)>& visit) {
    std::vector<std::uint32_t> deltas = w.vertices();
    std::vector<WindowVertex> verts;
    for (auto d : deltas) verts.push_back({*w.tag(d), d});
    // root delta 0 first
    auto root_it = std::find(deltas.begin(), deltas.end(), 0u);
    std::iter_swap(deltas.begin(), root_it);
    std::iter_swap(verts.begin(), verts.begin() + (root_it - deltas.begin()));
    std::vector<std::vector<int>> adj(deltas.size());
    for (std::size_t a = 0; a < deltas.size(); ++a)
        for (std::size_t b = 0; b < deltas.size(); ++b)
            if (a != b && shadows_meet(w, verts[a], verts[b])) adj[a].push_back(static_cast<int>(b));
    std::uint32_t full = w.i_mask() | w.j_mask();

    for (const auto& vset : rooted_connected_sets(deltas, adj, l, full)) {
        int lv = static_cast<int>(vset.size());
        std::vector<Mask> near(lv, 0), same(lv, 0);
        for (int a = 0; a < lv; ++a)
            for (int b = 0; b < lv; ++b) {
                if (a == b || !shadows_meet(w, verts[vset[a]], verts[vset[b]])) continue;
                near[a] |= 1u << b;
                if (verts[vset[a]].layer_tag == verts[vset[b]].layer_tag) same[a] |= 1u << b;
            }
        std::vector<LocalPolymer> polys;
        for (Mask m = 1; m < (1u << lv); ++m) {
            int first = __builtin_ctz(m);
            LayerTag t = verts[vset[first]].layer_tag;
            bool one_layer = true;
            for (Mask r = m; r; r &= r - 1)
                if (verts[vset[__builtin_ctz(r)]].layer_tag != t) one_layer = false;
            if (!one_layer) continue;
            Mask seen = 1u << first, frontier = seen;
            while (frontier) {
                Mask grow = 0;
                for (Mask r = frontier; r; r &= r - 1) grow |= same[__builtin_ctz(r)];
                grow &= m & ~seen;
                seen |= grow;
                frontier = grow;
            }
            if (seen != m) continue;
            LocalPolymer p{m, m, __builtin_popcount(m), 0, 0, {}};
            for (Mask r = m; r; r &= r - 1) {
                int v = __builtin_ctz(r);
                p.reach |= near[v];
                p.poly.vertices.push_back(verts[vset[v]]);
            }
            std::sort(p.poly.vertices.begin(), p.poly.vertices.end());
            ShadowSize s = shadow_size_linear(w, p.poly);
            p.overlap = s.overlap;
            p.lower = s.lower_vertices;
            if (p.size <= j) polys.push_back(std::move(p));
        }

        Mask all = (1u << lv) - 1;
        std::vector<int> tuple;
        std::function<void(int, Mask)> rec = [&](int remaining, Mask cover) {
            if (remaining == 0) {
                if (cover != all) return;
                int t = static_cast<int>(tuple.size());
                TupleVisit tv{&polys, &tuple, {}, 0};
                std::vector<int> comp(t);
                std::iota(comp.begin(), comp.end(), 0);
                std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
                for (int a = 0; a < t; ++a)
                    for (int b = a + 1; b < t; ++b)
                        if (polys[tuple[a]].mask & polys[tuple[b]].reach) {
                            tv.edges.emplace_back(a, b);
                            comp[find(a)] = find(b);
                        }
                for (int a = 1; a < t; ++a)
                    if (find(a) != find(0)) return;
                tv.phi = ursell(t, tv.edges);
                visit(tv);
                return;
            }
            for (std::size_t p = 0; p < polys.size(); ++p) {
                if (polys[p].size > remaining) continue;
                // every uncovered vertex still needs a polymer
                if (__builtin_popcount(all & ~(cover | polys[p].mask)) > remaining - polys[p].size) continue;
                tuple.push_back(static_cast<int>(p));
                rec(remaining - polys[p].size, cover | polys[p].mask);
                tuple.pop_back();
            }
        };
        rec(j, 0);
    }
}

void check_class_args(int j, int l, const Window& w) {
    if (j < 1 || l < 1 || l > j) throw std::invalid_argument("need 1 <= l <= j");
    if (w.a1 < 0 || w.a2 < 0 || w.width() > 2 * (l - 1)) throw std::invalid_argument("need a1 + a2 <= 2(l - 1)");
    if (j > kHardMaxJ) throw ResourceGuardError("cluster size above hard limit " + std::to_string(kHardMaxJ));
}

}  // namespace

std::vector<Cluster> enumerate_cluster_class(int j, int l, const Window& w) {
    check_class_args(j, l, w);
    std::vector<Cluster> out;
    for_each_cluster(j, l, w, [&](const TupleVisit& tv) {
        Cluster c;
        c.size_j = j;
        c.overlap = 0;
        c.lower_multiplicity = 0;
        for (int p : *tv.tuple) {
            const auto& lp = (*tv.polys)[p];
            c.tuple.push_back(lp.poly);
            c.overlap += lp.overlap;
            c.lower_multiplicity += lp.lower;
        }
        c.incompat_edges = tv.edges;
        c.phi = tv.phi;
        out.push_back(std::move(c));
    });
    return out;
}

ClassSum class_sum(int j, int l, const Window& w) {
    check_class_args(j, l, w);
    ClassSum cs;
    cs.j = j;
    cs.l = l;
    cs.window = w;
    for_each_cluster(j, l, w, [&](const TupleVisit& tv) {
        int overlap = 0, lower = 0;
        for (int p : *tv.tuple) {
            overlap += (*tv.polys)[p].overlap;
            lower += (*tv.polys)[p].lower;
        }
        ++cs.clusters;
        cs.terms[{overlap, lower}] += tv.phi;
    });
    for (auto it = cs.terms.begin(); it != cs.terms.end();)
        it = it->second == 0 ? cs.terms.erase(it) : std::next(it);
    return cs;
}

Poly ClassSum::weight_poly(Parity p) const {
    Poly one_plus = Poly(1) + Poly::var(Var::lambda);
    Poly r;
    for (const auto& [key, c] : terms) {
        int alpha = key.first + (p == Parity::odd ? key.second : 0);
        r += one_plus.pow(static_cast<unsigned>(alpha)) * c;
    }
    return r * Poly::var(Var::lambda, static_cast<unsigned>(j));
}

int ClassSum::max_alpha(Parity p) const {
    int m = 0;
    for (const auto& [key, c] : terms) m = std::max(m, key.first + (p == Parity::odd ? key.second : 0));
    return m;
}

nlohmann::json ClassSum::to_json() const {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [key, c] : terms) t.push_back({{"overlap", key.first}, {"lower", key.second}, {"phi", c.get_str()}});
    return {{"j", j},
            {"l", l},
            {"a1", window.a1},
            {"a2", window.a2},
            {"root", window.root == Root::lower ? "lower" : "upper"},
            {"clusters", clusters},
            {"terms", t}};
}

namespace {

std::mutex g_cache_mutex;
std::map<int, std::vector<ClassSum>> g_cache;

}  // namespace

void clear_cluster_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

std::vector<ClassSum> cluster_classes(int j, const EngineOptions& opts) {
    if (j > kHardMaxJ || j > std::min(opts.max_j, kHardMaxJ))
        throw ResourceGuardError("cluster size " + std::to_string(j) + " exceeds limit " +
                                 std::to_string(std::min(opts.max_j, kHardMaxJ)));
    if (j < 1) throw std::invalid_argument("cluster size must be positive");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(j);
        if (it != g_cache.end()) return it->second;
    }
    struct Task {
        int l;
        Window w;
    };
    std::vector<Task> tasks;
    for (Root root : {Root::lower, Root::upper})
        for (int l = 1; l <= j; ++l)
            for (int a1 = 0; a1 <= 2 * (l - 1); ++a1)
                for (int a2 = 0; a1 + a2 <= 2 * (l - 1); ++a2) tasks.push_back({l, Window{a1, a2, root}});
    std::vector<ClassSum> results(tasks.size());
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < static_cast<long>(tasks.size()); ++t) results[t] = class_sum(j, tasks[t].l, tasks[t].w);
    } else {
        for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = class_sum(j, tasks[t].l, tasks[t].w);
    }
    std::vector<ClassSum> out;
    for (auto& r : results)
        if (r.clusters > 0) out.push_back(std::move(r));
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(j, out);
    return out;
}

RootSums truncated_cumulant_sum(int power, int j, Parity parity, MomentMode mode, const EngineOptions& opts) {
    if (power < 0) throw std::invalid_argument("negative moment power");
    Poly n = Poly::var(Var::n);
    Poly k = middle_index(parity);
    Poly one_plus = Poly(1) + Poly::var(Var::lambda);
    Poly lam_j = Poly::var(Var::lambda, static_cast<unsigned>(j));
    RootSums rs;
    for (const auto& cs : cluster_classes(j, opts)) {
        bool lower_root = cs.window.root == Root::lower;
        Poly top_i = lower_root ? k - Poly(1) : k + Poly(1);
        Poly top_j = lower_root ? n - k + Poly(1) : n - k - Poly(1);
        Poly factor = binomial_poly(top_i, cs.window.a1) * binomial_poly(top_j, cs.window.a2) * BigRat(1, cs.l);
        Poly weight;
        for (const auto& [key, c] : cs.terms) {
            int alpha = key.first + (parity == Parity::odd ? key.second : 0);
            Poly term = one_plus.pow(static_cast<unsigned>(alpha)) * c;
            if (power > 0) {
                Poly m = mode == MomentMode::size ? Poly(j) : (k + Poly(1)) * BigRat(j) - Poly(alpha);
                term *= m.pow(static_cast<unsigned>(power));
            }
            weight += term;
        }
        (lower_root ? rs.lower : rs.upper) += factor * weight * lam_j;
    }
    return rs;
}

std::vector<Poly> cluster_sum(int j, Parity parity, const EngineOptions& opts) {
    RootSums rs = truncated_cumulant_sum(0, j, parity, MomentMode::size, opts);
    if (parity == Parity::even) return {rs.lower + rs.upper};
    return {rs.lower, rs.upper};
}

int symbolic_n_min(int j) { return 2 * (j - 1) + j + 2; }

nlohmann::json dump_classes(int j, const EngineOptions& opts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& cs : cluster_classes(j, opts)) arr.push_back(cs.to_json());
    return {{"j", j}, {"n_min", symbolic_n_min(j)}, {"classes", arr}};
}

namespace {

std::shared_mutex g_ursell_mutex;
std::unordered_map<std::uint64_t, BigRat> g_ursell_memo;

}  // namespace

// c(S) = g(S) - Σ_{T ⊊ S, min S ∈ T} c(T) g(S \ T), where c(S) is the signed count of connected
// spanning edge sets on S and g(S) = Σ_{A ⊆ E(S)} (-1)^{|A|} is 1 iff S spans no edge.
BigRat ursell(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv < 1 || nv > 9) throw ResourceGuardError("Ursell function limited to 1..9 vertices");
    std::vector<std::uint32_t> adj(nv, 0);
    std::uint64_t key = static_cast<std::uint64_t>(nv);
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= nv || b >= nv) throw std::invalid_argument("bad edge");
        int lo = std::min(a, b), hi = std::max(a, b);
        adj[lo] |= 1u << hi;
        adj[hi] |= 1u << lo;
        int idx = hi * (hi - 1) / 2 + lo;
        key |= std::uint64_t(1) << (4 + idx);
    }
    {
        std::shared_lock lock(g_ursell_mutex);
        auto it = g_ursell_memo.find(key);
        if (it != g_ursell_memo.end()) return it->second;
    }
    std::uint32_t full = (1u << nv) - 1;
    std::vector<char> g(full + 1, 1);
    for (std::uint32_t s = 1; s <= full; ++s)
        for (std::uint32_t r = s; r; r &= r - 1)
            if (adj[__builtin_ctz(r)] & s) {
                g[s] = 0;
                break;
            }
    std::vector<long long> c(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = s & -s, rest = s & ~low;
        long long v = g[s];
        // T = low | sub for every proper submask sub of rest
        for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
            if (sub != rest) {
                std::uint32_t other = rest & ~sub;
                if (g[other]) v -= c[low | sub];
            }
            if (sub == 0) break;
        }
        if (rest == 0) v = 1;
        c[s] = v;
    }
    BigInt fact = 1;
    for (int i = 2; i <= nv; ++i) fact *= i;
    BigRat phi(BigInt(static_cast<long>(c[full])), fact);
    phi.canonicalize();
    std::unique_lock lock(g_ursell_mutex);
    g_ursell_memo.emplace(key, phi);
    return phi;
}

namespace {

// Signed count of connected spanning edge sets of a multigraph with loops.
BigInt signed_connected(int nv, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) return nv == 1 ? 1 : 0;
    auto [a, b] = edges.back();
    edges.pop_back();
    if (a == b) return 0;  // a loop pairs each edge set with one of opposite sign
    BigInt without = signed_connected(nv, edges);
    // contract b into a, relabel the last vertex as b
    int last = nv - 1;
    std::vector<std::pair<int, int>> contracted;
    auto relabel = [&](int x) {
        if (x == b) x = a;
        if (x == last) x = b == last ? a : b;
        return x;
    };
    int na = relabel(a);
    (void)na;
    for (auto [u, v] : edges) contracted.emplace_back(relabel(u), relabel(v));
    return without - signed_connected(nv - 1, contracted);
}

}  // namespace

BigRat ursell_deletion_contraction(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv < 1 || nv > 7) throw ResourceGuardError("deletion-contraction limited to 7 vertices");
    BigInt fact = 1;
    for (int i = 2; i <= nv; ++i) fact *= i;
    BigRat r(signed_connected(nv, edges), fact);
    r.canonicalize();
    return r;
}

}  // namespace dedekind
