#include "dedekind/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dedekind {

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxGround) throw LatticeError("ground set size out of range: " + std::to_string(n));
}

Bits full_mask(int n) { return n == 32 ? ~Bits(0) : ((Bits(1) << n) - 1); }

struct Dsu {
    std::vector<int> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

VertexSet::VertexSet(int n) : n_(n) { check_n(n); }

VertexSet::VertexSet(int n, std::vector<Bits> elems) : n_(n), elems_(std::move(elems)) {
    check_n(n);
    Bits mask = full_mask(n);
    for (Bits b : elems_)
        if (b & ~mask) throw LatticeError("element outside ground set");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool VertexSet::contains(Bits b) const { return std::binary_search(elems_.begin(), elems_.end(), b); }

void VertexSet::insert(Bits b) {
    if (b & ~full_mask(n_)) throw LatticeError("element outside ground set");
    auto it = std::lower_bound(elems_.begin(), elems_.end(), b);
    if (it == elems_.end() || *it != b) elems_.insert(it, b);
}

int VertexSet::common_layer() const {
    if (elems_.empty()) return -1;
    int k = __builtin_popcount(elems_.front());
    for (Bits b : elems_)
        if (__builtin_popcount(b) != k) throw LatticeError("mixed-layer input");
    return k;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Bits> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return VertexSet(std::max(a.n(), b.n()), std::move(r));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Bits> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return VertexSet(std::max(a.n(), b.n()), std::move(r));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Bits> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return VertexSet(a.n(), std::move(r));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

VertexSet layer(int n, int k) {
    check_n(n);
    if (k < 0 || k > n) throw LatticeError("layer index out of range");
    std::vector<Bits> r;
    r.reserve(binomial(n, k));
    if (k == 0) {
        r.push_back(0);
    } else {
        // Gosper's hack walks the k-subsets in increasing order.
        Bits v = (Bits(1) << k) - 1, limit = Bits(1) << n;
        while (v < limit) {
            r.push_back(v);
            Bits c = v & -v, s = v + c;
            v = (((v ^ s) >> 2) / c) | s;
        }
    }
    return VertexSet(n, std::move(r));
}

VertexSet layers(int n, int lo, int hi) {
    VertexSet r(n);
    for (int k = std::max(lo, 0); k <= std::min(hi, n); ++k) r = set_union(r, layer(n, k));
    return r;
}

VertexSet up_shadow(const VertexSet& s) {
    int k = s.common_layer();
    if (k == s.n()) throw LatticeError("up shadow of the top layer");
    std::vector<Bits> r;
    for (Bits v : s)
        for (int i = 0; i < s.n(); ++i)
            if (!(v >> i & 1u)) r.push_back(v | (Bits(1) << i));
    return VertexSet(s.n(), std::move(r));
}

VertexSet down_shadow(const VertexSet& s) {
    int k = s.common_layer();
    if (k == 0) throw LatticeError("down shadow of the bottom layer");
    std::vector<Bits> r;
    for (Bits v : s)
        for (int i = 0; i < s.n(); ++i)
            if (v >> i & 1u) r.push_back(v & ~(Bits(1) << i));
    return VertexSet(s.n(), std::move(r));
}

VertexSet two_sided_shadow(const VertexSet& a, int k) {
    std::vector<Bits> lo, hi;
    for (Bits v : a) {
        int l = __builtin_popcount(v);
        if (l == k - 1) lo.push_back(v);
        else if (l == k + 1) hi.push_back(v);
        else throw LatticeError("element outside the two flanking layers");
    }
    VertexSet r(a.n());
    if (!lo.empty()) r = set_union(r, up_shadow(VertexSet(a.n(), lo)));
    if (!hi.empty()) r = set_union(r, down_shadow(VertexSet(a.n(), hi)));
    return r;
}

bool Ambient::contains(Bits b) const {
    int l = __builtin_popcount(b);
    return l >= lo && l <= hi && (b & ~full_mask(n)) == 0;
}

bool Ambient::linked(Bits u, Bits v) const {
    if (u == v) return false;
    if (comparable(u, v)) return true;
    // A common neighbour lies above u|v or below u&v; for incomparable u, v the
    // ranks of u|v and u&v are strictly outside those of u and v.
    return __builtin_popcount(u | v) <= hi || __builtin_popcount(u & v) >= lo;
}

std::vector<VertexSet> two_linked_components(const VertexSet& s, const Ambient& ambient) {
    const auto& e = s.elements();
    for (Bits b : e)
        if (!ambient.contains(b)) throw LatticeError("element outside ambient layers");
    Dsu dsu(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (ambient.linked(e[i], e[j])) dsu.unite(static_cast<int>(i), static_cast<int>(j));
    std::vector<int> root_index(e.size(), -1);
    std::vector<std::vector<Bits>> parts;
    for (std::size_t i = 0; i < e.size(); ++i) {
        int r = dsu.find(static_cast<int>(i));
        if (root_index[r] < 0) {
            root_index[r] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[root_index[r]].push_back(e[i]);
    }
    std::vector<VertexSet> out;
    for (auto& p : parts) out.emplace_back(s.n(), std::move(p));
    return out;
}

bool is_two_linked(const VertexSet& s, const Ambient& ambient) {
    return two_linked_components(s, ambient).size() <= 1;
}

VertexSet closure(const VertexSet& a) {
    int k = a.common_layer();
    if (k < 0) return a;
    VertexSet up = up_shadow(a);
    std::vector<Bits> r;
    for (Bits v : layer(a.n(), k)) {
        bool inside = true;
        for (int i = 0; i < a.n() && inside; ++i)
            if (!(v >> i & 1u) && !up.contains(v | (Bits(1) << i))) inside = false;
        if (inside) r.push_back(v);
    }
    return VertexSet(a.n(), std::move(r));
}

VertexSet interior(const VertexSet& a) {
    int k = a.common_layer();
    if (k <= 0) return VertexSet(a.n());
    std::vector<Bits> r;
    for (Bits v : layer(a.n(), k - 1)) {
        bool inside = true;
        for (int i = 0; i < a.n() && inside; ++i)
            if (!(v >> i & 1u) && !a.contains(v | (Bits(1) << i))) inside = false;
        if (inside) r.push_back(v);
    }
    return VertexSet(a.n(), std::move(r));
}

bool is_antichain(const VertexSet& s) {
    const auto& e = s.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (comparable(e[i], e[j])) return false;
    return true;
}

VertexSet restrict_below(const VertexSet& y, const VertexSet& x) {
    std::vector<Bits> r;
    for (Bits v : y) {
        bool below = false;
        for (Bits w : x)
            if (v != w && (v & w) == v) {
                below = true;
                break;
            }
        if (!below) r.push_back(v);
    }
    return VertexSet(y.n(), std::move(r));
}

}  // namespace dedekind
