#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dedekind {

using Bits = std::uint32_t;

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxGround = 24;

struct LatticeElement {
    Bits bits = 0;
    int n = 0;

    int layer() const { return __builtin_popcount(bits); }
    bool operator==(const LatticeElement&) const = default;
};

// Finite set of elements of B_n kept sorted by bit pattern.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    VertexSet(int n, std::vector<Bits> elems);

    int n() const { return n_; }
    const std::vector<Bits>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(Bits b) const;
    void insert(Bits b);

    // Common layer of all elements, or -1 when empty; throws on mixed layers.
    int common_layer() const;

    bool operator==(const VertexSet&) const = default;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    int n_ = 0;
    std::vector<Bits> elems_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

inline bool comparable(Bits u, Bits v) { return (u & v) == u || (u & v) == v; }

std::uint64_t binomial(int n, int k);

VertexSet layer(int n, int k);
VertexSet layers(int n, int lo, int hi);
VertexSet up_shadow(const VertexSet& s);
VertexSet down_shadow(const VertexSet& s);
// Elements of L_k comparable to some element of a, where a lies in L_{k-1} and L_{k+1}.
VertexSet two_sided_shadow(const VertexSet& a, int k);

// Comparability graph of B_n induced on the consecutive layers lo..hi.
struct Ambient {
    int n;
    int lo;
    int hi;
    bool contains(Bits b) const;
    // Adjacent in the square of the induced graph.
    bool linked(Bits u, Bits v) const;
};

std::vector<VertexSet> two_linked_components(const VertexSet& s, const Ambient& ambient);
bool is_two_linked(const VertexSet& s, const Ambient& ambient);

VertexSet closure(const VertexSet& a);
VertexSet interior(const VertexSet& a);
bool is_antichain(const VertexSet& s);

// Y^X: elements of y not strictly below any element of x.
VertexSet restrict_below(const VertexSet& y, const VertexSet& x);

}  // namespace dedekind
