#include <doctest.h>

#include <random>

#include "dedekind/isoperimetry.hpp"
#include "dedekind/lattice.hpp"

using namespace dedekind;

namespace {

// {1,2} -> bits 0 and 1
Bits S(std::initializer_list<int> xs) {
    Bits b = 0;
    for (int x : xs) b |= Bits(1) << (x - 1);
    return b;
}

VertexSet VS(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Bits> v;
    for (auto s : sets) v.push_back(S(s));
    return VertexSet(n, v);
}

}  // namespace

TEST_CASE("layers") {
    CHECK(layer(2, 1) == VS(2, {{1}, {2}}));
    CHECK(layer(4, 2).size() == 6);
    CHECK(layer(6, 3).size() == 20);
    CHECK(layer(24, 12).size() == binomial(24, 12));
    CHECK_THROWS_AS(layer(4, 5), LatticeError);
    CHECK_THROWS_AS(layer(25, 1), LatticeError);
    auto l = layer(6, 3).elements();
    CHECK(std::is_sorted(l.begin(), l.end()));
}

TEST_CASE("shadows") {
    CHECK(up_shadow(VS(4, {{1, 2}})) == VS(4, {{1, 2, 3}, {1, 2, 4}}));
    CHECK(up_shadow(VertexSet(3, {0})) == VS(3, {{1}, {2}, {3}}));
    CHECK(up_shadow(VS(4, {{1, 2}, {1, 3}})) == VS(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
    CHECK(down_shadow(VS(4, {{1, 2, 3}})) == VS(4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK_THROWS_AS(up_shadow(VS(4, {{1}, {1, 2}})), LatticeError);
    CHECK(two_sided_shadow(VS(5, {{1, 2}}), 3).size() == 3);
    CHECK(two_sided_shadow(VS(5, {{1, 2, 3, 4}}), 3).size() == 4);
    CHECK(two_sided_shadow(VertexSet(5), 3).empty());
    CHECK_THROWS_AS(two_sided_shadow(VS(5, {{1}}), 3), LatticeError);
}

TEST_CASE("shadows are monotone") {
    std::mt19937_64 rng(1);
    auto l = layer(7, 3).elements();
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Bits> a, b;
        for (Bits v : l) {
            bool in_b = rng() % 3 == 0;
            if (in_b) {
                b.push_back(v);
                if (rng() % 2) a.push_back(v);
            }
        }
        if (a.empty()) continue;
        CHECK(is_subset(up_shadow(VertexSet(7, a)), up_shadow(VertexSet(7, b))));
        CHECK(is_subset(down_shadow(VertexSet(7, a)), down_shadow(VertexSet(7, b))));
    }
}

TEST_CASE("two-linked components") {
    Ambient amb{4, 2, 3};
    CHECK(two_linked_components(VS(4, {{1, 2}, {1, 3}}), amb).size() == 1);
    CHECK(two_linked_components(VS(4, {{1, 2}, {3, 4}}), amb).size() == 2);
    CHECK(two_linked_components(VS(4, {{1, 2}}), amb).size() == 1);
    CHECK(two_linked_components(VertexSet(4), amb).empty());
    // {1,2} and {3,4} first share a neighbour once the empty set is in range.
    CHECK(two_linked_components(VS(4, {{1, 2}, {3, 4}}), Ambient{4, 1, 3}).size() == 2);
    CHECK(two_linked_components(VS(4, {{1, 2}, {3, 4}}), Ambient{4, 0, 3}).size() == 1);
}

TEST_CASE("linked agrees with distance two in the induced graph") {
    for (int n = 3; n <= 6; ++n)
        for (int lo = 0; lo + 1 <= n; ++lo) {
            Ambient amb{n, lo, lo + 1};
            auto verts = layers(n, lo, lo + 1).elements();
            for (Bits u : verts)
                for (Bits v : verts) {
                    if (u == v) continue;
                    bool d2 = comparable(u, v);
                    for (Bits w : verts)
                        if (w != u && w != v && comparable(u, w) && comparable(v, w)) d2 = true;
                    CHECK(amb.linked(u, v) == d2);
                }
        }
}

TEST_CASE("closure and interior") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            VertexSet l = layer(n, k);
            CHECK(closure(l) == l);
            CHECK(interior(l) == layer(n, k - 1));
        }
    CHECK(interior(VS(5, {{1, 2}})).empty());
    VertexSet a = up_shadow(VS(4, {{1}}));
    CHECK(interior(a).contains(S({1})));
    std::mt19937_64 rng(2);
    auto l = layer(6, 2).elements();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Bits> s;
        for (Bits v : l)
            if (rng() % 4 == 0) s.push_back(v);
        if (s.empty()) continue;
        VertexSet a2(6, s);
        VertexSet c = closure(a2);
        CHECK(is_subset(a2, c));
        CHECK(closure(c) == c);
    }
}

TEST_CASE("antichain test") {
    CHECK_FALSE(is_antichain(VertexSet(3, {0, S({1})})));
    CHECK(is_antichain(layer(5, 2)));
    CHECK(is_antichain(VS(3, {{1}, {2, 3}})));
}

TEST_CASE("restriction below an upper set") {
    VertexSet y = layer(4, 2);
    VertexSet x = VS(4, {{1, 2, 3}});
    VertexSet r = restrict_below(y, x);
    CHECK(r.size() == 3);
    CHECK_FALSE(r.contains(S({1, 2})));
    CHECK(r.contains(S({1, 4})));
}

TEST_CASE("shadow inequalities on small layers") {
    for (const auto& c : check_shadow_bounds()) {
        INFO(c.name << " " << c.first_violation);
        CHECK(c.checked > 0);
        if (c.asserted) CHECK(c.passed());
    }
}

TEST_CASE("two-linked set counts") {
    // star K_{1,3}: connected sets of size 2 through a leaf = 1, through the centre = 3
    std::vector<std::uint64_t> star{0b1110, 0b0001, 0b0001, 0b0001};
    CHECK(count_connected_containing(star, 0, 2) == 3);
    CHECK(count_connected_containing(star, 1, 2) == 1);
    CHECK(count_connected_containing(star, 1, 3) == 2);
    for (const auto& c : check_two_linked_counts(6, 3)) {
        INFO(c.name << " " << c.first_violation);
        CHECK(c.passed());
    }
}
