#include <doctest.h>

#include <random>

#include "dedekind/cluster.hpp"
#include "dedekind/series.hpp"

using namespace dedekind;

namespace {

BigRat Q(long a, long b) {
    BigRat r(a, b);
    r.canonicalize();
    return r;
}

const Poly lam = Poly::var(Var::lambda);

std::vector<std::pair<int, int>> graph_from_mask(int nv, std::uint32_t mask) {
    std::vector<std::pair<int, int>> e;
    int idx = 0;
    for (int b = 1; b < nv; ++b)
        for (int a = 0; a < b; ++a, ++idx)
            if (mask >> idx & 1) e.emplace_back(a, b);
    return e;
}

BigRat at(const Poly& p, long n, const BigRat& l) { return p.evaluate({{Var::n, BigRat(n)}, {Var::lambda, l}}); }

}  // namespace

TEST_CASE("Ursell function on small graphs") {
    CHECK(ursell(1, {}) == 1);
    CHECK(ursell(2, {{0, 1}}) == Q(-1, 2));
    CHECK(ursell(3, {{0, 1}, {1, 2}}) == Q(1, 6));
    CHECK(ursell(3, {{0, 1}, {1, 2}, {0, 2}}) == Q(1, 3));
    CHECK(ursell(3, {{0, 1}}) == 0);
    CHECK(ursell(4, graph_from_mask(4, 0b111111)) == Q(-6, 24));
}

TEST_CASE("Ursell recursion matches deletion-contraction on every graph up to five vertices") {
    for (int nv = 1; nv <= 5; ++nv) {
        int m = nv * (nv - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            auto e = graph_from_mask(nv, mask);
            CHECK(ursell(nv, e) == ursell_deletion_contraction(nv, e));
        }
    }
}

TEST_CASE("Ursell recursion matches edge-subset enumeration up to six vertices") {
    std::mt19937_64 rng(4);
    for (int nv = 1; nv <= 4; ++nv) {
        int m = nv * (nv - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
            CHECK(ursell(nv, graph_from_mask(nv, mask)) == ursell_bruteforce(nv, graph_from_mask(nv, mask)));
    }
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 5 + trial % 2;
        std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1u << (nv * (nv - 1) / 2)) - 1);
        CHECK(ursell(nv, graph_from_mask(nv, mask)) == ursell_bruteforce(nv, graph_from_mask(nv, mask)));
    }
}

TEST_CASE("window tagging") {
    Window w{2, 2, Root::lower};
    CHECK(w.tag(0) == LayerTag::lower);
    CHECK(w.tag(0b1100) == LayerTag::upper);
    CHECK(w.tag(0b0101) == LayerTag::lower);
    CHECK_FALSE(w.tag(0b0100));
    CHECK_FALSE(w.tag(0b10000));
    Window u{2, 2, Root::upper};
    CHECK(u.tag(0) == LayerTag::upper);
    CHECK(u.tag(0b0011) == LayerTag::lower);
    for (auto d : w.vertices()) CHECK(w.tag(d).has_value());
}

TEST_CASE("in-window shadows and the shadow relation") {
    Window w{1, 2, Root::lower};
    WindowVertex root{LayerTag::lower, 0};
    // root lower has window set {0}; slots add one window coordinate
    CHECK(in_window_shadow(w, root) == std::vector<std::uint32_t>{0b011, 0b101});
    WindowVertex up{LayerTag::upper, 0b110};
    CHECK(shadows_meet(w, root, up));
    WindowVertex up2{LayerTag::upper, 0b011};  // window set {1}: root coordinate 0 dropped
    CHECK_FALSE(shadows_meet(w, root, up2));
    WindowVertex low{LayerTag::lower, 0b011};
    CHECK(shadows_meet(w, root, low));
    Polymer a{{root, low}};
    ShadowSize s = shadow_size_linear(w, a);
    CHECK(s.lower_vertices == 2);
    CHECK(s.overlap == 1);
    // |∂A| = 2(n-k+1) - 1 at even n
    CHECK(s.as_poly(Parity::even).evaluate({{Var::n, BigRat(8)}}) == 9);
}

TEST_CASE("first cluster sums") {
    CHECK(cluster_sum(1, Parity::even)[0] == lam * BigRat(2));
    auto odd = cluster_sum(1, Parity::odd);
    CHECK(odd[0] == lam * (Poly(1) + lam));
    CHECK(odd[1] == lam);
    CHECK(symbolic_n_min(1) == 3);
    CHECK(symbolic_n_min(3) == 9);
}

TEST_CASE("cluster sums have the expected degrees") {
    for (int j = 1; j <= 3; ++j) {
        Poly s = cluster_sum(j, Parity::even)[0];
        CHECK(s.degree(Var::n) <= 2 * (j - 1));
        CHECK(s.coefficient(Var::lambda, j - 1).is_zero());
        for (const auto& cs : cluster_classes(j)) {
            CHECK(cs.max_alpha(Parity::even) <= cs.max_alpha(Parity::odd));
            CHECK(cs.window.width() <= 2 * (cs.l - 1));
        }
    }
}

TEST_CASE("class sums are invariant under permuting window coordinates") {
    // the class depends only on (root, a1, a2); enumerating from a relabelled vertex list
    // gives the same coefficients
    Window w{2, 2, Root::lower};
    auto base = class_sum(3, 3, w);
    auto clusters = enumerate_cluster_class(3, 3, w);
    std::map<std::pair<int, int>, BigRat> terms;
    for (const auto& c : clusters) terms[{c.overlap, c.lower_multiplicity}] += c.phi;
    for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
    CHECK(terms == base.terms);
    CHECK(base.clusters == clusters.size());
    // swapping the two J coordinates permutes clusters
    for (const auto& c : clusters) {
        bool root_in = false;
        for (const auto& p : c.tuple)
            for (const auto& v : p.vertices) {
                std::uint32_t d = v.delta;
                std::uint32_t s = (d & 0b0011) | ((d >> 1) & 0b0100) | ((d << 1) & 0b1000);
                CHECK(w.tag(s) == v.layer_tag);
                if (s == 0) root_in = true;
            }
        CHECK(root_in);
    }
}

TEST_CASE("serial and parallel class enumeration agree") {
    clear_cluster_cache();
    EngineOptions serial;
    serial.parallel = false;
    auto a = cluster_classes(3, serial);
    clear_cluster_cache();
    auto b = cluster_classes(3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].terms == b[i].terms);
        CHECK(a[i].clusters == b[i].clusters);
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(cluster_classes(7), ResourceGuardError);
    CHECK_THROWS_AS(cluster_classes(6), ResourceGuardError);
    CHECK_THROWS_AS(class_sum(2, 1, Window{1, 0, Root::lower}), std::invalid_argument);
}

TEST_CASE("symbolic cluster sums equal literal sums in B_8") {
    const int n = 8, k = 4;
    for (int j = 1; j <= 2; ++j)
        for (BigRat l : {BigRat(1), Q(1, 2)}) {
            LiteralClusterSum lit = literal_cluster_sum(n, j, l);
            BigRat decay = 1;
            for (int i = 0; i < j * (k + 1); ++i) decay /= (1 + l);
            BigRat binom = binomial(n, k - 1);
            RootSums w0 = truncated_cumulant_sum(0, j, Parity::even, MomentMode::size);
            RootSums w1 = truncated_cumulant_sum(1, j, Parity::even, MomentMode::size);
            RootSums sh = truncated_cumulant_sum(1, j, Parity::even, MomentMode::shadow);
            INFO("j=" << j << " lambda=" << l.get_str());
            CHECK(lit.weight == binom * at(w0.lower + w0.upper, n, l) * decay);
            CHECK(lit.size_moment == binom * at(w1.lower + w1.upper, n, l) * decay);
            CHECK(lit.shadow_moment == binom * at(sh.lower + sh.upper, n, l) * decay);
        }
}

TEST_CASE("class JSON dump") {
    auto j = dump_classes(2);
    CHECK(j["j"] == 2);
    CHECK(j["classes"].size() > 0);
    CHECK(j["classes"][0].contains("terms"));
}
