#include "dedekind/golden.hpp"

#include <map>
#include <tuple>

namespace dedekind {

const std::vector<GoldenValue>& tabulated_values() {
    static const std::vector<GoldenValue> v = {
        {Kind::P, Parity::even, 3, 0, "1/512 n^4 - 1/384 n^3 - 5/128 n^2 + 7/96 n + 1/3", {}},
        {Kind::P, Parity::odd, 3, 1, "11/512 n^4 - 1/192 n^3 - 181/768 n^2 + 1/192 n + 841/1536", {}},
        {Kind::P, Parity::odd, 3, 2, "-1/256 n^4 - 1/96 n^3 + 17/384 n^2 + 9/32 n + 401/768", {}},
        {Kind::P, Parity::even, 4, 0, "1/6144 n^6 + 1/3072 n^4 - 25/1536 n^3 + 3/128 n^2 + 1/96 n - 1/4", {}},
        {Kind::P, Parity::odd, 4, 1,
         "225/32768 n^6 - 39/4096 n^5 - 9113/98304 n^4 - 803/6144 n^3 + 62537/98304 n^2 + 1723/12288 n - 26225/32768", {}},
        {Kind::P, Parity::odd, 4, 2,
         "-45/32768 n^6 + 9/8192 n^5 + 4153/98304 n^4 + 233/12288 n^3 - 27709/98304 n^2 - 10477/24576 n - 13095/32768", {}},
        {Kind::R, Parity::even, 2, 0,
         "-(n^2(n+2)(n+6)β^3 + n(n+2)(n^2-14n+8)β^2 + 16n^2β)/(8(n+2)^2(1-β))", {}},
        // The printed bracket opens "2 ((" without closing the inner parenthesis; the factor 2
        // belongs to the leading term only.
        {Kind::R, Parity::odd, 2, 1,
         "(2(n-1)(n+1)(n+3)β^5 - (n-1)(n+3)(n^2+12n-1)β^4 + 4(n-1)(5n^2+18n+5)β^3"
         " + (n+1)(n^3-11n^2-53n+31)β^2 + 16(n+1)^2β)/(8(n+3)^2(β-1)^3)",
         {"(2((n-1)(n+1)(n+3)β^5 - (n-1)(n+3)(n^2+12n-1)β^4 + 4(n-1)(5n^2+18n+5)β^3)"
          " + (n+1)(n^3-11n^2-53n+31)β^2 + 16(n+1)^2β)/(8(n+3)^2(β-1)^3)",
          "2((n-1)(n+1)(n+3)β^5 - (n-1)(n+3)(n^2+12n-1)β^4 + 4(n-1)(5n^2+18n+5)β^3"
          " + (n+1)(n^3-11n^2-53n+31)β^2 + 16(n+1)^2β)/(8(n+3)^2(β-1)^3)"}},
        {Kind::R, Parity::even, 3, 0,
         "(n^2(n+2)^2(3n^3+28n^2+132n+112)β^6 + 3n^2(n+2)^2(n^3-28n^2-212n+16)β^5"
         " - n(n+2)^2(3n^4+36n^3-1308n^2+656n-128)β^4"
         " - n(3n^6-72n^5+384n^4+3504n^3+2640n^2-3136n+512)β^3"
         " - 96n^2(n+2)(n^2-14n+8)β^2 - 512n^3β)/(192(n+2)^3(β-1)^3)",
         {}},
        {Kind::R, Parity::odd, 3, 1,
         "-(8(n-1)(n+1)(n+3)^2(n^2-6n-19)β^9 + 3(n-1)(n+1)(n+3)^2(n^3+3n^2+167n+117)β^8"
         " - 2(n-1)(n+3)^2(3n^4+90n^3+1068n^2+566n+225)β^7"
         " - 2(n-1)(3n^6-118n^5-3227n^4-16452n^3-24739n^2-4166n-2501)β^6"
         " + 12(n-1)(n^6+10n^5-497n^4-3564n^3-6409n^2-1310n-7)β^5"
         " + (3n^7-309n^6+2499n^5+30275n^4+51089n^3-37383n^2-39255n+1273)β^4"
         " - 2(n+1)(3n^6-66n^5+81n^4+6180n^3+13269n^2-10018n-3305)β^3"
         " - 192(n+1)^2(n^3-11n^2-45n+23)β^2 - 1024(n+1)^3β)/(384(n+3)^3(β-1)^6)",
         {}},
    };
    return v;
}

const std::vector<GoldenValue>& classical_values() {
    static const std::vector<GoldenValue> v = {
        {Kind::P, Parity::even, 1, 0, "1", {}},
        {Kind::P, Parity::even, 2, 0, "(n^2-2n-16)/32", {}},
        {Kind::P, Parity::odd, 1, 1, "1", {}},
        {Kind::P, Parity::odd, 2, 1, "(3n^2-19)/32", {}},
        {Kind::P, Parity::odd, 1, 2, "1/2", {}},
        {Kind::P, Parity::odd, 2, 2, "(n+5)/8", {}},
    };
    return v;
}

const std::vector<GoldenValue>& first_order_values() {
    static const std::vector<GoldenValue> v = {
        {Kind::R, Parity::even, 1, 0, "2βn/(n+2)", {}},
        {Kind::R, Parity::odd, 1, 1, "β/(1-β) + ((n-1)/(n+3))β", {}},
    };
    return v;
}

std::string GoldenCheck::label() const {
    return std::string(kind_name(golden.kind)) + "_" + std::to_string(golden.j) + "^" + std::to_string(golden.branch);
}

std::vector<GoldenCheck> check_golden(const std::vector<GoldenValue>& values, const PipelineOptions& opts) {
    // group requests so each family is computed once
    std::map<std::tuple<Kind, Parity, int>, std::vector<CoefficientFamily>> cache;
    auto lookup = [&](const GoldenValue& g) -> RationalFn {
        auto key = std::make_tuple(g.kind, g.parity, g.j);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<CoefficientFamily> fams;
            if (g.kind == Kind::P) fams = compute_P(g.j, g.parity, opts);
            else if (g.kind == Kind::S) fams = compute_S(g.j, g.parity, opts);
            else if (g.kind == Kind::F) fams = {compute_F(g.j, g.parity, opts)};
            else if (g.kind == Kind::B) fams = compute_B(g.j, g.parity, opts);
            else fams = compute_R(g.j + 1, g.parity, opts);
            it = cache.emplace(key, fams).first;
        }
        for (const auto& f : it->second)
            if (f.j == g.j && f.branch == g.branch) return f.value;
        throw std::invalid_argument("no computed family for golden value");
    };
    std::vector<GoldenCheck> out;
    for (const auto& g : values) {
        GoldenCheck c;
        c.golden = g;
        c.expected = parse_rational_fn(g.expression);
        c.computed = lookup(g);
        c.match = c.expected == c.computed;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace dedekind
