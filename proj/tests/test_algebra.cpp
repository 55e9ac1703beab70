#include <doctest.h>

#include <random>

#include "dedekind/series.hpp"

using namespace dedekind;

namespace {

Poly random_poly(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> ex(0, 3), co(-9, 9), de(1, 5);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Exponent e{};
        e[0] = static_cast<std::uint16_t>(ex(rng));
        e[1] = static_cast<std::uint16_t>(ex(rng));
        e[2] = static_cast<std::uint16_t>(ex(rng) % 2);
        p += Poly::monomial(e, BigRat(co(rng), de(rng)));
    }
    return p;
}

std::map<Var, BigRat> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> co(-7, 7), de(1, 4);
    return {{Var::n, BigRat(co(rng), de(rng))}, {Var::lambda, BigRat(co(rng), de(rng))}, {Var::beta, BigRat(co(rng), de(rng))}};
}

const Poly n = Poly::var(Var::n);
const Poly lam = Poly::var(Var::lambda);
const Poly beta = Poly::var(Var::beta);

}  // namespace

TEST_CASE("rationals are reduced with positive denominator") {
    BigRat r(6, -4);
    r.canonicalize();
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(parse_rational("0.125") == BigRat(1, 8));
    CHECK(parse_rational("-3/9") == BigRat(-1, 3));
}

TEST_CASE("polynomial ring axioms hold on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 3), c = random_poly(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Poly());
        auto pt = random_point(rng);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("no zero coefficients are stored") {
    Poly p = n + lam - n;
    CHECK(p.size() == 1);
    CHECK((p - lam).is_zero());
}

TEST_CASE("derivative matches exact difference quotients") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng, 5);
        // p(x+h) - p(x) - h p'(x) is divisible by h^2
        Poly h = Poly::var(Var::Y);
        Poly shifted = p.substitute(Var::lambda, lam + h);
        Poly rem = shifted - p - h * p.derivative(Var::lambda);
        CHECK(rem.coefficient(Var::Y, 0).is_zero());
        CHECK(rem.coefficient(Var::Y, 1).is_zero());
    }
    CHECK((Poly(2) * lam).derivative(Var::lambda) == Poly(2));
}

TEST_CASE("substitution") {
    CHECK((lam * (Poly(1) + lam)).substitute(Var::lambda, BigRat(1)) == Poly(2));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, 5);
        BigRat a(3, 7), b(-2, 5);
        CHECK(p.substitute(Var::n, a).substitute(Var::lambda, b) == p.substitute(Var::lambda, b).substitute(Var::n, a));
    }
    LambdaSubstitution s = substitute_lambda(lam * lam);
    CHECK(s.c == 2);
    CHECK(s.g == (beta + Poly::var(Var::X)).pow(2));
}

TEST_CASE("binomial polynomials") {
    CHECK(binomial_poly(n, 0) == Poly(1));
    CHECK(binomial_poly(Poly(-2), 1) == Poly(-2));
    Poly k_minus_1 = n * BigRat(1, 2) - Poly(BigRat(1, 2));
    CHECK(binomial_poly(k_minus_1, 2) == (n * n - Poly(4) * n + Poly(3)) * BigRat(1, 8));
    for (int top = -4; top <= 6; ++top)
        for (int r = 0; r <= 4; ++r) {
            BigRat expect = 1;
            for (int i = 0; i < r; ++i) expect = expect * (top - i) / (i + 1);
            CHECK(binomial_poly(Poly(top), r) == Poly(expect));
        }
}

TEST_CASE("inverse power series coefficients") {
    Poly ell = n + Poly(2);
    auto c = series_inv_power(ell, 3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Poly(1));
    CHECK(c[1] == -ell);
    CHECK(c[2] == ell * (ell + Poly(1)) * BigRat(1, 2));
    CHECK(series_inv_power(ell, 1).size() == 1);
}

TEST_CASE("log correction coefficients") {
    auto c = series_log_correction(4);
    CHECK(c[1].is_zero());
    CHECK(c[2] == RationalFn(Poly(1) - beta, beta * BigRat(2)));
    CHECK(series_log_correction(1).size() == 1);
    // ln(1+X) - beta ln(1+X/beta) at beta = 1/2, X = 1/10, against a long exact partial sum
    auto d = series_log_correction(12);
    BigRat b(1, 2), x(1, 10), sum = 0, xp = 1;
    for (std::size_t i = 1; i < d.size(); ++i) {
        xp *= x;
        sum += d[i].evaluate({{Var::beta, b}}) * xp;
    }
    double exact = std::log1p(0.1) - 0.5 * std::log1p(0.2);
    CHECK(sum.get_d() == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("rational functions") {
    RationalFn a(n + Poly(1), n + Poly(3));
    RationalFn b(n, n + Poly(3));
    CHECK(a - b == RationalFn(Poly(1), n + Poly(3)));
    CHECK(a * RationalFn(n + Poly(3)) == RationalFn(n + Poly(1)));
    CHECK((a / a) == RationalFn(1));
    RationalFn c(beta, Poly(1) - beta);
    CHECK(c.derivative(Var::beta) == RationalFn(Poly(1), (Poly(1) - beta).pow(2)));
    CHECK(c.substitute(Var::beta, BigRat(1, 4)) == RationalFn(BigRat(1, 3)));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, 3), q = random_poly(rng, 2) * n + Poly(7);
        RationalFn f(p, q);
        auto pt = random_point(rng);
        if (q.evaluate(pt) == 0) continue;
        CHECK(f.evaluate(pt) == p.evaluate(pt) / q.evaluate(pt));
        CHECK(RationalFn::from_json(f.to_json()) == f);
    }
}

TEST_CASE("polynomial JSON round trip and text form") {
    Poly p = n.pow(4) * BigRat(1, 512) - n.pow(3) * BigRat(1, 384) + Poly(BigRat(1, 3));
    CHECK(Poly::from_json(p.to_json()) == p);
    CHECK(p.to_string() == "1/512*n^4 - 1/384*n^3 + 1/3");
    CHECK(parse_rational_fn(p.to_string()) == RationalFn(p));
}

TEST_CASE("parser accepts tabulated-style input") {
    RationalFn r = parse_rational_fn("2βn/(n+2)");
    CHECK(r == RationalFn(beta * n * BigRat(2), n + Poly(2)));
    CHECK(parse_rational_fn("\\beta/(1 − \\beta)") == RationalFn(beta, Poly(1) - beta));
    CHECK(parse_rational_fn("(n-1)^2") == RationalFn((n - Poly(1)).pow(2)));
    CHECK_THROWS_AS(parse_rational_fn("n +"), AlgebraError);
}

TEST_CASE("truncated series multiplication matches truncated polynomial product") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Poly a = random_poly(rng, 3), b = random_poly(rng, 3);
        TruncatedSeries sa(4), sb(4);
        Poly pa, pb;
        for (int j = 0; j < 4; ++j) {
            Poly ca = a.coefficient(Var::n, j), cb = b.coefficient(Var::lambda, j);
            sa.set_coeff(j, RationalFn(ca));
            sb.set_coeff(j, RationalFn(cb));
            pa += ca * Poly::var(Var::Y, j);
            pb += cb * Poly::var(Var::Y, j);
        }
        TruncatedSeries prod = sa * sb;
        Poly full = pa * pb;
        for (int j = 0; j < 4; ++j) CHECK(prod.coeff(j) == RationalFn(full.coefficient(Var::Y, j)));
    }
}

TEST_CASE("series composition") {
    // 1/(1-s) with s = Y truncated at order 5
    std::vector<RationalFn> geo(5, RationalFn(1));
    TruncatedSeries r = compose(geo, TruncatedSeries::marker(5));
    for (int j = 0; j < 5; ++j) CHECK(r.coeff(j) == RationalFn(1));
    CHECK(r.shift(2).coeff(1).is_zero());
    CHECK(r.shift(2).coeff(4) == RationalFn(1));
}
