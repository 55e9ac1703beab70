#include <doctest.h>

#include <sstream>

#include "dedekind/eval.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/oracle.hpp"

using namespace dedekind;

namespace {

BigRat Q(long a, long b) {
    BigRat r(a, b);
    r.canonicalize();
    return r;
}

double as_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("closed-form estimate at n = 6") {
    Real log_est = eval_log_psi(6, {Theorem::korshunov, Parity::even, 1});
    // 20 ln 2 + 15 (2^{-3} + 2^{-8})
    Real expect = 20 * boost::multiprecision::log(Real(2)) + Real(15) * (Real(1) / 8 + Real(1) / 256);
    CHECK(boost::multiprecision::abs(log_est - expect) < Real("1e-50"));
    double log_ratio = as_double(log_est / boost::multiprecision::log(Real(7828354)));
    double ratio = as_double(boost::multiprecision::exp(log_est) / Real(7828354));
    CHECK(log_ratio > 0.95);
    CHECK(log_ratio < 1.05);
    CHECK(ratio > 0.80);
    CHECK(ratio < 1.05);
}

TEST_CASE("refined estimate with t = 1 equals the closed form for even n") {
    for (int n : {4, 6, 8, 20, 100}) {
        Real a = eval_log_psi(n, {Theorem::korshunov, Parity::even, 1});
        Real b = eval_log_psi(n, {Theorem::refined, Parity::even, 1});
        CHECK(a == b);
    }
    CHECK_THROWS_AS(eval_log_psi(5, {Theorem::korshunov, Parity::even, 1}), std::invalid_argument);
    CHECK_THROWS_AS(eval_log_psi(6, {Theorem::refined, Parity::even, 6}), DepthError);
}

TEST_CASE("odd closed form uses the printed constants") {
    // n = 5: ln 2 + 10 ln 2 + 10 (1/8 + 56/32/64) + 5 (1/16 + 10/8/64)
    Real log_est = eval_log_psi(5, {Theorem::korshunov, Parity::odd, 1});
    Real expect = 11 * boost::multiprecision::log(Real(2)) + to_real(BigRat(10) * (Q(1, 8) + Q(56, 2048)) +
                                                                     BigRat(5) * (Q(1, 16) + Q(10, 512)));
    CHECK(boost::multiprecision::abs(log_est - expect) < Real("1e-50"));
}

TEST_CASE("truncation order for ψ(n,m)") {
    CHECK(psi_nm_truncation(BigRat(1)) == 0);
    CHECK(psi_nm_truncation(Q(3, 4)) == 1);
    CHECK(psi_nm_truncation(Q(1, 2)) == 2);
    CHECK(psi_nm_truncation(Q(1, 4)) == 5);  // (4/3)^4 < 4 <= (4/3)^5
    CHECK_THROWS(psi_nm_truncation(BigRat(0)));
}

TEST_CASE("ψ(n,m) estimates") {
    PsiNmEstimate e = eval_psi_nm(6, 15);
    CHECK(e.t == 1);
    CHECK(e.variant == "series");
    CHECK(boost::multiprecision::abs(e.value - 15504) < Real("1e-40"));
    PsiNmEstimate full = eval_psi_nm(5, 10);
    CHECK(full.prefactor == 2);
    CHECK(full.variant == "dense");
    CHECK(boost::multiprecision::abs(full.value - 2) < Real("1e-40"));
    // t = 1 is always prefactor times the binomial
    for (long m : {3L, 7L, 12L}) {
        PsiNmEstimate one = eval_psi_nm(7, m, 1);
        CHECK(boost::multiprecision::abs(one.value - 2 * to_real(BigInt(binomial(35, static_cast<int>(m))))) <
              Real("1e-30") * one.value);
    }
    // the first correction at β = 1/2 is N R_1 (1-β)^{n/2}
    PsiNmEstimate half = eval_psi_nm(8, 35);
    CHECK(half.t == 2);
    BigRat r1 = BigRat(2 * 8, 10) * Q(1, 2);
    BigInt c70;
    mpz_bin_uiui(c70.get_mpz_t(), 70, 35);
    Real expect = boost::multiprecision::log(to_real(c70)) + to_real(BigRat(70) * r1 * Q(1, 16));
    CHECK(boost::multiprecision::abs(half.log_value - expect) < Real("1e-40"));
    CHECK_THROWS(eval_psi_nm(6, 0));
    CHECK_THROWS(eval_psi_nm(6, 21));
}

TEST_CASE("threshold window") {
    WindowResult w = threshold_window(1000, 0);
    Real target = boost::multiprecision::exp(-3 / boost::multiprecision::sqrt(2 * boost::multiprecision::acos(Real(-1))));
    CHECK(as_double(w.limit_constant) == doctest::Approx(0.30215).epsilon(1e-4));
    CHECK(w.limit_constant == target);
    CHECK(as_double(w.survival / target) > 0.9);
    CHECK(as_double(w.survival / target) < 1.1);
    CHECK(as_double(threshold_window(1001, 0).limit_constant) ==
          doctest::Approx(std::exp(-3.75 / std::sqrt(2 * M_PI))));
    // the constant tends to 1 as c grows
    CHECK(as_double(threshold_window(1000, 20).limit_constant) > 0.999);
    CHECK_THROWS(threshold_window(9, 0));
}

TEST_CASE("comparability probability matches enumeration") {
    for (int n = 1; n <= 5; ++n) {
        long hits = 0;
        long total = 1L << (2 * n);
        for (Bits u = 0; u < (Bits(1) << n); ++u)
            for (Bits v = 0; v < (Bits(1) << n); ++v) hits += comparable(u, v);
        BigRat expect(hits, total);
        expect.canonicalize();
        CHECK(sparse_regime(n, 1).comparability_prob == expect);
    }
    CHECK(sparse_regime(2, 1).comparability_prob == Q(7, 8));
}

TEST_CASE("one-defect ratio agrees with exact counts") {
    for (int n : {4, 5, 6})
        for (long m : {1L, 2L, 3L}) {
            INFO("n=" << n << " m=" << m);
            Real printed = sparse_regime(n, m).one_defect_ratio;
            CHECK(boost::multiprecision::abs(printed - to_real(one_defect_ratio_exact(n, m))) < Real("1e-50"));
        }
    CHECK_THROWS_AS(one_defect_ratio_exact(7, 1), ResourceGuardError);
}

TEST_CASE("binomial point mass") {
    CHECK(binomial_pointmass(4, 2, 1).exact == 6);
    for (BigRat p : {Q(1, 3), Q(1, 2), Q(7, 9)}) CHECK(binomial_pmf(1, 1, p) == p);
    BigRat s = 0;
    for (long m = 0; m <= 10; ++m) s += binomial_pmf(10, m, Q(2, 7));
    CHECK(s == 1);
    PointMass pm = binomial_pointmass(20, 15, 3);
    double rm = as_double(to_real(pm.exact) / pm.asymptotic_m);
    double rn = as_double(to_real(pm.exact) / pm.asymptotic_n);
    CHECK(rm > 0.8);
    CHECK(rm < 0.9);
    CHECK(rn == doctest::Approx(0.982).epsilon(0.01));
}

TEST_CASE("comparison rows and CSV round trip") {
    auto rows = compare_batch({4, 5, 6, 8}, Theorem::refined, 2, std::nullopt);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].exact == std::optional<std::string>("168"));
    CHECK(rows[2].exact == std::optional<std::string>("7828354"));
    CHECK_FALSE(rows[3].exact.has_value());
    CHECK_FALSE(rows[3].ratio.has_value());
    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    auto back = read_csv(in);
    std::ostringstream again;
    write_csv(again, back);
    CHECK(again.str() == out.str());
    CHECK(out.str().rfind(csv_header() + "\n", 0) == 0);

    auto by_m = compare(6, Theorem::psi_nm, 1, 15);
    REQUIRE(by_m.size() == 1);
    CHECK(by_m[0].exact == std::optional<std::string>("19238"));
    CHECK(by_m[0].param == "m=15");
    auto sweep = compare(4, Theorem::psi_nm, 1, std::nullopt);
    REQUIRE(sweep.size() == 6);
    CHECK(sweep[0].variant == "T1.3-even-t8-depth-exceeded");
    CHECK(sweep[0].exact == std::optional<std::string>("16"));
    CHECK(sweep[4].variant == "T1.3-even-t1-series");
    CHECK(sweep[5].variant == "T1.3-even-t0-dense");
    CHECK_THROWS_AS(compare(4, Theorem::psi_nm, 1, 1), DepthError);
    CHECK(rows[1].to_json()["n"] == 5);
    CHECK(rows[3].to_json()["exact"].is_null());
    CHECK_THROWS(parse_csv_row("1,2,3"));
}

TEST_CASE("theorem names") {
    for (Theorem t : {Theorem::korshunov, Theorem::psi_nm, Theorem::refined, Theorem::window})
        CHECK(theorem_from_name(theorem_name(t)) == t);
    CHECK_THROWS(theorem_from_name("2.0"));
}
