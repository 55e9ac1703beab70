#include "dedekind/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dedekind/lattice.hpp"

namespace dedekind {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::S: return "S";
        case Kind::P: return "P";
        case Kind::F: return "F";
        case Kind::B: return "B";
        case Kind::R: return "R";
    }
    return "?";
}

Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::S, Kind::P, Kind::F, Kind::B, Kind::R})
        if (s == kind_name(k)) return k;
    throw std::invalid_argument("unknown coefficient kind: " + s);
}

std::vector<int> branches(Kind kind, Parity parity) {
    if (parity == Parity::even) return {0};
    if (kind == Kind::S || kind == Kind::P) return {1, 2};
    return {1};
}

std::string CoefficientFamily::label() const {
    return std::string(kind_name(kind)) + "_" + std::to_string(j) + "^" + std::to_string(branch);
}

std::string CoefficientFamily::to_text() const { return label() + " = " + value.to_string(); }

nlohmann::json CoefficientFamily::to_json() const {
    return {{"kind", kind_name(kind)},   {"parity", parity_name(parity)}, {"j", j},
            {"branch", branch},          {"value", value.to_json()},     {"text", value.to_string()},
            {"provenance", provenance}};
}

CoefficientFamily CoefficientFamily::from_json(const nlohmann::json& j) {
    CoefficientFamily c;
    c.kind = kind_from_name(j.at("kind").get<std::string>());
    c.parity = parity_from_name(j.at("parity").get<std::string>());
    c.j = j.at("j").get<int>();
    c.branch = j.at("branch").get<int>();
    c.value = RationalFn::from_json(j.at("value"));
    if (j.contains("provenance")) c.provenance = j.at("provenance");
    auto br = branches(c.kind, c.parity);
    if (std::find(br.begin(), br.end(), c.branch) == br.end())
        throw std::invalid_argument("branch " + std::to_string(c.branch) + " invalid for " + c.label());
    return c;
}

namespace {

const Poly n_var = Poly::var(Var::n);
const Poly lam_var = Poly::var(Var::lambda);
const Poly beta_var = Poly::var(Var::beta);

RationalFn one_minus_beta() { return RationalFn(Poly(1) - beta_var); }

CoefficientFamily family(Kind kind, Parity parity, int j, int branch, RationalFn value, nlohmann::json prov) {
    CoefficientFamily c;
    c.kind = kind;
    c.parity = parity;
    c.j = j;
    c.branch = branch;
    c.value = std::move(value);
    c.provenance = std::move(prov);
    return c;
}

// f(n, (β+X)/(1-β)) as a series in Y by Taylor expansion about λ0 = β/(1-β).
TruncatedSeries lambda_series(const RationalFn& f, const TruncatedSeries& x) {
    RationalFn lam0(beta_var, Poly(1) - beta_var);
    RationalFn inv_omb = RationalFn(1) / one_minus_beta();
    std::vector<RationalFn> a;
    RationalFn d = f;
    RationalFn scale(1);
    for (int i = 0; i < x.order(); ++i) {
        if (i > 0) {
            d = d.derivative(Var::lambda);
            scale *= inv_omb * RationalFn(BigRat(1, i));
        }
        if (d.is_zero()) break;
        a.push_back(d.substitute(Var::lambda, lam0) * scale);
    }
    return compose(a, x);
}

// (1+λ)^{-j(k+1)} = (1-β)^j Y^j (1+X)^{-j(k+1)}.
TruncatedSeries decay_series(int j, Parity parity, const TruncatedSeries& x) {
    Poly ell = (middle_index(parity) + Poly(1)) * BigRat(j);
    std::vector<RationalFn> c;
    for (const auto& p : series_inv_power(ell, x.order())) c.emplace_back(p);
    return (compose(c, x) * one_minus_beta().pow(j)).shift(j);
}

}  // namespace

std::vector<CoefficientFamily> compute_S(int j, Parity parity, const PipelineOptions& opts) {
    auto s = cluster_sum(j, parity, opts.engine);
    auto br = branches(Kind::S, parity);
    std::vector<CoefficientFamily> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out.push_back(family(Kind::S, parity, j, br[i], RationalFn(s[i]), {{"j_max", j}}));
    return out;
}

std::vector<CoefficientFamily> compute_P(int j, Parity parity, const PipelineOptions& opts) {
    std::vector<CoefficientFamily> out;
    BigRat scale(1);
    for (int i = 0; i < j; ++i) scale /= 2;
    for (auto& s : compute_S(j, parity, opts)) {
        Poly p = s.value.as_polynomial().substitute(Var::lambda, BigRat(1)) * scale;
        out.push_back(family(Kind::P, parity, j, s.branch, RationalFn(p), {{"j_max", j}}));
    }
    return out;
}

RationalFn normalized_cluster_sum(int j, Parity parity, const PipelineOptions& opts) {
    auto s = cluster_sum(j, parity, opts.engine);
    // C(n,k-1)/N = n/(n+2) at even n; C(n,k-1)/N = 1 and C(n,k+1)/N = (n-1)/(n+3) at odd n
    if (parity == Parity::even) return RationalFn(n_var * s[0], n_var + Poly(2));
    return RationalFn(s[0]) + RationalFn((n_var - Poly(1)) * s[1], n_var + Poly(3));
}

Poly mean_size_denominator(Parity parity) {
    Poly k = middle_index(parity);
    return (n_var - k + Poly(1)) * (k + Poly(1));
}

CoefficientFamily compute_F(int j, Parity parity, const PipelineOptions& opts) {
    RationalFn sigma = normalized_cluster_sum(j, parity, opts);
    Poly kp1 = middle_index(parity) + Poly(1);
    RationalFn f = RationalFn(mean_size_denominator(parity)) *
                   (RationalFn(Poly(1) + lam_var) * sigma.derivative(Var::lambda) - RationalFn(kp1 * BigRat(j)) * sigma);
    if (!f.is_polynomial()) throw AlgebraError("F_" + std::to_string(j) + " is not polynomial");
    return family(Kind::F, parity, j, branches(Kind::F, parity)[0], RationalFn(f.as_polynomial()), {{"j_max", j}});
}

TruncatedSeries activity_shift_series(const std::vector<CoefficientFamily>& b, int order) {
    TruncatedSeries x(order);
    for (const auto& c : b)
        if (c.j < order) x.set_coeff(c.j, c.value * one_minus_beta().pow(c.j + 1));
    return x;
}

namespace {

TruncatedSeries residual_with(const std::vector<RationalFn>& f_over_d, const std::vector<CoefficientFamily>& b,
                              Parity parity, int order) {
    TruncatedSeries x = activity_shift_series(b, order);
    // λ/(1+λ) = (β+X)/(1+X) = β + (1-β) X/(1+X)
    std::vector<RationalFn> geo(order, RationalFn(0));
    for (int i = 1; i < order; ++i) geo[i] = RationalFn(i % 2 == 1 ? 1 : -1) * one_minus_beta();
    TruncatedSeries frac = compose(geo, x) + TruncatedSeries::constant(RationalFn(beta_var), order);
    TruncatedSeries bracket = TruncatedSeries::constant(RationalFn(1), order);
    for (int j = 1; j < order; ++j) bracket += lambda_series(f_over_d[j], x) * decay_series(j, parity, x);
    return frac * bracket - TruncatedSeries::constant(RationalFn(beta_var), order);
}

std::vector<RationalFn> f_over_d_table(int upto, Parity parity, const PipelineOptions& opts) {
    std::vector<RationalFn> t(upto + 1);
    RationalFn d(mean_size_denominator(parity));
    for (int j = 1; j <= upto; ++j) t[j] = compute_F(j, parity, opts).value / d;
    return t;
}

}  // namespace

TruncatedSeries mean_size_residual(const std::vector<CoefficientFamily>& b, Parity parity, int order,
                                   const PipelineOptions& opts) {
    return residual_with(f_over_d_table(order - 1, parity, opts), b, parity, order);
}

std::vector<CoefficientFamily> compute_B(int q, Parity parity, const PipelineOptions& opts) {
    if (q < 0) throw std::invalid_argument("negative B depth");
    auto table = f_over_d_table(q, parity, opts);
    int branch = branches(Kind::B, parity)[0];
    std::vector<CoefficientFamily> b;
    for (int jj = 1; jj <= q; ++jj) {
        // H_j is linear in B_j: evaluate at B_j = 0 and B_j = 1
        b.push_back(family(Kind::B, parity, jj, branch, RationalFn(0), {{"q", q}}));
        RationalFn c0 = residual_with(table, b, parity, jj + 1).coeff(jj);
        b.back().value = RationalFn(1);
        RationalFn c1 = residual_with(table, b, parity, jj + 1).coeff(jj);
        RationalFn lin = c1 - c0;
        if (lin.is_zero())
            throw AlgebraError("vanishing linear coefficient while solving for B_" + std::to_string(jj));
        b.back().value = -c0 / lin;
    }
    return b;
}

std::vector<CoefficientFamily> compute_R(int t, Parity parity, const PipelineOptions& opts, std::optional<int> b_depth) {
    if (t < 1) throw std::invalid_argument("truncation t must be positive");
    int q = b_depth ? *b_depth : (t + 1) / 2 - 1;
    auto b = compute_B(q, parity, opts);
    TruncatedSeries x = activity_shift_series(b, t);
    TruncatedSeries total = compose(series_log_correction(t), x);
    for (int j = 1; j < t; ++j) total += lambda_series(normalized_cluster_sum(j, parity, opts), x) * decay_series(j, parity, x);
    int branch = branches(Kind::R, parity)[0];
    std::vector<CoefficientFamily> out;
    for (int j = 1; j < t; ++j) out.push_back(family(Kind::R, parity, j, branch, total.coeff(j), {{"t", t}, {"q", q}}));
    return out;
}

BigRat mean_size_term_from_F(int n, int j, const BigRat& lambda, const PipelineOptions& opts) {
    Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
    int k = (n + 1) / 2;
    BigRat big_n = binomial(n, k);
    std::map<Var, BigRat> pt{{Var::n, BigRat(n)}, {Var::lambda, lambda}};
    BigRat f = compute_F(j, parity, opts).value.evaluate(pt);
    BigRat d = mean_size_denominator(parity).evaluate(pt);
    BigRat decay = 1;
    for (int i = 0; i < j * (k + 1); ++i) decay /= 1 + lambda;
    return lambda / (1 + lambda) * big_n * f / d * decay;
}

}  // namespace dedekind
