#include "dedekind/eval.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dedekind/golden.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/oracle.hpp"

namespace dedekind {

namespace {

unsigned g_bits = kDefaultPrecisionBits;

struct PrecisionInit {
    PrecisionInit() { set_precision_bits(kDefaultPrecisionBits); }
};
const PrecisionInit g_precision_init;

BigInt big_binomial(long top, long r) {
    if (r < 0 || r > top) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(r));
    return out;
}

BigRat pow_rat(const BigRat& x, long e) {
    BigRat r(1);
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

BigInt middle_size(int n) { return big_binomial(n, n / 2); }

Real ln2() { return boost::multiprecision::log(Real(2)); }

// Σ_{j ≤ depth} (C(n,k-1) P_j^{lo} + C(n,k+1) P_j^{hi}) 2^{-j(k_exp)} as an exact rational, with
// branches 0 (even) or 1 and 2 (odd).
BigRat refined_exponent(int n, const std::vector<std::vector<RationalFn>>& p_by_j) {
    bool even = n % 2 == 0;
    std::map<Var, BigRat> pt{{Var::n, BigRat(n)}};
    BigRat total = 0;
    long step = even ? n / 2 : (n + 1) / 2;
    BigRat half_step = pow_rat(BigRat(1, 2), step);
    BigRat scale = 1;
    for (std::size_t j = 1; j < p_by_j.size(); ++j) {
        scale *= half_step;
        const auto& p = p_by_j[j];
        if (even) {
            total += BigRat(big_binomial(n, n / 2 + 1)) * p[0].evaluate(pt) * scale;
        } else {
            total += (BigRat(big_binomial(n, (n + 1) / 2)) * p[0].evaluate(pt) +
                      BigRat(big_binomial(n, (n + 3) / 2)) * p[1].evaluate(pt)) *
                     scale;
        }
    }
    return total;
}

}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 32) throw std::invalid_argument("precision below 32 bits");
    g_bits = bits;
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

unsigned precision_bits() { return g_bits; }

Real to_real(const BigInt& x) {
    Real r;
    mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const BigRat& x) {
    Real r;
    mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
    return r;
}

std::string format_real(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::korshunov: return "1.1";
        case Theorem::psi_nm: return "1.3";
        case Theorem::refined: return "1.4";
        case Theorem::window: return "1.2";
    }
    return "?";
}

Theorem theorem_from_name(const std::string& s) {
    for (Theorem t : {Theorem::korshunov, Theorem::psi_nm, Theorem::refined, Theorem::window})
        if (s == theorem_name(t)) return t;
    throw std::invalid_argument("unknown theorem: " + s);
}

Real eval_log_psi(int n, const FormulaSpec& spec, const PipelineOptions& opts) {
    Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
    if (parity != spec.parity) throw std::invalid_argument("parity of n does not match the formula");
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::vector<RationalFn>> p(1);
    if (spec.theorem == Theorem::korshunov) {
        p.resize(3);
        for (const auto& g : classical_values())
            if (g.parity == parity) p[g.j].push_back(parse_rational_fn(g.expression));
    } else if (spec.theorem == Theorem::refined) {
        if (spec.t < 1) throw std::invalid_argument("t must be at least 1");
        int depth = spec.t + 1;
        if (depth > std::min(opts.engine.max_j, kHardMaxJ))
            throw DepthError("refined formula needs P_j up to j = " + std::to_string(depth));
        for (int j = 1; j <= depth; ++j) {
            std::vector<RationalFn> row;
            for (const auto& f : compute_P(j, parity, opts)) row.push_back(f.value);
            p.push_back(row);
        }
    } else {
        throw std::invalid_argument("eval_log_psi takes the 1.1 or 1.4 formula");
    }
    Real log_est = to_real(middle_size(n)) * ln2() + to_real(refined_exponent(n, p));
    if (parity == Parity::odd) log_est += ln2();
    return log_est;
}

int psi_nm_truncation(const BigRat& beta) {
    if (beta <= 0 || beta > 1) throw std::invalid_argument("β must lie in (0, 1]");
    if (beta == 1) return 0;
    BigRat base = 1 / (1 - beta);
    BigRat pw = 1;
    int t = 0;
    while (pw < 4) {
        pw *= base;
        ++t;
    }
    return t;
}

PsiNmEstimate eval_psi_nm(int n, long m, std::optional<int> t, const PipelineOptions& opts) {
    BigInt big_n = middle_size(n);
    if (m < 1 || BigInt(m) > big_n) throw std::invalid_argument("need 0 < m <= N");
    Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
    BigRat beta(BigInt(m), big_n);
    beta.canonicalize();
    PsiNmEstimate est;
    est.t = t ? *t : psi_nm_truncation(beta);
    est.prefactor = parity == Parity::even ? 1 : 2;
    long nn = big_n.get_si();
    Real log_binom = boost::multiprecision::log(to_real(big_binomial(nn, m)));
    BigRat exponent = 0;
    if (beta > BigRat(9, 10)) {
        est.variant = "dense";
    } else {
        est.variant = "series";
        if (est.t >= 2) {
            if (est.t - 1 > std::min(opts.engine.max_j, kHardMaxJ))
                throw DepthError("ψ(n,m) estimate needs R_j up to j = " + std::to_string(est.t - 1));
            auto r = compute_R(est.t, parity, opts);
            std::map<Var, BigRat> pt{{Var::n, BigRat(n)}, {Var::beta, beta}};
            long step = parity == Parity::even ? n / 2 : (n + 1) / 2;
            BigRat y = pow_rat(1 - beta, step);
            BigRat yj = 1;
            for (const auto& c : r) {
                yj *= y;
                exponent += c.value.evaluate(pt) * yj;
            }
            exponent *= BigRat(big_n);
        }
    }
    est.log_value = log_binom + to_real(exponent) + boost::multiprecision::log(Real(est.prefactor));
    est.value = boost::multiprecision::exp(est.log_value);
    return est;
}

WindowResult threshold_window(int n, const BigRat& c) {
    if (n < 10) throw std::invalid_argument("threshold window needs n >= 10");
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    WindowResult w;
    Real nr(n);
    Real cr = to_real(c);
    w.beta = Real(3) / 4 - log(nr) / (4 * nr) + cr / nr;
    Real big_n = to_real(middle_size(n));
    Real omb = 1 - w.beta;
    Real decay = exp(Real(n) / 2 * log(omb));
    Real pi = boost::multiprecision::acos(Real(-1));
    Real factor;
    if (n % 2 == 0) {
        w.cluster_sum_1 = big_n * (2 * w.beta * nr / (nr + 2)) * decay;
        factor = 3;
    } else {
        w.cluster_sum_1 = big_n * w.beta / sqrt(omb) * (1 + (nr - 1) / (nr + 3) * omb) * decay;
        factor = Real(15) / 4;
    }
    w.survival = exp(-w.cluster_sum_1);
    w.limit_exponent = exp(-2 * cr) / sqrt(2 * pi) * factor;
    w.limit_constant = exp(-w.limit_exponent);
    return w;
}

SparseResult sparse_regime(int n, long m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    SparseResult s;
    s.comparability_prob = 2 * pow_rat(BigRat(3, 4), n) - pow_rat(BigRat(1, 2), n);
    int k = (n + 1) / 2;
    long nn = middle_size(n).get_si();
    long d = n - k + 1;
    BigRat ratio(big_binomial(n, k - 1) * big_binomial(nn - d, m - 1), big_binomial(nn, m));
    ratio.canonicalize();
    s.one_defect_ratio = to_real(ratio);
    return s;
}

BigRat one_defect_ratio_exact(int n, long m) {
    if (n > 6) throw ResourceGuardError("one-defect enumeration limited to n <= 6");
    int k = (n + 1) / 2;
    VertexSet mid = layer(n, k);
    SizeProfile base = antichain_profile(n, mid);
    BigInt count = 0;
    VertexSet lower = layer(n, k - 1);
    for (Bits v : lower.elements()) {
        std::vector<Bits> with = mid.elements();
        with.push_back(v);
        count += antichain_profile(n, VertexSet(n, with)).at(m) - base.at(m);
    }
    BigRat r(count, big_binomial(static_cast<long>(mid.size()), m));
    r.canonicalize();
    return r;
}

PointMass binomial_pointmass(long big_n, long m, const BigRat& lambda0) {
    if (m <= 0 || m >= big_n) throw std::invalid_argument("need 0 < m < N");
    if (lambda0 <= 0) throw std::invalid_argument("λ0 must be positive");
    using boost::multiprecision::log;
    using boost::multiprecision::exp;
    PointMass p;
    p.exact = big_binomial(big_n, m);
    Real l = to_real(lambda0);
    Real pi = boost::multiprecision::acos(Real(-1));
    Real head = Real(big_n + 1) * log(1 + l) - Real(m) * log(l);
    p.asymptotic_m = exp(head - log(2 * pi * Real(m) * l) / 2);
    p.asymptotic_n = exp(head - log(2 * pi * Real(big_n) * l) / 2);
    return p;
}

BigRat binomial_pmf(long n, long m, const BigRat& p) {
    if (m < 0 || m > n) return 0;
    return BigRat(big_binomial(n, m)) * pow_rat(p, m) * pow_rat(1 - p, n - m);
}

nlohmann::json ComparisonRecord::to_json() const {
    nlohmann::json j{{"n", n}, {"param", param}, {"formula", formula}, {"variant", variant}};
    j["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
    j["ratio"] = ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr);
    return j;
}

std::string csv_header() { return "n,param,exact,formula,ratio,variant"; }

std::string to_csv_row(const ComparisonRecord& r) {
    std::ostringstream os;
    os << r.n << ',' << r.param << ',' << (r.exact ? *r.exact : "null") << ',' << r.formula << ','
       << (r.ratio ? *r.ratio : "null") << ',' << r.variant;
    return os.str();
}

ComparisonRecord parse_csv_row(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 6) throw std::invalid_argument("expected 6 CSV fields: " + line);
    ComparisonRecord r;
    r.n = std::stoi(f[0]);
    r.param = f[1];
    if (f[2] != "null") r.exact = f[2];
    r.formula = f[3];
    if (f[4] != "null") r.ratio = f[4];
    r.variant = f[5];
    return r;
}

void write_csv(std::ostream& os, const std::vector<ComparisonRecord>& rows) {
    os << csv_header() << '\n';
    for (const auto& r : rows) os << to_csv_row(r) << '\n';
}

std::vector<ComparisonRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != csv_header()) throw std::invalid_argument("missing CSV header");
    std::vector<ComparisonRecord> rows;
    while (std::getline(is, line))
        if (!line.empty()) rows.push_back(parse_csv_row(line));
    return rows;
}

namespace {

std::vector<ComparisonRecord> rows_for(int n, Theorem theorem, int t, std::optional<long> m,
                                       const std::optional<SizeProfile>& exact, const PipelineOptions& opts) {
    Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
    std::string par = parity_name(parity);
    std::vector<ComparisonRecord> rows;
    auto finish = [&](ComparisonRecord r, const Real& formula, const std::optional<BigInt>& ex) {
        r.formula = format_real(formula);
        if (ex) {
            r.exact = ex->get_str();
            r.ratio = format_real(formula / to_real(*ex), 20);
        }
        rows.push_back(std::move(r));
    };
    if (theorem == Theorem::korshunov || theorem == Theorem::refined) {
        FormulaSpec spec{theorem, parity, t};
        Real log_est = eval_log_psi(n, spec, opts);
        ComparisonRecord r;
        r.n = n;
        r.param = "lambda=1";
        r.variant = std::string("T") + theorem_name(theorem) + "-" + par +
                    (theorem == Theorem::refined ? "-t" + std::to_string(t) : "");
        std::optional<BigInt> ex;
        if (exact) ex = exact->total();
        finish(r, boost::multiprecision::exp(log_est), ex);
    } else if (theorem == Theorem::psi_nm) {
        long big_n = middle_size(n).get_si();
        long lo = m ? *m : 1, hi = m ? *m : big_n;
        for (long mm = lo; mm <= hi; ++mm) {
            ComparisonRecord r;
            r.n = n;
            r.param = "m=" + std::to_string(mm);
            std::optional<BigInt> ex;
            if (exact) ex = exact->at(static_cast<std::size_t>(mm));
            if (ex && *ex == 0) ex.reset();
            BigRat beta(BigInt(mm), middle_size(n));
            beta.canonicalize();
            int need = psi_nm_truncation(beta);
            if (!m && beta <= BigRat(9, 10) && need - 1 > std::min(opts.engine.max_j, kHardMaxJ)) {
                // a full sweep reports rows beyond the computed depth instead of aborting
                r.variant = "T1.3-" + par + "-t" + std::to_string(need) + "-depth-exceeded";
                r.formula = "nan";
                if (ex) r.exact = ex->get_str();
                rows.push_back(std::move(r));
                continue;
            }
            PsiNmEstimate e = eval_psi_nm(n, mm, std::nullopt, opts);
            r.variant = "T1.3-" + par + "-t" + std::to_string(e.t) + "-" + e.variant;
            finish(r, e.value, ex);
        }
    } else {
        throw std::invalid_argument("comparisons cover the 1.1, 1.3 and 1.4 formulas");
    }
    return rows;
}

}  // namespace

std::vector<ComparisonRecord> compare(int n, Theorem theorem, int t, std::optional<long> m, const PipelineOptions& opts) {
    return compare_batch({n}, theorem, t, m, opts);
}

std::vector<ComparisonRecord> compare_batch(const std::vector<int>& ns, Theorem theorem, int t, std::optional<long> m,
                                            const PipelineOptions& opts) {
    std::vector<std::optional<SizeProfile>> exact(ns.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(ns.size()); ++i)
        if (ns[i] >= 0 && ns[i] <= 6) exact[i] = antichain_profile(ns[i]);
    std::vector<ComparisonRecord> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        auto r = rows_for(ns[i], theorem, t, m, exact[i], opts);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

}  // namespace dedekind
