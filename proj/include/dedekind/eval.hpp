#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "dedekind/pipeline.hpp"

namespace dedekind {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 200;

// Working precision of Real in bits, applied to the calling thread.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

Real to_real(const BigInt& x);
Real to_real(const BigRat& x);
std::string format_real(const Real& x, int digits = 30);

enum class Theorem { korshunov, psi_nm, refined, window };

const char* theorem_name(Theorem t);        // "1.1", "1.3", "1.4", "1.2"
Theorem theorem_from_name(const std::string& s);

struct FormulaSpec {
    Theorem theorem = Theorem::korshunov;
    Parity parity = Parity::even;
    int t = 1;
};

class DepthError : public ResourceGuardError {
public:
    using ResourceGuardError::ResourceGuardError;
};

// Natural log of the estimate for ψ(n). The closed form keeps its printed constants; the refined
// form sums P_j for j ≤ t+1.
Real eval_log_psi(int n, const FormulaSpec& spec, const PipelineOptions& opts = {});

// t = ceil(log_{1/(1-β)} 4), computed exactly; 0 when β = 1.
int psi_nm_truncation(const BigRat& beta);

struct PsiNmEstimate {
    Real value;
    Real log_value;
    int t = 0;
    int prefactor = 1;
    std::string variant;  // "series" or "dense"
};
// Estimate for ψ(n, m). Above β = 9/10 the single-layer regime prefactor·C(N,m) is used.
PsiNmEstimate eval_psi_nm(int n, long m, std::optional<int> t = std::nullopt, const PipelineOptions& opts = {});

struct WindowResult {
    Real beta;
    Real cluster_sum_1;
    Real survival;         // exp(-cluster_sum_1)
    Real limit_exponent;   // e^{-2c}/sqrt(2π) times 3 or 15/4
    Real limit_constant;   // exp(-limit_exponent)
};
WindowResult threshold_window(int n, const BigRat& c);

struct SparseResult {
    BigRat comparability_prob;
    Real one_defect_ratio;
};
// P(u ~ v or u = v) = 2(3/4)^n - (1/2)^n and C(n,k-1) C(N-d, m-1) / C(N,m) with d = n-k+1.
SparseResult sparse_regime(int n, long m);
// Exact ratio from counting antichains made of one vertex of L_{k-1} and m-1 vertices of L_k.
BigRat one_defect_ratio_exact(int n, long m);

struct PointMass {
    BigInt exact;
    Real asymptotic_m;  // (1+λ0)^{N+1} / (λ0^m sqrt(2π m λ0))
    Real asymptotic_n;  // same with sqrt(2π N λ0)
};
PointMass binomial_pointmass(long big_n, long m, const BigRat& lambda0);
// P(Bin(n, p) = m) exactly.
BigRat binomial_pmf(long n, long m, const BigRat& p);

struct ComparisonRecord {
    int n = 0;
    std::string param;
    std::optional<std::string> exact;
    std::string formula;
    std::optional<std::string> ratio;
    std::string variant;

    nlohmann::json to_json() const;
};

std::string csv_header();
std::string to_csv_row(const ComparisonRecord& r);
ComparisonRecord parse_csv_row(const std::string& line);
void write_csv(std::ostream& os, const std::vector<ComparisonRecord>& rows);
std::vector<ComparisonRecord> read_csv(std::istream& is);

// Exact ψ(n) and ψ(n, m) are attached for n ≤ 6.
std::vector<ComparisonRecord> compare(int n, Theorem theorem, int t, std::optional<long> m,
                                      const PipelineOptions& opts = {});
// One batch per n; the exact oracle runs in parallel, rows keep the order of ns.
std::vector<ComparisonRecord> compare_batch(const std::vector<int>& ns, Theorem theorem, int t,
                                            std::optional<long> m, const PipelineOptions& opts = {});

}  // namespace dedekind
