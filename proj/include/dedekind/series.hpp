#pragma once

#include <string>
#include <vector>

#include "dedekind/ratfn.hpp"

namespace dedekind {

// Formal series in the marker Y (standing for (1-beta)^k) truncated below order t,
// coefficients rational in (n, beta).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries constant(const RationalFn& c, int order);
    static TruncatedSeries marker(int order);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const RationalFn& coeff(int j) const;
    void set_coeff(int j, const RationalFn& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const RationalFn& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const RationalFn& c) { return a *= c; }

    // Multiply by Y^j.
    TruncatedSeries shift(int j) const;

private:
    std::vector<RationalFn> coeffs_;
};

// Sum_i a[i] * s^i, truncated at the order of s.
TruncatedSeries compose(const std::vector<RationalFn>& a, const TruncatedSeries& s);

// Generalized binomial prod_{i<r} (top - i) / r!.
Poly binomial_poly(const Poly& top, int r);

// Coefficients binom(-ell, i) for 0 <= i < t.
std::vector<Poly> series_inv_power(const Poly& ell, int t);

// Coefficients of ln(1+X) - beta ln(1+X/beta) in X, for 0 <= i < t.
std::vector<RationalFn> series_log_correction(int t);

// F(n, (beta+X)/(1-beta)) = (1-beta)^(-c) G(n, beta, X) with c = deg_lambda F.
struct LambdaSubstitution {
    int c = 0;
    Poly g;
};
LambdaSubstitution substitute_lambda(const Poly& f);

// Parses expressions over n, lambda, beta, X, Y with + - * / ^, parentheses and
// implicit multiplication. Unicode minus and Greek letters are accepted.
RationalFn parse_rational_fn(const std::string& text);
BigRat parse_rational(const std::string& text);

}  // namespace dedekind
