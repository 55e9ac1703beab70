#pragma once

#include <vector>

#include "dedekind/poly.hpp"

namespace dedekind {

// Monic linear factor (v - root) used to keep denominators in factored form.
struct LinearFactor {
    Var v;
    BigRat root;
    Poly poly() const { return Poly::var(v) - Poly(root); }
    std::string to_string() const;
};

const std::vector<LinearFactor>& denominator_factors();

// Rational function num/den. The denominator is held as a product of registered linear
// factors times a primitive remainder polynomial, which keeps sums of series coefficients
// from growing without resorting to multivariate gcd.
class RationalFn {
public:
    RationalFn() : rest_(1) {}
    RationalFn(long c) : num_(c), rest_(1) {}
    RationalFn(const BigRat& c) : num_(c), rest_(1) {}
    RationalFn(const Poly& p) : num_(p), rest_(1) {}
    RationalFn(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    Poly den() const;
    const std::vector<int>& factor_exponents() const { return fac_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    Poly as_polynomial() const;

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    // Equality as rational functions, by cross-multiplication.
    friend bool operator==(const RationalFn& a, const RationalFn& b);
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn pow(int e) const;
    RationalFn derivative(Var v) const;
    RationalFn substitute(Var v, const BigRat& value) const;
    RationalFn substitute(Var v, const RationalFn& value) const;
    BigRat evaluate(const std::map<Var, BigRat>& point) const;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static RationalFn from_json(const nlohmann::json& j);

private:
    void normalize();
    static void factor_out(Poly& p, std::vector<int>& fac);
    Poly factors_poly(const std::vector<int>& e) const;

    Poly num_;
    std::vector<int> fac_;  // exponents indexed like denominator_factors(); empty means all zero
    Poly rest_;
};

}  // namespace dedekind
