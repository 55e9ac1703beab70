#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace dedekind {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Canonical variable order; exponent vectors are indexed by it.
enum class Var : int { n = 0, lambda = 1, beta = 2, X = 3, Y = 4 };
inline constexpr int kNumVars = 5;

const char* var_name(Var v);
Var var_from_name(const std::string& s);

using Exponent = std::array<std::uint16_t, kNumVars>;

struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order; zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Exponent, BigRat, GradedLexGreater>;

    Poly() = default;
    Poly(long c);
    Poly(const BigRat& c);

    static Poly var(Var v, unsigned power = 1);
    static Poly monomial(const Exponent& e, const BigRat& c);
    // a*v + b
    static Poly linear(Var v, const BigRat& a, const BigRat& b);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigRat constant_value() const;
    std::size_t size() const { return terms_.size(); }

    int degree(Var v) const;
    int total_degree() const;
    bool uses(Var v) const { return degree(v) > 0; }
    const BigRat& leading_coefficient() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }
    friend Poly operator*(const BigRat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative(Var v) const;
    // Coefficient of v^d, as a polynomial in the remaining variables.
    Poly coefficient(Var v, int d) const;
    Poly substitute(Var v, const BigRat& value) const;
    Poly substitute(Var v, const Poly& value) const;
    BigRat evaluate(const std::map<Var, BigRat>& point) const;

    // Exact division by (v - c); returns false if the remainder is nonzero.
    bool divide_linear(Var v, const BigRat& c, Poly& quotient) const;

    // Positive rational c with p/c primitive over the integers, sign following the leading term.
    BigRat content() const;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    void add_term(const Exponent& e, const BigRat& c);
    TermMap terms_;
};

}  // namespace dedekind
