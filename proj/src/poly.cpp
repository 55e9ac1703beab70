#include "dedekind/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dedekind {

namespace {

const std::array<const char*, kNumVars> kVarNames = {"n", "lambda", "beta", "X", "Y"};

int exp_total(const Exponent& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

std::string rat_str(const BigRat& q) { return q.get_str(); }

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var var_from_name(const std::string& s) {
    for (int i = 0; i < kNumVars; ++i)
        if (s == kVarNames[i]) return static_cast<Var>(i);
    if (s == "λ" || s == "l") return Var::lambda;
    if (s == "β" || s == "b") return Var::beta;
    throw AlgebraError("unknown variable: " + s);
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Exponent{}, BigRat(c));
}

Poly::Poly(const BigRat& c) {
    BigRat v = c;
    v.canonicalize();
    if (v != 0) terms_.emplace(Exponent{}, v);
}

Poly Poly::var(Var v, unsigned power) {
    Exponent e{};
    e[static_cast<int>(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, 1);
}

Poly Poly::monomial(const Exponent& e, const BigRat& c) {
    Poly p;
    BigRat v = c;
    v.canonicalize();
    if (v != 0) p.terms_.emplace(e, v);
    return p;
}

Poly Poly::linear(Var v, const BigRat& a, const BigRat& b) { return var(v) * a + Poly(b); }

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

BigRat Poly::constant_value() const {
    auto it = terms_.find(Exponent{});
    return it == terms_.end() ? BigRat(0) : it->second;
}

int Poly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<int>(v)]);
    return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : exp_total(terms_.begin()->first); }

const BigRat& Poly::leading_coefficient() const {
    if (terms_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Exponent& e, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const BigRat& c) {
    BigRat v = c;
    v.canonicalize();
    if (v == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= v;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

Poly Poly::coefficient(Var v, int d) const {
    Poly r;
    int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] != d) continue;
        Exponent f = e;
        f[i] = 0;
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::substitute(Var v, const BigRat& value) const {
    Poly r;
    int i = static_cast<int>(v);
    BigRat x = value;
    x.canonicalize();
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[i] = 0;
        BigRat p = 1;
        for (int k = 0; k < e[i]; ++k) p *= x;
        r.add_term(f, c * p);
    }
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const {
    int deg = degree(v);
    std::vector<Poly> coeffs(deg + 1);
    for (int d = 0; d <= deg; ++d) coeffs[d] = coefficient(v, d);
    Poly r;
    for (int d = deg; d >= 0; --d) {
        r *= value;
        r += coeffs[d];
    }
    return r;
}

BigRat Poly::evaluate(const std::map<Var, BigRat>& raw) const {
    std::map<Var, BigRat> point = raw;
    for (auto& [v, x] : point) x.canonicalize();
    BigRat total = 0;
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end()) throw AlgebraError(std::string("no value for variable ") + kVarNames[i]);
            for (int k = 0; k < e[i]; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

bool Poly::divide_linear(Var v, const BigRat& c, Poly& quotient) const {
    int deg = degree(v);
    quotient = Poly();
    if (deg == 0) return is_zero();
    // Synthetic division in v with polynomial coefficients.
    Poly carry;
    std::vector<Poly> q(deg);
    for (int d = deg; d >= 1; --d) {
        carry = coefficient(v, d) + carry * c;
        q[d - 1] = carry;
    }
    Poly rem = coefficient(v, 0) + carry * c;
    if (!rem.is_zero()) return false;
    for (int d = 0; d < deg; ++d) quotient += q[d] * var(v, d);
    return true;
}

BigRat Poly::content() const {
    if (terms_.empty()) return 1;
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat r(g, l);
    r.canonicalize();
    if (leading_coefficient() < 0) r = -r;
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = exp_total(e) > 0;
        bool wrote = false;
        if (!has_var || a != 1) {
            os << rat_str(a);
            wrote = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

nlohmann::json Poly::to_json() const {
    std::vector<int> used;
    for (int i = 0; i < kNumVars; ++i)
        if (degree(static_cast<Var>(i)) > 0) used.push_back(i);
    nlohmann::json vars = nlohmann::json::array();
    for (int i : used) vars.push_back(kVarNames[i]);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json ex = nlohmann::json::array();
        for (int i : used) ex.push_back(e[i]);
        terms.push_back({{"exp", ex}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

Poly Poly::from_json(const nlohmann::json& j) {
    std::vector<int> idx;
    for (const auto& v : j.at("vars")) idx.push_back(static_cast<int>(var_from_name(v.get<std::string>())));
    Poly p;
    for (const auto& t : j.at("terms")) {
        Exponent e{};
        const auto& ex = t.at("exp");
        if (ex.size() != idx.size()) throw AlgebraError("exponent length mismatch");
        for (std::size_t i = 0; i < idx.size(); ++i) e[idx[i]] = ex[i].get<std::uint16_t>();
        BigRat c(BigInt(t.at("num").get<std::string>()), BigInt(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace dedekind
