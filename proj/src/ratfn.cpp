#include "dedekind/ratfn.hpp"

#include <sstream>

namespace dedekind {

std::string LinearFactor::to_string() const {
    std::string name = var_name(v);
    if (root == 0) return name;
    std::ostringstream os;
    os << "(" << name << (root < 0 ? " + " : " - ") << BigRat(abs(root)).get_str() << ")";
    return os.str();
}

const std::vector<LinearFactor>& denominator_factors() {
    static const std::vector<LinearFactor> factors = [] {
        std::vector<LinearFactor> f;
        f.push_back({Var::beta, 0});
        f.push_back({Var::beta, 1});
        f.push_back({Var::lambda, 0});
        f.push_back({Var::lambda, -1});
        for (int c = -12; c <= 12; ++c) f.push_back({Var::n, c});
        return f;
    }();
    return factors;
}

namespace {

std::size_t nfac() { return denominator_factors().size(); }

RationalFn horner_substitute(const Poly& p, Var v, const RationalFn& value) {
    RationalFn out;
    for (int d = p.degree(v); d >= 0; --d) {
        out *= value;
        out += RationalFn(p.coefficient(v, d));
    }
    return out;
}

}  // namespace

RationalFn::RationalFn(const Poly& num, const Poly& den) : num_(num), rest_(den) {
    if (den.is_zero()) throw AlgebraError("zero denominator");
    fac_.assign(nfac(), 0);
    factor_out(rest_, fac_);
    normalize();
}

void RationalFn::factor_out(Poly& p, std::vector<int>& fac) {
    const auto& fs = denominator_factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (p.degree(fs[i].v) == 0) continue;
        Poly q;
        while (p.divide_linear(fs[i].v, fs[i].root, q)) {
            p = q;
            ++fac[i];
        }
    }
}

Poly RationalFn::factors_poly(const std::vector<int>& e) const {
    Poly r(1);
    const auto& fs = denominator_factors();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) r *= fs[i].poly().pow(static_cast<unsigned>(e[i]));
    return r;
}

void RationalFn::normalize() {
    if (fac_.empty()) fac_.assign(nfac(), 0);
    if (num_.is_zero()) {
        fac_.assign(nfac(), 0);
        rest_ = Poly(1);
        return;
    }
    const auto& fs = denominator_factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly q;
        while (fac_[i] > 0 && num_.divide_linear(fs[i].v, fs[i].root, q)) {
            num_ = q;
            --fac_[i];
        }
    }
    if (!rest_.is_constant()) {
        BigRat c = rest_.content();
        rest_ *= BigRat(1) / c;
        num_ *= BigRat(1) / c;
    } else {
        num_ *= BigRat(1) / rest_.constant_value();
        rest_ = Poly(1);
    }
}

Poly RationalFn::den() const { return factors_poly(fac_) * rest_; }

bool RationalFn::is_polynomial() const {
    for (int e : fac_)
        if (e) return false;
    return rest_.is_constant();
}

Poly RationalFn::as_polynomial() const {
    if (!is_polynomial()) throw AlgebraError("rational function is not a polynomial");
    return num_ * (BigRat(1) / rest_.constant_value());
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (fac_.empty()) fac_.assign(nfac(), 0);
    std::vector<int> of = o.fac_;
    if (of.empty()) of.assign(nfac(), 0);
    std::vector<int> l(nfac()), ea(nfac()), eb(nfac());
    for (std::size_t i = 0; i < nfac(); ++i) {
        l[i] = std::max(fac_[i], of[i]);
        ea[i] = l[i] - fac_[i];
        eb[i] = l[i] - of[i];
    }
    if (rest_ == o.rest_) {
        num_ = num_ * factors_poly(ea) + o.num_ * factors_poly(eb);
    } else {
        num_ = num_ * factors_poly(ea) * o.rest_ + o.num_ * factors_poly(eb) * rest_;
        rest_ = rest_ * o.rest_;
    }
    fac_ = l;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = RationalFn();
    if (fac_.empty()) fac_.assign(nfac(), 0);
    num_ *= o.num_;
    for (std::size_t i = 0; i < o.fac_.size(); ++i) fac_[i] += o.fac_[i];
    if (!o.rest_.is_constant() || o.rest_.constant_value() != 1) rest_ *= o.rest_;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.num_.is_zero()) throw AlgebraError("division by zero rational function");
    RationalFn inv;
    inv.num_ = o.factors_poly(o.fac_) * o.rest_;
    inv.fac_.assign(nfac(), 0);
    inv.rest_ = o.num_;
    factor_out(inv.rest_, inv.fac_);
    inv.normalize();
    return *this *= inv;
}

bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ * b.den() == b.num_ * a.den(); }

RationalFn RationalFn::pow(int e) const {
    if (e < 0) return RationalFn(1) / pow(-e);
    RationalFn r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

RationalFn RationalFn::derivative(Var v) const {
    Poly d = den();
    RationalFn r;
    r.num_ = num_.derivative(v) * d - num_ * d.derivative(v);
    r.fac_ = fac_;
    if (r.fac_.empty()) r.fac_.assign(nfac(), 0);
    for (auto& x : r.fac_) x *= 2;
    r.rest_ = rest_ * rest_;
    r.normalize();
    return r;
}

RationalFn RationalFn::substitute(Var v, const BigRat& value) const {
    return RationalFn(num_.substitute(v, value), den().substitute(v, value));
}

RationalFn RationalFn::substitute(Var v, const RationalFn& value) const {
    return horner_substitute(num_, v, value) / horner_substitute(den(), v, value);
}

BigRat RationalFn::evaluate(const std::map<Var, BigRat>& point) const {
    BigRat d = den().evaluate(point);
    if (d == 0) throw AlgebraError("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return as_polynomial().to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    bool first = true;
    const auto& fs = denominator_factors();
    for (std::size_t i = 0; i < fac_.size(); ++i) {
        if (!fac_[i]) continue;
        if (!first) os << "*";
        first = false;
        std::string f = fs[i].to_string();
        if (fac_[i] > 1 && f[0] != '(') f = "(" + f + ")";
        os << f;
        if (fac_[i] > 1) os << "^" << fac_[i];
    }
    if (!rest_.is_constant() || rest_.constant_value() != 1) {
        if (!first) os << "*";
        os << "(" << rest_.to_string() << ")";
    }
    os << ")";
    return os.str();
}

nlohmann::json RationalFn::to_json() const { return {{"num", num_.to_json()}, {"den", den().to_json()}}; }

RationalFn RationalFn::from_json(const nlohmann::json& j) {
    return RationalFn(Poly::from_json(j.at("num")), Poly::from_json(j.at("den")));
}

}  // namespace dedekind
