#include "dedekind/series.hpp"

#include <cctype>

namespace dedekind {

TruncatedSeries::TruncatedSeries(int order) : coeffs_(order > 0 ? order : 0) {}

TruncatedSeries TruncatedSeries::constant(const RationalFn& c, int order) {
    TruncatedSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::marker(int order) {
    TruncatedSeries s(order);
    if (order > 1) s.coeffs_[1] = RationalFn(1);
    return s;
}

const RationalFn& TruncatedSeries::coeff(int j) const {
    static const RationalFn zero;
    if (j < 0 || j >= order()) return zero;
    return coeffs_[j];
}

void TruncatedSeries::set_coeff(int j, const RationalFn& c) {
    if (j >= 0 && j < order()) coeffs_[j] = c;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    for (int j = 0; j < order() && j < o.order(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    for (int j = 0; j < order() && j < o.order(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RationalFn& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int t = std::min(a.order(), b.order());
    TruncatedSeries r(t);
    for (int i = 0; i < t; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j < t; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::shift(int j) const {
    TruncatedSeries r(order());
    for (int i = 0; i + j < order(); ++i) r.coeffs_[i + j] = coeffs_[i];
    return r;
}

TruncatedSeries compose(const std::vector<RationalFn>& a, const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        r = r * s;
        r += TruncatedSeries::constant(a[i], s.order());
    }
    return r;
}

Poly binomial_poly(const Poly& top, int r) {
    if (r < 0) throw AlgebraError("negative binomial index");
    Poly p(1);
    BigRat fact = 1;
    for (int i = 0; i < r; ++i) {
        p *= top - Poly(i);
        fact *= i + 1;
    }
    return p * (BigRat(1) / fact);
}

std::vector<Poly> series_inv_power(const Poly& ell, int t) {
    std::vector<Poly> c;
    for (int i = 0; i < t; ++i) c.push_back(binomial_poly(-ell, i));
    return c;
}

std::vector<RationalFn> series_log_correction(int t) {
    std::vector<RationalFn> c;
    if (t > 0) c.emplace_back(0);
    RationalFn beta(Poly::var(Var::beta));
    for (int i = 1; i < t; ++i) {
        RationalFn term = RationalFn(1) - beta.pow(1 - i);
        term *= RationalFn(BigRat((i % 2 == 1) ? 1 : -1, i));
        c.push_back(term);
    }
    return c;
}

LambdaSubstitution substitute_lambda(const Poly& f) {
    LambdaSubstitution out;
    out.c = f.degree(Var::lambda);
    Poly numer = Poly::var(Var::beta) + Poly::var(Var::X);
    Poly one_minus_beta = Poly(1) - Poly::var(Var::beta);
    for (int d = 0; d <= out.c; ++d)
        out.g += f.coefficient(Var::lambda, d) * numer.pow(d) * one_minus_beta.pow(out.c - d);
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string s) : s_(normalize(std::move(s))) {}

    RationalFn parse() {
        RationalFn r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    static std::string normalize(std::string s) {
        const std::pair<const char*, const char*> repl[] = {
            {"\xe2\x88\x92", "-"}, {"\xce\xb2", " beta "}, {"\xce\xbb", " lambda "}, {"\\beta", " beta "},
            {"\\lambda", " lambda "}, {"\xc2\xb7", "*"},   {"\\,", " "},          {"\\cdot", "*"}};
        for (const auto& [from, to] : repl) {
            std::size_t p;
            while ((p = s.find(from)) != std::string::npos) s.replace(p, std::string(from).size(), to);
        }
        for (auto& ch : s)
            if (ch == '{' || ch == '[') ch = '(';
            else if (ch == '}' || ch == ']') ch = ')';
        return s;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw AlgebraError("parse error at " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    RationalFn expr() {
        RationalFn r = term();
        for (;;) {
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                char op = s_[pos_++];
                RationalFn t = term();
                if (op == '+') r += t;
                else r -= t;
            } else {
                return r;
            }
        }
    }

    RationalFn term() {
        RationalFn r = unary();
        for (;;) {
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
                char op = s_[pos_++];
                RationalFn f = unary();
                if (op == '*') r *= f;
                else r /= f;
            } else if (starts_primary()) {
                r *= power();
            } else {
                return r;
            }
        }
    }

    RationalFn unary() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return -unary();
        }
        if (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RationalFn power() {
        RationalFn base = primary();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            bool paren = pos_ < s_.size() && s_[pos_] == '(';
            if (paren) ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            if (paren) {
                skip();
                if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected )");
                ++pos_;
            }
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RationalFn primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFn r = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected )");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return RationalFn(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '\\') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "left" || id == "right") return primary();
            return RationalFn(Poly::var(var_from_name(id)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational_fn(const std::string& text) { return Parser(text).parse(); }

BigRat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw AlgebraError("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigRat r(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        if (r.get_den() == 0) throw AlgebraError("zero denominator in " + text);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        BigInt w(whole), f(frac.empty() ? std::string("0") : frac);
        BigInt numer = abs(w) * scale + f;
        if (neg) numer = -numer;
        BigRat r(numer, scale);
        r.canonicalize();
        return r;
    }
    try {
        return BigRat(BigInt(s));
    } catch (const std::invalid_argument&) {
        throw AlgebraError("not a rational: " + text);
    }
}

}  // namespace dedekind
