/**
 * @file scalar.hpp
 * @brief Exact rational functions in {eta, xi, u, v, w, t}: the coefficient
 *        field. Canonical form: numerator/denominator coprime, denominator
 *        monic under the monomial order.
 */
#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "poly.hpp"

namespace ytwist {

struct scalar_division_by_zero : std::domain_error {
    std::string numerator, denominator;
    scalar_division_by_zero(std::string n, std::string d)
        : std::domain_error("scalar division by zero: (" + n + ")/(" + d + ")"),
          numerator(std::move(n)), denominator(std::move(d)) {}
};

struct scalar_pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const Rat& c) : num_(c), den_(1) {}
    Scalar(Poly n) : num_(std::move(n)), den_(1) {}
    Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    static Scalar variable(int v, unsigned k = 1) { return Scalar(Poly::variable(v, k)); }
    static Scalar eta() { return variable(VAR_ETA); }
    static Scalar xi() { return variable(VAR_XI); }
    static Scalar u() { return variable(VAR_U); }
    static Scalar v() { return variable(VAR_V); }
    static Scalar w() { return variable(VAR_W); }
    static Scalar t() { return variable(VAR_T); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_one(); }
    Rat rational_value() const {
        if (!is_rational_constant()) throw std::domain_error("scalar is not a rational constant");
        return num_.is_zero() ? Rat(0) : num_.terms()[0].second;
    }

    Scalar operator-() const { Scalar r(*this); r.num_ = -r.num_; return r; }

    Scalar operator+(const Scalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        if (is_zero() || o.is_zero()) return Scalar();
        return Scalar(num_ * o.num_, den_ * o.den_);
    }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw scalar_division_by_zero(to_string(), o.to_string());
        return Scalar(num_ * o.den_, den_ * o.num_);
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar pow(int k) const {
        if (k < 0) return Scalar(1) / pow(-k);
        Scalar r(1), b(*this);
        unsigned e = static_cast<unsigned>(k);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::uint64_t hash() const { return hash_combine(num_.hash(), den_.hash()); }

    /// Exact substitution of variables by scalars; throws scalar_pole_error if
    /// a denominator vanishes identically under the substitution.
    Scalar substitute(const std::map<int, Scalar>& bindings) const {
        Scalar n = substitute_poly(num_, bindings);
        Scalar d = substitute_poly(den_, bindings);
        if (d.is_zero()) throw scalar_pole_error("substitution produced an identically zero denominator");
        return n / d;
    }

    std::string to_string() const {
        if (num_.is_zero()) return "0";
        // Scale so both parts have integer coefficients (canonical text form).
        Poly np, dp;
        Rat cn = num_.content_primitive(np);
        Rat cd = den_.content_primitive(dp);
        Rat c = cn / cd; // overall rational factor; den is monic so cd = lc-content
        Poly n_int = np * Rat(c.get_num());
        Poly d_int = dp * Rat(c.get_den());
        std::string ns = poly_to_string(n_int);
        std::string ds = poly_to_string(d_int);
        if (d_int.is_one()) return ns;
        bool npar = n_int.terms().size() > 1;
        // a denominator like 2*xi or xi*eta must keep its grouping under '/'
        auto needs_group = [](const Poly& p) {
            if (p.terms().size() > 1) return true;
            const auto& [m, c] = p.terms()[0];
            int vars = 0;
            for (int i = 0; i < kNumVars; ++i) vars += m.exp[static_cast<size_t>(i)] ? 1 : 0;
            return !ytwist::is_one(c) || vars > 1;
        };
        bool dpar = needs_group(d_int);
        std::string out;
        out += npar ? "(" + ns + ")" : ns;
        out += "/";
        out += dpar ? "(" + ds + ")" : ds;
        return out;
    }

    static std::string poly_to_string(const Poly& p) {
        if (p.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) { os << "-"; a = -a; }
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            first = false;
            bool need_coeff = !ytwist::is_one(a) || m.is_one();
            if (need_coeff) os << a;
            bool printed = need_coeff;
            for (int i = 0; i < kNumVars; ++i) {
                int e = m.exp[static_cast<size_t>(i)];
                if (!e) continue;
                if (printed) os << "*";
                os << var_name(i);
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }

    static Scalar parse(const std::string& text);

private:
    Poly num_, den_;

    static Scalar substitute_poly(const Poly& p, const std::map<int, Scalar>& bindings) {
        Scalar acc;
        for (const auto& [m, c] : p.terms()) {
            Scalar term{Rat(c)};
            for (int i = 0; i < kNumVars; ++i) {
                int e = m.exp[static_cast<size_t>(i)];
                if (!e) continue;
                auto it = bindings.find(i);
                Scalar base = (it == bindings.end()) ? Scalar::variable(i) : it->second;
                term *= base.pow(e);
            }
            acc += term;
        }
        return acc;
    }

    void canonicalize() {
        if (den_.is_zero()) throw scalar_division_by_zero(poly_to_string(num_), "0");
        if (num_.is_zero()) { den_ = Poly(1); return; }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        Rat lc = den_.leading_coeff();
        if (!ytwist::is_one(lc)) {
            Rat inv = Rat(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

inline Scalar operator*(const Rat& c, const Scalar& s) { return Scalar(c) * s; }
inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}
    Scalar parse() {
        Scalar r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return r;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos_) + ": " + msg +
                                    " in '" + s_ + "'");
    }
    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar r = eat('-') ? -term() : (eat('+'), term());
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Scalar term() {
        Scalar r = factor();
        while (true) {
            if (eat('*')) r *= factor();
            else if (eat('/')) r /= factor();
            else return r;
        }
    }
    Scalar factor() {
        Scalar base = atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            long e = integer();
            base = base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }
    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    Scalar atom() {
        skip_ws();
        if (eat('(')) {
            Scalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rat(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto idx = var_index(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return Scalar::variable(*idx);
        }
        fail("unexpected character");
    }
};

} // namespace detail

inline Scalar Scalar::parse(const std::string& text) { return detail::ScalarParser(text).parse(); }

} // namespace ytwist
