/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over exact rationals in the fixed
 *        variable set {eta, xi, u, v, w, t}, with degree-lexicographic
 *        monomial order.
 */
#pragma once

#include <array>
#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ytwist {

inline constexpr int kNumVars = 6;
enum Var : int { VAR_ETA = 0, VAR_XI = 1, VAR_U = 2, VAR_V = 3, VAR_W = 4, VAR_T = 5 };

inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"eta", "xi", "u", "v", "w", "t"};
    return names[v];
}

inline std::optional<int> var_index(const std::string& s) {
    for (int i = 0; i < kNumVars; ++i)
        if (s == var_name(i)) return i;
    return std::nullopt;
}

struct Monomial {
    std::array<std::uint16_t, kNumVars> exp{};

    int total_degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_one() const {
        for (auto e : exp) if (e) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
        return r;
    }
    // Exact quotient; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) {
            assert(exp[i] >= o.exp[i]);
            r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i) if (exp[i] > o.exp[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
    static Monomial var(int i, unsigned k = 1) {
        Monomial m;
        m.exp[static_cast<size_t>(i)] = static_cast<std::uint16_t>(k);
        return m;
    }
};

// Degree first, then lexicographic with u > v > w > t > eta > xi significance
// (spectral variables outrank the deformation parameters).
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    static constexpr int sig[kNumVars] = {VAR_U, VAR_V, VAR_W, VAR_T, VAR_ETA, VAR_XI};
    for (int i : sig)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; }

inline std::uint64_t hash_monomial(const Monomial& m) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exp) h = hash_combine(h, e);
    return h;
}

/// Terms kept sorted in strictly descending monomial order; no zero coefficients.
class Poly {
public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    Poly(long c) { if (c != 0) terms_.push_back({Monomial{}, Rat(c)}); }
    Poly(const Rat& c) { if (!ytwist::is_zero(c)) terms_.push_back({Monomial{}, c}); }
    static Poly variable(int v, unsigned k = 1) {
        Poly p;
        if (k == 0) return Poly(1);
        p.terms_.push_back({Monomial::var(v, k), Rat(1)});
        return p;
    }
    static Poly term(const Monomial& m, const Rat& c) {
        Poly p;
        if (!ytwist::is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && ytwist::is_one(terms_[0].second); }
    const Monomial& leading_monomial() const { assert(!terms_.empty()); return terms_.front().first; }
    const Rat& leading_coeff() const { assert(!terms_.empty()); return terms_.front().second; }
    Rat constant_term() const {
        if (terms_.empty()) return Rat(0);
        const auto& back = terms_.back();
        return back.first.is_one() ? back.second : Rat(0);
    }

    int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.total_degree(); }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.exp[static_cast<size_t>(v)]));
        return d;
    }
    bool depends_on(int v) const {
        for (const auto& t : terms_) if (t.first.exp[static_cast<size_t>(v)]) return true;
        return false;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = mono_cmp(terms_[i].first, o.terms_[j].first);
            if (c > 0) r.terms_.push_back(terms_[i++]);
            else if (c < 0) r.terms_.push_back(o.terms_[j++]);
            else {
                Rat s = terms_[i].second + o.terms_[j].second;
                if (!ytwist::is_zero(s)) r.terms_.push_back({terms_[i].first, s});
                ++i; ++j;
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

    Poly mul_term(const Monomial& m, const Rat& c) const {
        Poly r;
        if (ytwist::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
        if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
        std::map<Monomial, Rat, bool (*)(const Monomial&, const Monomial&)> acc(mono_less);
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.first * b.first;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(m, a.second * b.second);
                else it->second += a.second * b.second;
            }
        Poly r;
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!ytwist::is_zero(it->second)) r.terms_.push_back({it->first, it->second});
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly operator*(const Rat& c) const {
        if (ytwist::is_zero(c)) return Poly();
        Poly r(*this);
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r(1), b(*this);
        while (k) {
            if (k & 1) r *= b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Integer-primitive decomposition: returns content c > 0 (or < 0 to make
    /// the leading coefficient positive) with *this == c * primitive, where
    /// primitive has coprime integer coefficients and positive leading one.
    Rat content_primitive(Poly& primitive) const {
        if (is_zero()) { primitive = Poly(); return Rat(0); }
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& t : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        if (sgn(leading_coeff()) < 0) c = -c;
        primitive = *this * (Rat(1) / c);
        return c;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 14695981039346656037ULL;
        for (const auto& t : terms_) {
            h = hash_combine(h, hash_monomial(t.first));
            h = hash_combine(h, hash_rat(t.second));
        }
        return h;
    }

    // Univariate view in variable v: degree -> coefficient poly (v-free).
    std::map<int, Poly> univariate_view(int v) const {
        std::map<int, Poly> out;
        for (const auto& t : terms_) {
            Monomial m = t.first;
            int d = m.exp[static_cast<size_t>(v)];
            m.exp[static_cast<size_t>(v)] = 0;
            out[d] += Poly::term(m, t.second);
        }
        return out;
    }

    static Poly from_univariate_view(int v, const std::map<int, Poly>& view) {
        Poly r;
        for (const auto& [d, c] : view)
            r += c * Poly::variable(v, static_cast<unsigned>(d));
        return r;
    }

private:
    std::vector<Term> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Exact division; throws if not an exact multiple.
inline Poly divexact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
    Poly r = f, q;
    while (!r.is_zero()) {
        if (!g.leading_monomial().divides(r.leading_monomial()))
            throw std::domain_error("divexact: not divisible");
        Monomial m = r.leading_monomial() / g.leading_monomial();
        Rat c = r.leading_coeff() / g.leading_coeff();
        q += Poly::term(m, c);
        r -= g.mul_term(m, c);
    }
    return q;
}

namespace detail {

// Pseudo-remainder of f by g viewed as univariate in variable x.
inline Poly pseudo_rem(const Poly& f, const Poly& g, int x) {
    auto fv = f.univariate_view(x);
    auto gv = g.univariate_view(x);
    int dg = gv.rbegin()->first;
    Poly glc = gv.rbegin()->second;
    std::map<int, Poly> r = fv;
    auto deg = [](const std::map<int, Poly>& m) { return m.empty() ? -1 : m.rbegin()->first; };
    while (deg(r) >= dg) {
        int dr = deg(r);
        Poly rlc = r.rbegin()->second;
        // r = glc*r - rlc*x^(dr-dg)*g
        std::map<int, Poly> nr;
        for (auto& [d, c] : r) {
            Poly t = c * glc;
            if (!t.is_zero()) nr[d] = t;
        }
        for (auto& [d, c] : gv) {
            int dd = d + dr - dg;
            auto it = nr.find(dd);
            Poly t = (it == nr.end() ? Poly() : it->second) - c * rlc;
            if (t.is_zero()) nr.erase(dd);
            else nr[dd] = t;
        }
        nr.erase(dr);
        r = std::move(nr);
    }
    return Poly::from_univariate_view(x, r);
}

} // namespace detail

/// Multivariate gcd by primitive polynomial remainder sequences.
/// Result is normalized: integer-primitive with positive leading coefficient.
inline Poly poly_gcd(Poly f, Poly g) {
    if (f.is_zero()) {
        if (g.is_zero()) return Poly();
        Poly p; g.content_primitive(p); return p;
    }
    if (g.is_zero()) { Poly p; f.content_primitive(p); return p; }

    int x = -1;
    for (int i = kNumVars - 1; i >= 0; --i)
        if (f.depends_on(i) || g.depends_on(i)) { x = i; break; }
    if (x < 0) return Poly(1); // both constants

    if (!f.depends_on(x) || !g.depends_on(x)) {
        // x-free one divides into the contents of the other.
        const Poly& free_one = f.depends_on(x) ? g : f;
        const Poly& other = f.depends_on(x) ? f : g;
        Poly acc = free_one;
        for (const auto& [d, c] : other.univariate_view(x)) {
            (void)d;
            acc = poly_gcd(acc, c);
            if (acc.is_one()) break;
        }
        Poly p; acc.content_primitive(p); return p;
    }

    auto fv = f.univariate_view(x);
    auto gv = g.univariate_view(x);
    Poly cf, cg;
    {
        Poly acc;
        for (auto& [d, c] : fv) { (void)d; acc = acc.is_zero() ? c : poly_gcd(acc, c); }
        cf = acc;
        acc = Poly();
        for (auto& [d, c] : gv) { (void)d; acc = acc.is_zero() ? c : poly_gcd(acc, c); }
        cg = acc;
    }
    Poly cont = poly_gcd(cf, cg);
    Poly a = divexact(f, cf), b = divexact(g, cg);
    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    Poly xpart;
    while (true) {
        Poly r = detail::pseudo_rem(a, b, x);
        if (r.is_zero()) {
            // primitive part of b w.r.t. x is the gcd of the primitive parts
            Poly acc;
            for (auto& [d, c] : b.univariate_view(x)) { (void)d; acc = acc.is_zero() ? c : poly_gcd(acc, c); }
            xpart = divexact(b, acc);
            break;
        }
        if (!r.depends_on(x)) { xpart = Poly(1); break; }
        Poly acc;
        for (auto& [d, c] : r.univariate_view(x)) { (void)d; acc = acc.is_zero() ? c : poly_gcd(acc, c); }
        a = std::move(b);
        b = divexact(r, acc);
    }
    Poly result = cont * xpart, prim;
    result.content_primitive(prim);
    return prim;
}

} // namespace ytwist
