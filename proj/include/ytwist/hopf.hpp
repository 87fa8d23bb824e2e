/**
 * @file hopf.hpp
 * @brief Hopf structure machinery: the twist series F and its inverse, the
 *        cocycle identity, twisted coproducts by conjugation, closed-form
 *        comparison, Hopf-axiom verification, and the triangular R = F21 F^-1.
 *
 * Everything here works in the series picture: elements of the host algebra
 * (U(sl2) or the Yangian) with xi-power order indices; T = 1 - 2 xi f enters
 * as its geometric series. Coefficients are kept in normal form with respect
 * to the host's rewrite system, so per-order equality is exact.
 */
#pragma once

#include <functional>

#include "ideal.hpp"
#include "series.hpp"
#include "sl2.hpp"

namespace ytwist {

/// Per-generator algebra map into series (each image has out_legs legs).
struct SeriesAlgebraMap {
    int out_legs = 1;
    std::map<GenId, Series> images;
    Normalizer nf; // optional per-coefficient normalization

    const Series& image(GenId g) const {
        auto it = images.find(g);
        if (it == images.end())
            throw std::invalid_argument("series map: no image for generator id " +
                                        std::to_string(static_cast<unsigned>(g)));
        return it->second;
    }

    Series apply_word(const Word& w, int bound) const {
        Series acc = Series::unit(out_legs, bound);
        for (GenId g : w) {
            acc = acc * image(g);
            if (nf) acc = acc.map_coeffs(nf);
        }
        return acc;
    }

    /// Apply to one leg of a multi-leg element; other legs pass through.
    Series apply_leg(const NCElement& e, int leg, int bound) const {
        int res_legs = e.legs() - 1 + out_legs;
        Series out(res_legs, bound);
        for (const auto& [t, c] : e.terms()) {
            Series img = apply_word(t[static_cast<size_t>(leg)], bound);
            for (const auto& [k, ie] : img.entries()) {
                for (const auto& [it, ic] : ie.terms()) {
                    TensorWord nt;
                    nt.reserve(static_cast<size_t>(res_legs));
                    for (int i = 0; i < leg; ++i) nt.push_back(t[static_cast<size_t>(i)]);
                    for (const auto& wv : it) nt.push_back(wv);
                    for (int i = leg + 1; i < e.legs(); ++i) nt.push_back(t[static_cast<size_t>(i)]);
                    NCElement add(res_legs);
                    add.add_term(std::move(nt), c * ic);
                    out.add(k, add);
                }
            }
        }
        return out;
    }

    Series apply_leg(const Series& s, int leg) const {
        int res_legs = 0;
        Series out(1, s.bound());
        bool first = true;
        for (const auto& [k, e] : s.entries()) {
            Series part = apply_leg(e, leg, s.bound());
            if (first) {
                res_legs = part.legs();
                out = Series(res_legs, s.bound());
                first = false;
            }
            for (const auto& [j, pe] : part.entries()) out.add(k + j, pe);
        }
        if (first) return Series(s.legs() - 1 + out_legs, s.bound());
        if (nf) out = out.map_coeffs(nf);
        return out;
    }
};

/// Twisted-structure engine over a host presentation containing at least
/// the Borel pair f, h (and optionally e, f1).
class TwistEngine {
public:
    TwistEngine(const Presentation& host, int xi_bound)
        : host_(host), rw_(host), xi_bound_(xi_bound) {
        f_ = host.alphabet.require("f");
        h_ = host.alphabet.require("h");
        e_ = host.alphabet.id_of("e").value_or(static_cast<GenId>(-1));
        f1_ = host.alphabet.id_of("f1").value_or(static_cast<GenId>(-1));
        nf1_ = [this](const NCElement& x) { return rw_.reduce(x); };
    }

    const Presentation& host() const { return host_; }
    const Rewriter& rewriter() const { return rw_; }
    int bound() const { return xi_bound_; }
    Normalizer normalizer() const { return nf1_; }

    NCElement gen1(GenId g) const { return NCElement::generator(g); }

    /// F = sum_k (xi^k / k!) prod_{i=0}^{k-1} (h + 2i)  (x)  f^k.
    Series build_twist(int N) const {
        Series F(2, N);
        for (int k = 0; k <= N; ++k) {
            NCElement hprod = NCElement::unit(1);
            for (int i = 0; i < k; ++i)
                hprod *= NCElement::generator(h_) + NCElement::unit(1, Scalar(2L * i));
            NCElement fpow = NCElement::from_word(Word(static_cast<size_t>(k), f_));
            NCElement entry(2);
            Scalar c = Scalar(Rat(1, factorial(static_cast<unsigned>(k))));
            for (const auto& [ta, ca] : hprod.terms())
                for (const auto& [tb, cb] : fpow.terms())
                    entry.add_term({ta[0], tb[0]}, ca * cb * c);
            F.set(k, rw_.reduce(entry));
        }
        return F;
    }

    /// F^-1 = sum_k ((-xi)^k / k!) prod_{i=0}^{k-1} (h - 2i)  (x)  f^k.
    Series build_twist_inverse(int N) const {
        Series Fi(2, N);
        for (int k = 0; k <= N; ++k) {
            NCElement hprod = NCElement::unit(1);
            for (int i = 0; i < k; ++i)
                hprod *= NCElement::generator(h_) - NCElement::unit(1, Scalar(2L * i));
            NCElement fpow = NCElement::from_word(Word(static_cast<size_t>(k), f_));
            NCElement entry(2);
            Scalar c = Scalar(Rat((k % 2) ? -1 : 1, factorial(static_cast<unsigned>(k))));
            for (const auto& [ta, ca] : hprod.terms())
                for (const auto& [tb, cb] : fpow.terms())
                    entry.add_term({ta[0], tb[0]}, ca * cb * c);
            Fi.set(k, rw_.reduce(entry));
        }
        return Fi;
    }

    /// T = 1 - 2 xi f and its inverse/powers as xi-series.
    Series t_series(int N) const {
        Series T(1, N);
        T.set(0, NCElement::unit(1));
        T.set(1, NCElement::generator(f_) * Scalar(-2));
        return T;
    }
    Series t_inverse_series(int N) const { return t_series(N).inverse(nf1_); }

    /// Undeformed coproduct of the host: primitive on f, h, e;
    /// Delta(f1) = f1 (x) 1 + 1 (x) f1 + eta f (x) h.
    SeriesAlgebraMap base_coproduct(int N) const {
        SeriesAlgebraMap m;
        m.out_legs = 2;
        m.nf = [this](const NCElement& x) { return rw_.reduce(x); };
        auto prim = [&](GenId g) {
            Series s(2, N);
            s.set(0, NCElement::generator(g, 2, 0) + NCElement::generator(g, 2, 1));
            return s;
        };
        m.images.emplace(f_, prim(f_));
        m.images.emplace(h_, prim(h_));
        if (e_ != static_cast<GenId>(-1)) m.images.emplace(e_, prim(e_));
        if (f1_ != static_cast<GenId>(-1)) {
            Series s(2, N);
            NCElement mixed(2);
            mixed.add_term({Word{f_}, Word{h_}}, Scalar::eta());
            s.set(0, NCElement::generator(f1_, 2, 0) + NCElement::generator(f1_, 2, 1) + mixed);
            m.images.emplace(f1_, s);
        }
        return m;
    }

    /// Undeformed antipode: S(x) = -x on f, h, e; S(f1) = -f1 + eta f h.
    SeriesAlgebraMap base_antipode(int N) const {
        SeriesAlgebraMap m;
        m.out_legs = 1;
        m.nf = nf1_;
        auto neg = [&](GenId g) {
            Series s(1, N);
            s.set(0, -NCElement::generator(g));
            return s;
        };
        m.images.emplace(f_, neg(f_));
        m.images.emplace(h_, neg(h_));
        if (e_ != static_cast<GenId>(-1)) m.images.emplace(e_, neg(e_));
        if (f1_ != static_cast<GenId>(-1)) {
            Series s(1, N);
            s.set(0, -NCElement::generator(f1_) +
                         NCElement::from_word(Word{f_, h_}) * Scalar::eta());
            m.images.emplace(f1_, s);
        }
        return m;
    }

    /// Antihomomorphic extension of a per-generator antipode to words.
    Series apply_antihom(const SeriesAlgebraMap& s_map, const NCElement& e, int bound) const {
        Series out(1, bound);
        for (const auto& [t, c] : e.terms()) {
            Series acc = Series::unit(1, bound);
            const Word& w = t[0];
            for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * s_map.image(*it);
            acc = acc.map_coeffs(nf1_);
            for (const auto& [k, ae] : acc.entries()) out.add(k, ae * c);
        }
        return out;
    }

    /// Conjugation oracle: Delta_F(x) = F * Delta0(x) * F^-1, truncated.
    Series twist_conjugate(const NCElement& x, int N) const {
        Series F = build_twist(N), Fi = build_twist_inverse(N);
        SeriesAlgebraMap d0 = base_coproduct(N);
        Series mid = d0.apply_leg(x, 0, N); // x is 1-leg
        return (F * mid * Fi).map_coeffs(nf1_);
    }
    Series twist_conjugate(const Series& x, int N) const {
        Series F = build_twist(N), Fi = build_twist_inverse(N);
        SeriesAlgebraMap d0 = base_coproduct(N);
        Series mid = d0.apply_leg(x, 0);
        return (F * mid * Fi).map_coeffs(nf1_);
    }

    /// R = F^21 * F^-1.
    Series build_r_twist(int N) const {
        return (build_twist(N).flip() * build_twist_inverse(N)).map_coeffs(nf1_);
    }

    GenId f() const { return f_; }
    GenId h() const { return h_; }
    GenId e() const { return e_; }
    GenId f1() const { return f1_; }

private:
    const Presentation& host_;
    Rewriter rw_;
    int xi_bound_;
    GenId f_{}, h_{}, e_{}, f1_{};
    Normalizer nf1_;
};

struct CocycleReport {
    std::vector<int> failed_orders;
    int orders_checked = 0;
    bool ok() const { return failed_orders.empty(); }
};

/// F12 (Delta (x) id) F  ==  F23 (id (x) Delta) F, order by order, with the
/// undeformed primitive coproduct on the Borel pair.
inline CocycleReport check_cocycle(const TwistEngine& eng, const Series& F, int N) {
    SeriesAlgebraMap d0 = eng.base_coproduct(N);
    Series F12(3, N), F23(3, N);
    for (const auto& [k, e] : F.entries()) {
        F12.set(k, e.insert_unit_leg(2));
        F23.set(k, e.insert_unit_leg(0));
    }
    Series lhs = (F12 * d0.apply_leg(F, 0)).map_coeffs(eng.normalizer());
    Series rhs = (F23 * d0.apply_leg(F, 1)).map_coeffs(eng.normalizer());
    CocycleReport rep;
    rep.orders_checked = N + 1;
    for (int k = 0; k <= N; ++k)
        if (lhs.at(k) != rhs.at(k)) rep.failed_orders.push_back(k);
    return rep;
}

/// Printed and adjudicated closed forms of the twisted structure maps,
/// built as series over the host with T = 1 - 2 xi f.
class ClosedForms {
public:
    ClosedForms(const TwistEngine& eng, int N) : eng_(eng), N_(N) {
        T_ = eng.t_series(N);
        Ti_ = eng.t_inverse_series(N);
        one_ = elem_series(NCElement::unit(1), N);
    }

    const Series& T() const { return T_; }
    const Series& Ti() const { return Ti_; }

    Series gen(GenId g) const { return elem_series(NCElement::generator(g), N_); }
    Series gen(const char* name) const { return gen(eng_.host().alphabet.require(name)); }

    /// Delta(h) = h (x) T^-1 + 1 (x) h.
    Series cop_h() const { return tensor(gen(eng_.h()), Ti_) + tensor(one_, gen(eng_.h())); }

    /// Delta(T^{+-1}) group-like.
    Series cop_T() const { return tensor(T_, T_); }
    Series cop_Ti() const { return tensor(Ti_, Ti_); }

    /// Printed form of Delta(e):
    /// e (x) T^-1 + 1 (x) e - xi h (x) T^-1 h - (xi/2) h(h-2) (x) T^-1
    ///                                        - (xi/2) h(h+2) (x) T^-2.
    Series cop_e_printed() const {
        NCElement h = NCElement::generator(eng_.h());
        NCElement e = NCElement::generator(eng_.e());
        NCElement one = NCElement::unit(1);
        Series s = tensor(gen(eng_.e()), Ti_) + tensor(one_, gen(eng_.e()));
        s = s - tensor(elem_series(h, N_), Ti_ * elem_series(h, N_)).shift_orders(1);
        NCElement hm = h * (h - one * Scalar(2)), hp = h * (h + one * Scalar(2));
        s = s - tensor(elem_series(hm, N_), Ti_).shift_orders(1) * Scalar(Rat(1, 2));
        s = s - tensor(elem_series(hp, N_), Ti_ * Ti_).shift_orders(1) * Scalar(Rat(1, 2));
        return s.map_coeffs(eng_.normalizer());
    }

    /// Printed form of Delta(e_{d-a}) (the f1 generator):
    /// e (x) T + 1 (x) f1 + xi h (x) T^-1 + (eta/2 xi) h (x) (1 - T).
    Series cop_f1_printed() const {
        NCElement h = NCElement::generator(eng_.h());
        Series s = tensor(gen(eng_.e()), T_) + tensor(one_, gen(eng_.f1()));
        s = s + tensor(elem_series(h, N_), Ti_).shift_orders(1);
        s = s + tensor(elem_series(h, N_), one_ - T_).shift_orders(-1) * (Scalar::eta() / Scalar(2));
        return s.map_coeffs(eng_.normalizer());
    }

    /// S(h) = -h T.
    Series antipode_h() const {
        return (elem_series(-NCElement::generator(eng_.h()), N_) * T_).map_coeffs(eng_.normalizer());
    }

    /// The two printed variants of S(e): -e T - (xi/2) h(h+2) T (T - k), k = 2 or 1.
    Series antipode_e_printed(int k) const {
        NCElement h = NCElement::generator(eng_.h());
        NCElement e = NCElement::generator(eng_.e());
        NCElement one = NCElement::unit(1);
        Series s = elem_series(-e, N_) * T_;
        Series tail = elem_series(h * (h + one * Scalar(2)), N_) * T_ *
                      (T_ - one_ * Scalar(static_cast<long>(k)));
        s = s - tail.shift_orders(1) * Scalar(Rat(1, 2));
        return s.map_coeffs(eng_.normalizer());
    }

    /// Printed S(e_{d-a}): -f1 T^-1 - (xi/eta) h T + (eta/2 xi) h T^-1 - (eta/2 xi) h.
    Series antipode_f1_printed() const {
        NCElement h = NCElement::generator(eng_.h());
        Series s = elem_series(-NCElement::generator(eng_.f1()), N_) * Ti_;
        s = s - (elem_series(h, N_) * T_).shift_orders(1) * (Scalar(1) / Scalar::eta());
        s = s + (elem_series(h, N_) * (Ti_ - one_)).shift_orders(-1) * (Scalar::eta() / Scalar(2));
        return s.map_coeffs(eng_.normalizer());
    }

private:
    const TwistEngine& eng_;
    int N_;
    Series T_{1, 0}, Ti_{1, 0}, one_{1, 0};
};

/// Result of comparing an oracle series against a closed form, per order.
struct FormComparison {
    bool match = true;
    int first_mismatch_order = -1;
    NCElement oracle_value{2};
    NCElement closed_value{2};
    Series oracle{2, 0};
    Series closed{2, 0};
};

inline FormComparison compare_series(const Series& oracle, const Series& closed) {
    FormComparison out;
    out.oracle = oracle;
    out.closed = closed;
    int b = std::min(oracle.bound(), closed.bound());
    for (int k = 0; k <= b; ++k) {
        if (oracle.at(k) != closed.at(k)) {
            out.match = false;
            out.first_mismatch_order = k;
            out.oracle_value = oracle.at(k);
            out.closed_value = closed.at(k);
            return out;
        }
    }
    return out;
}

/// A twisted Hopf table in the series picture: coproduct / antipode /
/// counit per generator of the host presentation.
struct HopfSeriesTable {
    const TwistEngine* eng = nullptr;
    int bound = 0;
    SeriesAlgebraMap cop;      // out_legs = 2
    SeriesAlgebraMap antipode; // out_legs = 1
    std::map<GenId, Scalar> counit;

    Scalar eps(GenId g) const {
        auto it = counit.find(g);
        return it == counit.end() ? Scalar() : it->second;
    }
};

/// Solve m(S (x) id) Delta(g) = 0 for S(g), given the antipode on every other
/// letter that occurs. Requires Delta(g) = g (x) X + rest with X a unit series
/// and no other term whose first leg is the bare word g.
inline Series derive_antipode(const TwistEngine& eng, const Series& delta_g, GenId g,
                              const SeriesAlgebraMap& known_s) {
    int N = delta_g.bound();
    Series X(1, N);
    Series conv(1, N);
    Word gw(1, g);
    for (const auto& [k, e] : delta_g.entries())
        for (const auto& [t, c] : e.terms()) {
            if (t[0] == gw) {
                NCElement leg2(1);
                leg2.add_term({t[1]}, c);
                X.add(k, leg2);
                continue;
            }
            Series sw = eng.apply_antihom(known_s, NCElement::from_word(t[0]), N);
            NCElement other = NCElement::from_word(t[1]);
            for (const auto& [j, se] : sw.entries())
                conv.add(k + j, eng.rewriter().reduce(se * other * c));
        }
    Series Xi = X.inverse(eng.normalizer());
    return ((-conv) * Xi).map_coeffs(eng.normalizer());
}

struct AxiomIssue {
    std::string axiom;
    std::string generator;
    int order;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomIssue> issues;
    int checks = 0;
    bool ok() const { return issues.empty(); }
};

/// Coassociativity, counit and antipode axioms, generator-wise, per xi-order.
/// Host coefficients are reduced to normal form; if the host rewrite system is
/// partial (Yangian cubies), nonzero residues are retried by ideal membership.
inline AxiomReport verify_hopf_axioms(const HopfSeriesTable& tab, int degree_bound,
                                       IdealContext* fallback = nullptr) {
    AxiomReport rep;
    const TwistEngine& eng = *tab.eng;
    int N = tab.bound;
    auto is_zero_elem = [&](const NCElement& x) {
        if (x.is_zero()) return true;
        if (fallback && x.legs() == 1)
            return fallback->member(x, std::max(degree_bound, x.degree())).verdict == Verdict::InIdeal;
        if (fallback) return fallback->member_tensor(x, degree_bound) == Verdict::InIdeal;
        return false;
    };
    auto check_zero_series = [&](const Series& s, const std::string& axiom, GenId g) {
        ++rep.checks;
        for (const auto& [k, e] : s.entries()) {
            if (is_zero_elem(e)) continue;
            std::vector<const Alphabet*> as(static_cast<size_t>(e.legs()), &eng.host().alphabet);
            rep.issues.push_back({axiom, eng.host().alphabet.name_of(g), k, e.to_string(as)});
            break;
        }
    };

    for (const auto& [g, dg] : tab.cop.images) {
        // coassociativity
        Series lhs = tab.cop.apply_leg(dg, 0);
        Series rhs = tab.cop.apply_leg(dg, 1);
        check_zero_series(lhs - rhs, "coassociativity", g);

        // counit: (eps (x) id) Delta(g) = g = (id (x) eps) Delta(g)
        auto eval_eps = [&](const NCElement& e2, int leg) {
            NCElement out(1);
            for (const auto& [t, c] : e2.terms()) {
                Scalar s = c;
                for (GenId gg : t[static_cast<size_t>(leg)]) s *= tab.eps(gg);
                if (!s.is_zero()) out.add_term({t[static_cast<size_t>(1 - leg)]}, s);
            }
            return out;
        };
        Series idg(1, N);
        idg.set(0, NCElement::generator(g));
        for (int side = 0; side < 2; ++side) {
            Series r(1, N);
            for (const auto& [k, e] : dg.entries()) r.add(k, eval_eps(e, side));
            check_zero_series(r - idg, side == 0 ? "counit-left" : "counit-right", g);
        }

        // antipode: m (S (x) id) Delta(g) = eps(g) 1 = m (id (x) S) Delta(g)
        for (int side = 0; side < 2; ++side) {
            Series conv(1, N);
            for (const auto& [k, e] : dg.entries())
                for (const auto& [t, c] : e.terms()) {
                    Series sw = eng.apply_antihom(tab.antipode, NCElement::from_word(t[static_cast<size_t>(side)]), N);
                    NCElement other = NCElement::from_word(t[static_cast<size_t>(1 - side)]);
                    for (const auto& [j, se] : sw.entries()) {
                        NCElement prod = side == 0 ? se * other : other * se;
                        conv.add(k + j, eng.rewriter().reduce(prod * c));
                    }
                }
            Series expect(1, N);
            expect.set(0, NCElement::unit(1, tab.eps(g)));
            check_zero_series(conv - expect, side == 0 ? "antipode-left" : "antipode-right", g);
        }
    }

    // homomorphism property: Delta and S map host relations to zero
    for (size_t ri = 0; ri < eng.host().relations.size(); ++ri) {
        const NCElement& rel = eng.host().relations[ri];
        Series dr = tab.cop.apply_leg(rel, 0, N);
        ++rep.checks;
        for (const auto& [k, e] : dr.entries()) {
            if (is_zero_elem(e)) continue;
            std::vector<const Alphabet*> as(2, &eng.host().alphabet);
            rep.issues.push_back({"coproduct-relation", "relation#" + std::to_string(ri), k, e.to_string(as)});
            break;
        }
        Series sr = eng.apply_antihom(tab.antipode, rel, N);
        ++rep.checks;
        for (const auto& [k, e] : sr.entries()) {
            if (is_zero_elem(e)) continue;
            std::vector<const Alphabet*> as(1, &eng.host().alphabet);
            rep.issues.push_back({"antipode-relation", "relation#" + std::to_string(ri), k, e.to_string(as)});
            break;
        }
    }
    return rep;
}

} // namespace ytwist
