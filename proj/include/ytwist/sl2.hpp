/**
 * @file sl2.hpp
 * @brief Built-in presentations: U(sl2), U(b-), the Chevalley-style Yangian
 *        (commutation part and full), and the twisted algebras with the
 *        invertible element T adjoined as a generator pair.
 *
 * Conventions: [e,f] = h, [h,e] = 2e, [h,f] = -2f, with f the lowering
 * generator. The Yangian adds f1 (the level-one lowering generator) with
 * [h,f1] = -2 f1 and [f,f1] = eta f^2, plus two cubic relations. The twisted
 * algebras use T = 1 - 2 xi f, adjoined as T, Ti with T*Ti = Ti*T = 1.
 */
#pragma once

#include "presentation.hpp"

namespace ytwist {

inline Scalar sc_eta() { return Scalar::eta(); }
inline Scalar sc_xi() { return Scalar::xi(); }

/// U(b-): generators f < h, relation [h,f] = -2f.
inline Presentation make_borel_minus() {
    Presentation p;
    p.name = "U(b-)";
    GenId f = p.alphabet.add("f");
    GenId h = p.alphabet.add("h");
    NCElement F = NCElement::generator(f), H = NCElement::generator(h);
    p.add_rule(Word{h, f}, F * H - F * Scalar(2));
    p.confluent = true;
    return p;
}

/// U(sl2): generators f < h < e.
inline Presentation make_usl2() {
    Presentation p;
    p.name = "U(sl2)";
    GenId f = p.alphabet.add("f");
    GenId h = p.alphabet.add("h");
    GenId e = p.alphabet.add("e");
    NCElement F = NCElement::generator(f), H = NCElement::generator(h), E = NCElement::generator(e);
    p.add_rule(Word{h, f}, F * H - F * Scalar(2));       // hf = fh - 2f
    p.add_rule(Word{e, f}, F * E + H);                   // ef = fe + h
    p.add_rule(Word{e, h}, H * E - E * Scalar(2));       // eh = he - 2e
    p.confluent = true;
    return p;
}

/// Chevalley-style Yangian, commutation relations only (confluent part):
/// f < h < e < f1.
inline Presentation make_yangian_commutation() {
    Presentation p;
    p.name = "Y_eta(sl2) commutation";
    GenId f = p.alphabet.add("f");
    GenId h = p.alphabet.add("h");
    GenId e = p.alphabet.add("e");
    GenId f1 = p.alphabet.add("f1");
    NCElement F = NCElement::generator(f), H = NCElement::generator(h), E = NCElement::generator(e),
              F1 = NCElement::generator(f1);
    p.add_rule(Word{h, f}, F * H - F * Scalar(2));
    p.add_rule(Word{e, f}, F * E + H);
    p.add_rule(Word{e, h}, H * E - E * Scalar(2));
    p.add_rule(Word{f1, h}, H * F1 + F1 * Scalar(2));            // [h,f1] = -2 f1
    p.add_rule(Word{f1, f}, F * F1 - F * F * Scalar::eta());     // [f,f1] = eta f^2
    p.confluent = true;
    return p;
}

namespace detail {
inline NCElement commutator(const NCElement& a, const NCElement& b) { return a * b - b * a; }
}

/// Full Chevalley-style Yangian including the cubic relations; not confluent.
inline Presentation make_yangian() {
    Presentation p = make_yangian_commutation();
    p.name = "Y_eta(sl2)";
    NCElement E = p.gen("e"), F1 = p.gen("f1");
    using detail::commutator;
    // [e,[e,[e,f1]]] = 6 eta e^2  and  [[[e,f1],f1],f1] = 6 eta f1^2
    NCElement c1 = commutator(E, commutator(E, commutator(E, F1))) - E * E * (Scalar(6) * Scalar::eta());
    NCElement c2 = commutator(commutator(commutator(E, F1), F1), F1) - F1 * F1 * (Scalar(6) * Scalar::eta());
    p.add_relation(c1);
    p.add_relation(c2);
    p.confluent = false;
    return p;
}

/// Twisted Borel algebra: generators Ti < T < h with T = 1 - 2 xi f adjoined
/// abstractly; [h,T] = 2(1-T), [h,Ti] = 2(Ti - Ti^2).
inline Presentation make_twisted_borel() {
    Presentation p;
    p.name = "U_xi(b-)^F";
    GenId ti = p.alphabet.add("Ti");
    GenId tt = p.alphabet.add("T");
    GenId h = p.alphabet.add("h");
    NCElement Ti = NCElement::generator(ti), T = NCElement::generator(tt), H = NCElement::generator(h);
    NCElement one = NCElement::unit();
    p.add_rule(Word{tt, ti}, one);
    p.add_rule(Word{ti, tt}, one);
    p.add_rule(Word{h, tt}, T * H + one * Scalar(2) - T * Scalar(2));
    p.add_rule(Word{h, ti}, Ti * H + Ti * Scalar(2) - Ti * Ti * Scalar(2));
    p.confluent = true;
    return p;
}

/// Twisted U(sl2): adds e with [h,e] = 2e, [T,e] = 2 xi h,
/// [Ti,e] = -2 xi Ti h Ti (the last is not orientable and stays a relation).
inline Presentation make_twisted_usl2() {
    Presentation p = make_twisted_borel();
    p.name = "U_xi(sl2)^F";
    GenId e = p.alphabet.add("e");
    NCElement E = NCElement::generator(e), H = p.gen("h"), T = p.gen("T"), Ti = p.gen("Ti");
    p.add_rule(Word{e, p.alphabet.require("h")}, H * E - E * Scalar(2));
    p.add_rule(Word{e, p.alphabet.require("T")}, T * E - H * (Scalar(2) * Scalar::xi()));
    p.add_relation(Ti * E - E * Ti + Ti * H * Ti * (Scalar(2) * Scalar::xi()));
    p.confluent = false;
    return p;
}

/// Twisted Yangian: adds f1 with [h,f1] = -2 f1,
/// [T,f1] = -(eta/2xi)(T-1)^2, [Ti,f1] = -(eta/2xi)(Ti-1)^2.
inline Presentation make_twisted_yangian() {
    Presentation p = make_twisted_usl2();
    p.name = "Y_eta,xi(sl2)";
    GenId f1 = p.alphabet.add("f1");
    NCElement F1 = NCElement::generator(f1), H = p.gen("h"), T = p.gen("T"), Ti = p.gen("Ti"),
              E = p.gen("e");
    NCElement one = NCElement::unit();
    Scalar k = Scalar::eta() / (Scalar(2) * Scalar::xi());
    p.add_rule(Word{f1, p.alphabet.require("h")}, H * F1 + F1 * Scalar(2));
    p.add_rule(Word{f1, p.alphabet.require("T")},
               T * F1 + (T * T - T * Scalar(2) + one) * k);
    p.add_rule(Word{f1, p.alphabet.require("Ti")},
               Ti * F1 + (Ti * Ti - Ti * Scalar(2) + one) * k);
    using detail::commutator;
    NCElement c1 = commutator(E, commutator(E, commutator(E, F1))) - E * E * (Scalar(6) * Scalar::eta());
    NCElement c2 = commutator(commutator(commutator(E, F1), F1), F1) - F1 * F1 * (Scalar(6) * Scalar::eta());
    p.add_relation(c1);
    p.add_relation(c2);
    p.confluent = false;
    return p;
}

} // namespace ytwist
