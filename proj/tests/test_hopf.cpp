#include <catch2/catch_amalgamated.hpp>

#include <iostream>
#include <ytwist/hopf.hpp>

using namespace ytwist;

namespace {

Presentation usl2 = make_usl2();
Presentation yang_comm = make_yangian_commutation();
Presentation yang_full = make_yangian();

std::string show2(const Presentation& p, const NCElement& e) {
    std::vector<const Alphabet*> as(static_cast<size_t>(e.legs()), &p.alphabet);
    return e.to_string(as);
}

} // namespace

TEST_CASE("twist series matches its displayed low orders") {
    TwistEngine eng(usl2, 6);
    Series F = eng.build_twist(3);
    GenId f = eng.f(), h = eng.h();

    CHECK(F.at(0) == NCElement::unit(2));

    NCElement o1(2);
    o1.add_term({Word{h}, Word{f}}, Scalar(1));
    CHECK(F.at(1) == o1);

    // (1/2) h (h + 2) (x) f^2 = (1/2) h^2 (x) f^2 + h (x) f^2
    NCElement o2(2);
    o2.add_term({Word{h, h}, Word{f, f}}, Scalar(Rat(1, 2)));
    o2.add_term({Word{h}, Word{f, f}}, Scalar(1));
    CHECK(F.at(2) == o2);

    Series Fi = eng.build_twist_inverse(3);
    // (1/2) h (h - 2) (x) f^2
    NCElement i2(2);
    i2.add_term({Word{h, h}, Word{f, f}}, Scalar(Rat(1, 2)));
    i2.add_term({Word{h}, Word{f, f}}, Scalar(-1));
    CHECK(Fi.at(2) == i2);
}

TEST_CASE("twist inverse really inverts, both sides") {
    TwistEngine eng(usl2, 6);
    Series F = eng.build_twist(6), Fi = eng.build_twist_inverse(6);
    Series unit = Series::unit(2, 6);
    CHECK((F * Fi).map_coeffs(eng.normalizer()) == unit);
    CHECK((Fi * F).map_coeffs(eng.normalizer()) == unit);
}

TEST_CASE("cocycle identity holds and the flipped twist fails it") {
    TwistEngine eng(usl2, 5);
    Series F = eng.build_twist(5);
    auto rep = check_cocycle(eng, F, 5);
    CHECK(rep.ok());
    CHECK(rep.orders_checked == 6);

    // low orders look as displayed: both sides at order 1 are
    // h (x) f (x) 1 + h (x) 1 (x) f + 1 (x) h (x) f
    SeriesAlgebraMap d0 = eng.base_coproduct(5);
    Series lhs = d0.apply_leg(F, 0);
    NCElement expect(3);
    GenId f = eng.f(), h = eng.h();
    expect.add_term({Word{h}, Word{f}, Word()}, Scalar(1));
    expect.add_term({Word{h}, Word(), Word{f}}, Scalar(1));
    Series F12(3, 5);
    for (const auto& [k, e] : F.entries()) F12.set(k, e.insert_unit_leg(2));
    Series full = (F12 * lhs).map_coeffs(eng.normalizer());
    NCElement third(3);
    third.add_term({Word(), Word{h}, Word{f}}, Scalar(1));
    CHECK(full.at(1) == expect + third);

    // negative control: 1 + xi f (x) h
    Series flipped(2, 5);
    flipped.set(0, NCElement::unit(2));
    NCElement fo(2);
    fo.add_term({Word{f}, Word{h}}, Scalar(1));
    flipped.set(1, fo);
    auto bad = check_cocycle(eng, flipped, 5);
    CHECK_FALSE(bad.ok());
    REQUIRE(!bad.failed_orders.empty());
    CHECK(bad.failed_orders.front() <= 2);
}

TEST_CASE("conjugated coproduct of h matches the closed form") {
    TwistEngine eng(usl2, 4);
    ClosedForms forms(eng, 4);
    Series oracle = eng.twist_conjugate(NCElement::generator(eng.h()), 4);

    // order 1 by hand: 2 h (x) f
    NCElement o1(2);
    o1.add_term({Word{eng.h()}, Word{eng.f()}}, Scalar(2));
    CHECK(oracle.at(1) == o1);

    auto cmp = compare_series(oracle, forms.cop_h());
    CHECK(cmp.match);
}

TEST_CASE("conjugated coproduct of the T series is group-like") {
    TwistEngine eng(usl2, 4);
    ClosedForms forms(eng, 4);
    Series oracle = eng.twist_conjugate(forms.T(), 4);
    auto cmp = compare_series(oracle, forms.cop_T());
    CHECK(cmp.match);
    Series oraclei = eng.twist_conjugate(forms.Ti(), 4);
    CHECK(compare_series(oraclei, forms.cop_Ti()).match);
}

TEST_CASE("printed coproduct of e versus the conjugation oracle") {
    TwistEngine eng(usl2, 3);
    ClosedForms forms(eng, 3);
    Series oracle = eng.twist_conjugate(NCElement::generator(eng.e()), 3);

    // order 1 by hand: 2 e (x) f - h (x) h
    NCElement o1(2);
    o1.add_term({Word{eng.e()}, Word{eng.f()}}, Scalar(2));
    o1.add_term({Word{eng.h()}, Word{eng.h()}}, Scalar(-1));
    CHECK(oracle.at(1) == o1);

    auto cmp = compare_series(oracle, forms.cop_e_printed());
    std::cout << "[adjudication] Delta(e) printed-vs-oracle match=" << cmp.match;
    if (!cmp.match) {
        std::cout << " first mismatch at xi^" << cmp.first_mismatch_order
                  << "\n  oracle: " << show2(usl2, cmp.oracle_value)
                  << "\n  printed: " << show2(usl2, cmp.closed_value);
    }
    std::cout << "\n";
    CHECK_FALSE(cmp.match); // the printed form misses; see the corrected form below
    CHECK(cmp.first_mismatch_order == 1);

    // corrected resummed form:
    // e (x) T^-1 + 1 (x) e - xi h (x) T^-1 h - (xi/2) h(h-2) (x) (T^-1 - 1)
    NCElement h = NCElement::generator(eng.h());
    NCElement one = NCElement::unit(1);
    Series ones = elem_series(one, 3);
    Series corrected = tensor(forms.gen("e"), forms.Ti()) + tensor(ones, forms.gen("e"));
    corrected = corrected - tensor(elem_series(h, 3), forms.Ti() * elem_series(h, 3)).shift_orders(1);
    corrected = corrected - tensor(elem_series(h * (h - one * Scalar(2)), 3), forms.Ti() - ones)
                                .shift_orders(1) * Scalar(Rat(1, 2));
    corrected = corrected.map_coeffs(eng.normalizer());
    auto cmp2 = compare_series(oracle, corrected);
    std::cout << "[adjudication] Delta(e) corrected-vs-oracle match=" << cmp2.match;
    if (!cmp2.match)
        std::cout << " first mismatch at xi^" << cmp2.first_mismatch_order
                  << "\n  oracle: " << show2(usl2, cmp2.oracle_value)
                  << "\n  corrected: " << show2(usl2, cmp2.closed_value);
    std::cout << "\n";
    CHECK(cmp2.match);
}

TEST_CASE("printed coproduct of the level-one generator versus the oracle") {
    TwistEngine eng(yang_comm, 3);
    ClosedForms forms(eng, 3);
    Series oracle = eng.twist_conjugate(NCElement::generator(eng.f1()), 3);
    auto cmp = compare_series(oracle, forms.cop_f1_printed());
    std::cout << "[adjudication] Delta(f1) printed-vs-oracle match=" << cmp.match;
    if (!cmp.match) {
        std::cout << " first mismatch at xi^" << cmp.first_mismatch_order
                  << "\n  oracle:  " << show2(yang_comm, cmp.oracle_value)
                  << "\n  printed: " << show2(yang_comm, cmp.closed_value);
    }
    std::cout << "\n";
    CHECK_FALSE(cmp.match);
    CHECK(cmp.first_mismatch_order == 0);
}

TEST_CASE("triangular structure R = F21 F^-1") {
    TwistEngine eng(usl2, 6);
    Series R = eng.build_r_twist(6);

    // order 1: f (x) h - h (x) f
    NCElement o1(2);
    o1.add_term({Word{eng.f()}, Word{eng.h()}}, Scalar(1));
    o1.add_term({Word{eng.h()}, Word{eng.f()}}, Scalar(-1));
    CHECK(R.at(1) == o1);

    // R21 R = 1 (x) 1
    Series prod = (R.flip() * R).map_coeffs(eng.normalizer());
    CHECK(prod == Series::unit(2, 6));

    // intertwining: R Delta_F(g) = Delta_F(g)^{21} R for g = h, e, f (order <= 4)
    for (const char* gname : {"h", "e", "f"}) {
        NCElement g = usl2.gen(gname);
        Series dg = eng.twist_conjugate(g, 4);
        Series lhs = (R.truncate(4) * dg).map_coeffs(eng.normalizer());
        Series rhs = (dg.flip() * R.truncate(4)).map_coeffs(eng.normalizer());
        INFO(gname);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("antipode adjudication for e") {
    TwistEngine eng(usl2, 4);
    ClosedForms forms(eng, 4);
    Series delta_e = eng.twist_conjugate(NCElement::generator(eng.e()), 4);

    // known antipodes on h (S(h) = -h T passes its own axiom; checked below)
    SeriesAlgebraMap known = eng.base_antipode(4);
    known.images[eng.h()] = forms.antipode_h();
    known.images[eng.f()] = derive_antipode(eng, eng.twist_conjugate(NCElement::generator(eng.f()), 4),
                                            eng.f(), known);
    Series s_e = derive_antipode(eng, delta_e, eng.e(), known);

    for (int k : {2, 1}) {
        auto cmp = compare_series(s_e, forms.antipode_e_printed(k));
        std::cout << "[adjudication] S(e) vs printed variant (T - " << k << "): match=" << cmp.match;
        if (!cmp.match) std::cout << " first mismatch at xi^" << cmp.first_mismatch_order;
        std::cout << "\n";
    }
    std::cout << "[adjudication] derived S(e) =\n";
    for (const auto& [k, e] : s_e.entries())
        std::cout << "  xi^" << k << ": " << show2(usl2, e) << "\n";
    SUCCEED();
}

TEST_CASE("hopf axioms for the adjudicated twisted table") {
    TwistEngine eng(usl2, 4);
    ClosedForms forms(eng, 4);

    HopfSeriesTable tab;
    tab.eng = &eng;
    tab.bound = 4;
    tab.cop.out_legs = 2;
    tab.cop.nf = eng.normalizer();
    tab.cop.images.emplace(eng.h(), eng.twist_conjugate(NCElement::generator(eng.h()), 4));
    tab.cop.images.emplace(eng.e(), eng.twist_conjugate(NCElement::generator(eng.e()), 4));
    tab.cop.images.emplace(eng.f(), eng.twist_conjugate(NCElement::generator(eng.f()), 4));
    tab.antipode.out_legs = 1;
    tab.antipode.nf = eng.normalizer();
    SeriesAlgebraMap known = eng.base_antipode(4);
    known.images[eng.h()] = forms.antipode_h();
    known.images[eng.f()] =
        derive_antipode(eng, tab.cop.images.at(eng.f()), eng.f(), known);
    known.images[eng.e()] =
        derive_antipode(eng, tab.cop.images.at(eng.e()), eng.e(), known);
    tab.antipode.images = known.images;
    tab.counit[eng.h()] = Scalar(0);
    tab.counit[eng.e()] = Scalar(0);
    tab.counit[eng.f()] = Scalar(0);

    auto rep = verify_hopf_axioms(tab, 5);
    for (const auto& iss : rep.issues)
        std::cout << "[axiom] " << iss.axiom << " fails on " << iss.generator << " at xi^"
                  << iss.order << ": " << iss.detail << "\n";
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
}

TEST_CASE("undeformed Yangian table satisfies all axioms") {
    TwistEngine eng(yang_comm, 0);
    IdealContext fb(yang_full);

    HopfSeriesTable tab;
    tab.eng = &eng;
    tab.bound = 0;
    tab.cop = eng.base_coproduct(0);
    tab.antipode = eng.base_antipode(0);
    for (const char* g : {"f", "h", "e", "f1"})
        tab.counit[yang_comm.alphabet.require(g)] = Scalar(0);

    auto rep = verify_hopf_axioms(tab, 6, &fb);
    for (const auto& iss : rep.issues)
        std::cout << "[yangian axiom] " << iss.axiom << " fails on " << iss.generator << " at xi^"
                  << iss.order << ": " << iss.detail << "\n";
    CHECK(rep.ok());
}

TEST_CASE("printed level-one coproduct variant fails the relation check") {
    // Delta(f1) with the raising generator in the mixed term does not map
    // [h, f1] + 2 f1 into the tensor ideal; the lowering variant does.
    TwistEngine eng(yang_comm, 0);
    GenId f = eng.f(), h = eng.h(), e = eng.e(), f1 = eng.f1();

    auto make_table = [&](bool use_raising) {
        SeriesAlgebraMap cop = eng.base_coproduct(0);
        Series s(2, 0);
        NCElement mixed(2);
        mixed.add_term({Word{use_raising ? e : f}, Word{h}}, Scalar::eta());
        s.set(0, NCElement::generator(f1, 2, 0) + NCElement::generator(f1, 2, 1) + mixed);
        cop.images[f1] = s;
        return cop;
    };

    IdealContext fb(yang_full);
    // relation [h,f1] + 2 f1 = hf1 - f1h + 2f1
    NCElement rel = yang_comm.gen("h") * yang_comm.gen("f1") -
                    yang_comm.gen("f1") * yang_comm.gen("h") + yang_comm.gen("f1") * Scalar(2);

    for (bool raising : {false, true}) {
        SeriesAlgebraMap cop = make_table(raising);
        Series dr = cop.apply_leg(rel, 0, 0);
        bool zero = true;
        for (const auto& [k, eentry] : dr.entries()) {
            (void)k;
            if (!eentry.is_zero() && fb.member_tensor(eentry, 6) != Verdict::InIdeal) zero = false;
        }
        if (raising) CHECK_FALSE(zero);
        else CHECK(zero);
    }
}
