#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <ytwist/ideal.hpp>
#include <ytwist/sl2.hpp>

using namespace ytwist;

namespace {

// Brute-force reduction oracle for U(sl2): repeatedly applies a single
// commutator swap to the leftmost out-of-order adjacent pair, entirely
// independent of the rewrite engine's strategy and caching.
NCElement brute_nf_usl2(const Presentation& p, const NCElement& x) {
    GenId f = p.alphabet.require("f"), h = p.alphabet.require("h"), e = p.alphabet.require("e");
    NCElement cur = x;
    for (int guard = 0; guard < 100000; ++guard) {
        bool changed = false;
        NCElement next = NCElement::zero(1);
        for (const auto& [t, c] : cur.terms()) {
            const Word& w = t[0];
            size_t i = 0;
            bool swapped = false;
            for (; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) { swapped = true; break; }
            if (!swapped) {
                next.add_term(t, c);
                continue;
            }
            changed = true;
            Word pre = w.substr(0, i), suf = w.substr(i + 2);
            GenId a = w[i], b = w[i + 1];
            // a b = b a + [a, b]
            next.add_term({pre + Word{b, a} + suf}, c);
            NCElement comm = NCElement::zero(1);
            if (a == e && b == f) comm.add_term({Word{h}}, Scalar(1));        // [e,f] = h
            else if (a == h && b == f) comm.add_term({Word{f}}, Scalar(-2));  // [h,f] = -2f
            else if (a == e && b == h) comm.add_term({Word{e}}, Scalar(-2));  // [e,h] = -2e
            if (!comm.is_zero()) {
                for (const auto& [ct, cc] : comm.terms())
                    next.add_term({pre + ct[0] + suf}, c * cc);
            }
        }
        cur = next;
        if (!changed) break;
    }
    return cur;
}

NCElement random_element(const Alphabet& a, std::mt19937_64& rng, int maxterms = 3, int maxlen = 4) {
    std::uniform_int_distribution<int> nt(1, maxterms), len(0, maxlen),
        gen(0, static_cast<int>(a.size()) - 1), c(-3, 3);
    NCElement e(1);
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        int k = len(rng);
        for (int j = 0; j < k; ++j) w.push_back(static_cast<GenId>(gen(rng)));
        e.add_term({w}, Scalar(c(rng)));
    }
    return e;
}

} // namespace

TEST_CASE("U(sl2) normal forms match the defining relations") {
    Presentation p = make_usl2();
    Rewriter rw(p);
    NCElement e = p.gen("e"), f = p.gen("f"), h = p.gen("h");

    // NF(e f) = f e + h
    CHECK(rw.normal_form(e * f) == f * e + h);
    // NF(h e) = e h + 2 e; the engine's normal words are ascending f < h < e,
    // so h*e is already normal and e*h rewrites.
    CHECK(rw.normal_form(h * e) == h * e);
    CHECK(rw.normal_form(e * h) == h * e - e * Scalar(2));
    // already-ordered word is untouched
    NCElement fhe = f * h * e;
    CHECK(rw.normal_form(fhe) == fhe);
}

TEST_CASE("U(sl2) normal form agrees with the single-swap oracle on all short words") {
    Presentation p = make_usl2();
    Rewriter rw(p);
    // all words of length <= 4
    std::vector<Word> words{Word()};
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (size_t g = 0; g < 3; ++g) next.push_back(w + Word(1, static_cast<GenId>(g)));
        for (auto& w : next) words.push_back(w);
    }
    for (const auto& w : words) {
        NCElement x = NCElement::from_word(w);
        CHECK(rw.normal_form(x) == brute_nf_usl2(p, x));
    }
}

TEST_CASE("normal form is idempotent and multi-leg reduction works leg-wise") {
    Presentation p = make_usl2();
    Rewriter rw(p);
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 25; ++i) {
        NCElement x = random_element(p.alphabet, rng);
        NCElement n1 = rw.normal_form(x);
        CHECK(rw.normal_form(n1) == n1);
    }
    GenId e = p.alphabet.require("e"), f = p.alphabet.require("f");
    NCElement two_leg(2);
    two_leg.add_term({Word{e, f}, Word{e, f}}, Scalar(1));
    NCElement r = rw.normal_form(two_leg);
    NCElement ef = rw.normal_form(p.gen("e") * p.gen("f"));
    NCElement expect(2);
    for (const auto& [ta, ca] : ef.terms())
        for (const auto& [tb, cb] : ef.terms()) expect.add_term({ta[0], tb[0]}, ca * cb);
    CHECK(r == expect);
}

TEST_CASE("confluence of the built-in systems") {
    auto r1 = check_confluence(make_usl2(), 4);
    CHECK(r1.ok());
    CHECK(r1.overlaps_checked > 0);

    auto r2 = check_confluence(make_borel_minus(), 4);
    CHECK(r2.ok());

    auto r3 = check_confluence(make_yangian_commutation(), 5);
    CHECK(r3.ok());

    auto r4 = check_confluence(make_twisted_borel(), 5);
    CHECK(r4.ok());

    // dropping the e-f rule leaves the e-h-f overlap unresolved
    Presentation broken;
    broken.name = "broken U(sl2)";
    GenId f = broken.alphabet.add("f");
    GenId h = broken.alphabet.add("h");
    GenId e = broken.alphabet.add("e");
    NCElement F = NCElement::generator(f), H = NCElement::generator(h), E = NCElement::generator(e);
    broken.add_rule(Word{h, f}, F * H - F * Scalar(2));
    broken.add_rule(Word{e, h}, H * E - E * Scalar(2));
    broken.confluent = false;
    auto r5 = check_confluence(broken, 4);
    CHECK_FALSE(r5.ok());

    // empty relation set is trivially confluent
    Presentation empty;
    empty.alphabet.add("x");
    auto r6 = check_confluence(empty, 4);
    CHECK(r6.ok());
    CHECK(r6.overlaps_checked == 0);
}

TEST_CASE("ideal membership with certificates") {
    Presentation p = make_usl2();
    IdealContext ctx(p);

    // a relation itself
    NCElement rel = p.relations[1]; // ef - fe - h
    auto c1 = ctx.member(rel, 3);
    CHECK(c1.verdict == Verdict::InIdeal);
    CHECK(c1.replay(p) == rel);

    // a left multiple
    NCElement a = p.gen("e") * rel;
    auto c2 = ctx.member(a, 4);
    CHECK(c2.verdict == Verdict::InIdeal);
    CHECK(c2.replay(p) == a);

    // h alone is not in the ideal
    auto c3 = ctx.member(p.gen("h"), 3);
    CHECK(c3.verdict == Verdict::NotInIdeal);

    // degree bound must cover the target
    CHECK_THROWS_AS(ctx.member(p.gen("e") * p.gen("e") * p.gen("e") * p.gen("e"), 3), bound_too_small);
}

TEST_CASE("normal form equality cross-validates ideal membership") {
    Presentation p = make_usl2();
    Rewriter rw(p);
    IdealContext ctx(p);
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 15; ++i) {
        NCElement a = random_element(p.alphabet, rng, 2, 3);
        NCElement b = random_element(p.alphabet, rng, 2, 3);
        NCElement d = a - b;
        if (d.is_zero()) continue;
        bool nf_equal = rw.normal_form(a) == rw.normal_form(b);
        auto cert = ctx.member(d, std::max(2, d.degree()));
        CHECK(nf_equal == (cert.verdict == Verdict::InIdeal));
        if (cert.verdict == Verdict::InIdeal) CHECK(cert.replay(p) == d);
    }
}

TEST_CASE("rewrite trace gives exact certificates") {
    Presentation p = make_usl2();
    Rewriter rw(p);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        NCElement x = random_element(p.alphabet, rng, 2, 4);
        for (const auto& [t, c] : x.terms()) {
            std::vector<CertStep> cert;
            NCElement nf = rw.nf_word_trace(t[0], cert, Scalar(1));
            // word == nf + sum cert
            NCElement acc = nf;
            for (const auto& s : cert)
                acc += NCElement::from_word(s.left) * p.relations[static_cast<size_t>(s.rel_index)] *
                       NCElement::from_word(s.right) * s.coeff;
            CHECK(acc == NCElement::from_word(t[0]));
        }
    }
}
