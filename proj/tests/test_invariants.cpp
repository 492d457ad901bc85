#include "doctest.h"
#include "test_util.hpp"

#include "valex/invariants.hpp"

using namespace valex;
using vt::P;

namespace {

LaurentPoly trefoil_h() { return P("q - s") * P("s*t - 1") * P("q*t - 1"); }

}  // namespace

TEST_CASE("h_poly on the unknot and on the trefoil braid") {
    BraidWord unknot = BraidWord::parse("k=1");
    CHECK(h_poly(unknot).value.is_zero());

    BraidWord b21 = BraidWord::parse("k=2 b1 b1 v1");
    InvariantResult h = h_poly(b21);
    CHECK(h.pipeline == Pipeline::BraidRoute);
    CHECK(equal_up_to_units(h.value, trefoil_h(), UnitGroup::full_monomial()));
    // value is stored canonically
    CHECK(h.value == normalize_canonical(h.value, UnitGroup::full_monomial()));
}

TEST_CASE("classical braids have vanishing H") {
    // the classical trefoil sigma_1^3 in VB_2
    BraidWord classical = BraidWord::parse("k=2 b1 b1 b1");
    CHECK(h_poly(classical).value.is_zero());
    CHECK(generalized_g(h_poly(classical)).is_zero());
}

TEST_CASE("normalized_h matches the raw determinant up to the sign rule") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        BraidWord b = vt::random_braid(rng, 3, 7);
        LaurentPoly raw = normalized_h_raw(b);
        InvariantResult n = normalized_h(b);
        CHECK(equal_up_to_units(raw, n.value, UnitGroup::st_quarter()));
        // conjugation invariance, exactly
        BraidWord g = vt::random_braid(rng, 3, 3);
        CHECK(normalized_h_raw(markov_move(b, MarkovMove::conjugate(g))) == raw);
    }
}

TEST_CASE("generalized_g round trip") {
    BraidWord b21 = BraidWord::parse("k=2 b1 b1 v1");
    InvariantResult h = h_poly(b21);
    LaurentPoly g = generalized_g(h);
    CHECK(equal_up_to_units(g, P("s - 1") * P("1 - s*t") * P("1 - t"), UnitGroup::full_monomial()));
    // G(s q^-1, t q) recovers H up to units
    const LaurentPoly::MonomialImage back[3] = {{1, {1, 0, -1}}, {1, {0, 1, 1}}, {1, {0, 0, 0}}};
    CHECK(equal_up_to_units(g.substitute(back), h.value, UnitGroup::full_monomial()));
}

TEST_CASE("crossing bounds") {
    // width-4 polynomial gives v >= 2 through the unnormalized bound
    InvariantResult r;
    r.value = P("q^2 - s^2") * P("t^2*q^2 - 1") * P("s*t - 1");
    r.unit_group = UnitGroup::full_monomial();
    BoundReport b = crossing_bounds(r);
    CHECK(b.informative);
    CHECK(b.lower_bound == 2);

    // normalized 4.42 value gives v >= 3
    InvariantResult n;
    n.value = P("s^-1*t^2*q^3 - s^-2*t*q^3 - t^2*q^2 + s^-1*t*q^2 - s^-1*q + s^-2*t^-1*q + 1 - s^-1*t^-1");
    n.unit_group = UnitGroup::st_quarter();
    BoundReport bn = crossing_bounds(n);
    CHECK(bn.from_normalized);
    CHECK(bn.lower_bound == 3);

    // zero polynomial carries no information
    InvariantResult z;
    z.value = LaurentPoly::zero();
    z.unit_group = UnitGroup::full_monomial();
    BoundReport bz = crossing_bounds(z);
    CHECK_FALSE(bz.informative);
    CHECK_FALSE(bz.lower_bound.has_value());

    // twisted width bound divides by 2n
    InvariantResult t;
    t.value = P("q^8 + q^2 + 1", CoeffRing::prime_field(2));
    t.unit_group = UnitGroup::twisted_monomial(2);
    CHECK(crossing_bounds(t).lower_bound == 2);
}

TEST_CASE("skein identity") {
    // beta_+ = sigma_1 in VB_2: all three values vanish
    SkeinReport s1 = skein_check(BraidWord::parse("k=2 b1"), 0);
    CHECK(s1.holds);
    CHECK(s1.plus.is_zero());
    CHECK(s1.minus.is_zero());
    CHECK(s1.zero.is_zero());

    BraidWord b42 = BraidWord::parse("k=3 b2 v2 B1 B2 v2 b2 v1 v2");
    for (std::size_t pos : {0u, 2u, 3u, 5u}) CHECK(skein_check(b42, pos).holds);
    CHECK_THROWS_AS(skein_check(b42, 1), std::invalid_argument);  // virtual letter
    CHECK_THROWS_AS(skein_check(b42, 99), std::invalid_argument);

    std::mt19937_64 rng(606);
    int done = 0;
    while (done < 40) {
        BraidWord b = vt::random_braid(rng, 3, 8);
        if (b.letters.empty()) continue;
        std::uniform_int_distribution<std::size_t> pos(0, b.letters.size() - 1);
        std::size_t p = pos(rng);
        if (b.letters[p].kind == BraidLetter::Kind::Tau) continue;
        CHECK(skein_check(b, p).holds);
        ++done;
    }
}

TEST_CASE("classicality reports") {
    // virtual trefoil: H nonzero
    ClassicalityReport tre = classicality_report(BraidWord::parse("k=2 b1 b1 v1"));
    CHECK(tre.h_nonzero);
    CHECK(tre.div_q_minus_s);
    CHECK(tre.div_one_minus_tq);
    REQUIRE(tre.div_one_minus_st.has_value());
    CHECK(*tre.div_one_minus_st);
    CHECK(tre.support_law);
    CHECK(tre.verdict == "non-classical (H is nonzero)");

    // H = 0 but Delta^1 asymmetric
    Presentation p499 = Presentation::parse("gens a b\nrel a b s a^-1 s^-1 b s a^-1 s^-2 b^-1 s\n");
    ClassicalityReport r499 = classicality_report(p499, true);
    CHECK_FALSE(r499.h_nonzero);
    CHECK_FALSE(r499.delta1_symmetric);
    CHECK(r499.verdict == "non-classical (Delta^1 at q=1 is asymmetric)");

    // unknot: nothing to report
    ClassicalityReport unk = classicality_report(BraidWord::parse("k=1"));
    CHECK_FALSE(unk.h_nonzero);
    CHECK(unk.delta1_symmetric);
    CHECK(unk.verdict == "no obstruction found");
}

TEST_CASE("braid-route and presentation-route higher invariants agree") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 8) {
        BraidWord b = vt::random_braid(rng, 3, 6);
        if (b.letters.empty()) continue;
        ++done;
        Presentation closure = closure_presentation(b);
        for (int level = 0; level <= 2; ++level) {
            LaurentPoly via_burau = delta_ell(b, level).delta;
            LaurentPoly via_pres = delta_ell(closure, level).delta;
            CHECK(equal_up_to_units(via_burau, via_pres, UnitGroup::full_monomial()));
        }
    }
}

TEST_CASE("support law and collapse identity on random closures") {
    std::mt19937_64 rng(512);
    int done = 0;
    while (done < 15) {
        BraidWord b = vt::random_braid(rng, 3, 7);
        InvariantResult h = h_poly(b);
        if (h.value.is_zero()) continue;
        ++done;
        CHECK(equal_up_to_units(h.value, h.value.collapse_q(), UnitGroup::full_monomial()));
        int offset = 0;
        bool first = true, constant = true;
        for (auto& [e, c] : h.value.terms()) {
            int o = e.s + e.q - e.t;
            if (first) {
                offset = o;
                first = false;
            } else if (o != offset) {
                constant = false;
            }
        }
        CHECK(constant);
        CHECK(divides(P("q - s"), h.value));
        CHECK(divides(P("1 - t*q"), h.value));
        if (braid_stats(b).components == 1) CHECK(divides(P("1 - s*t"), h.value));
    }
}
