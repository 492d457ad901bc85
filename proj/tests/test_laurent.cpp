#include "doctest.h"
#include "test_util.hpp"

#include "valex/laurent.hpp"

using namespace valex;
using vt::P;

TEST_CASE("ring ops: worked examples") {
    CHECK(P("s + t") + P("-t") == P("s"));
    CHECK(P("1 - s*t") * P("q - s") == P("q - s - s*t*q + s^2*t"));
    CHECK(P("0") * P("q^2 - s^2") == LaurentPoly::zero());
    CHECK_THROWS_AS(P("s") + LaurentPoly::constant(1, CoeffRing::prime_field(2)), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = vt::random_poly(rng), b = vt::random_poly(rng), c = vt::random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("powers of monomial-invertible elements") {
    CHECK(P("s*t").pow(-2) == P("s^-2*t^-2"));
    CHECK(P("-q").pow(-3) == P("-q^-3"));
    CHECK(P("s + 1").pow(2) == P("s^2 + 2*s + 1"));
    CHECK_THROWS_AS(P("s + 1").pow(-1), std::domain_error);
    CHECK_THROWS_AS(P("2*s").pow(-1), std::domain_error);
}

TEST_CASE("text form round trip and golden strings") {
    // sorted descending by (e_q, e_t, e_s); coefficient omitted when 1 on a
    // non-constant term
    CHECK(P("-2*s^2*t*q^-1 + s - 1").to_string() == "s - 1 - 2*s^2*t*q^-1");
    LaurentPoly h = P("-s*t^2*q^2 + t*q^2 + s^2*t^2*q - q - s^2*t + s");
    CHECK(LaurentPoly::parse(h.to_string()) == h);
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly::parse("0") == LaurentPoly::zero());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p = vt::random_poly(rng);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("normalize_canonical: full monomial units") {
    // the two displayed representatives of the same invariant
    LaurentPoly line1 = P("s^-1 + q^2*s^-2*t + q*t^2 - q^2*s^-1*t^2 - t - q*s^-2");
    LaurentPoly line2 = P("s + q^2*t + q*s^2*t^2 - q^2*s*t^2 - s^2*t - q");
    CHECK(normalize_canonical(line1, UnitGroup::full_monomial()) ==
          normalize_canonical(line2, UnitGroup::full_monomial()));
    CHECK(normalize_canonical(LaurentPoly::zero(), UnitGroup::full_monomial()) == LaurentPoly::zero());
}

TEST_CASE("normalize_canonical: idempotent and orbit-constant") {
    std::mt19937_64 rng(99);
    const UnitGroup groups[] = {UnitGroup::full_monomial(), UnitGroup::st_quarter(),
                                UnitGroup::twisted_monomial(2), UnitGroup::twisted_st(2)};
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = vt::random_poly(rng);
        for (UnitGroup u : groups) {
            LaurentPoly n1 = normalize_canonical(f, u);
            CHECK(normalize_canonical(n1, u) == n1);
        }
        // full-monomial orbit: +- s^i t^j q^k
        std::uniform_int_distribution<int> e(-3, 3);
        std::uniform_int_distribution<int> sg(0, 1);
        LaurentPoly unit = LaurentPoly::monomial(sg(rng) ? 1 : -1, {e(rng), e(rng), e(rng)});
        CHECK(normalize_canonical(f * unit, UnitGroup::full_monomial()) ==
              normalize_canonical(f, UnitGroup::full_monomial()));
        // st orbit
        int j = e(rng);
        LaurentPoly stu = LaurentPoly::monomial(1, {j, j, 0});
        CHECK(normalize_canonical(f * stu, UnitGroup::st_quarter()) ==
              normalize_canonical(f, UnitGroup::st_quarter()));
        // twisted-monomial orbit, n = 2 (over F_5 to exercise field units)
        CoeffRing f5 = CoeffRing::prime_field(5);
        LaurentPoly g = vt::random_poly(rng, 6, 4, f5);
        LaurentPoly tu = LaurentPoly::monomial(3, {2 * e(rng), 2 * e(rng), 2 * e(rng)}, f5);
        CHECK(normalize_canonical(g * tu, UnitGroup::twisted_monomial(2)) ==
              normalize_canonical(g, UnitGroup::twisted_monomial(2)));
    }
}

TEST_CASE("equal_up_to_units") {
    LaurentPoly f = P("q - s") * P("1 - s*t") * P("1 - q*t");
    CHECK(equal_up_to_units(f, f * P("-q^-1"), UnitGroup::full_monomial()));
    CHECK_FALSE(equal_up_to_units(P("s*t - 1"), P("s*t + 1"), UnitGroup::full_monomial()));
    // (st)^2 is an admissible StQuarter unit, -1 is not
    CHECK(equal_up_to_units(f, f * P("s^2*t^2"), UnitGroup::st_quarter()));
    CHECK_FALSE(equal_up_to_units(f, -f, UnitGroup::st_quarter()));
    CHECK_FALSE(equal_up_to_units(f, f * P("s*t*q"), UnitGroup::st_quarter()));
    // TwistedMonomial(2): shifts must be componentwise even
    CHECK(equal_up_to_units(f, f * P("s^2*q^-2"), UnitGroup::twisted_monomial(2)));
    CHECK_FALSE(equal_up_to_units(f, f * P("s*q"), UnitGroup::twisted_monomial(2)));
    CHECK(equal_up_to_units(LaurentPoly::zero(), LaurentPoly::zero(), UnitGroup::full_monomial()));
    CHECK_FALSE(equal_up_to_units(f, LaurentPoly::zero(), UnitGroup::full_monomial()));
}

TEST_CASE("substitute_monomial") {
    LaurentPoly f = P("q - s") * P("1 - s*t") * P("1 - q*t");
    // identity map
    const LaurentPoly::MonomialImage id[3] = {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}};
    CHECK(f.substitute(id) == f);
    // (s,t,q) -> (s q^-1, t q, 1) fixes the value up to units
    CHECK(equal_up_to_units(f, f.collapse_q(), UnitGroup::full_monomial()));
    // G = H(s,t,1) of the virtual trefoil
    const LaurentPoly::MonomialImage q1[3] = {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 0}}};
    LaurentPoly g = P("s - 1") * P("1 - s*t") * P("1 - t");
    CHECK(equal_up_to_units(f.substitute(q1), g, UnitGroup::full_monomial()));
    // substitution is a ring homomorphism
    std::mt19937_64 rng(12);
    const LaurentPoly::MonomialImage phi[3] = {{-1, {0, 1, 1}}, {1, {1, 0, -1}}, {1, {2, 0, 0}}};
    for (int i = 0; i < 30; ++i) {
        LaurentPoly a = vt::random_poly(rng), b = vt::random_poly(rng);
        CHECK((a * b).substitute(phi) == a.substitute(phi) * b.substitute(phi));
        CHECK((a + b).substitute(phi) == a.substitute(phi) + b.substitute(phi));
    }
}

TEST_CASE("q_profile") {
    LaurentPoly f = P("q^2 - s^2") * P("t^2*q^2 - 1") * P("s*t - 1");
    CHECK(f.q_profile().width == 4);
    CHECK(P("s*t - 1").q_profile().width == 0);
    // normalized 4.42 value: deg_q = 3
    LaurentPoly h442 =
        P("s^-1*t^2*q^3 - s^-2*t*q^3 - t^2*q^2 + s^-1*t*q^2 - s^-1*q + s^-2*t^-1*q + 1 - s^-1*t^-1");
    CHECK(h442.q_profile().deg_q == 3);
    CHECK(h442.q_profile().deg_q_inv == 0);
    auto zp = LaurentPoly::zero().q_profile();
    CHECK(zp.zero);
    CHECK(zp.width == 0);
}

TEST_CASE("divides and exact quotients") {
    LaurentPoly f = P("q - s") * P("1 - s*t") * P("1 - q*t");
    CHECK(divides(P("1 - s*t"), f));
    auto dv = divide_exact(f, P("1 - s*t"));
    REQUIRE(dv.divides);
    CHECK(dv.quotient * P("1 - s*t") == f);
    CHECK_FALSE(divides(P("1 - s*t"), P("q - s")));
    CHECK_THROWS_AS(divides(LaurentPoly::zero(), f), std::invalid_argument);
    // laurent shifts are absorbed
    CHECK(divides(P("s^-3*t^2") * P("1 - s*t"), f));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = vt::random_poly(rng, 5, 3), b = vt::random_poly(rng, 5, 3);
        if (b.is_zero()) continue;
        LaurentPoly prod = a * b;
        auto q = divide_exact(prod, b);
        REQUIRE(q.divides);
        CHECK(q.quotient == a);
    }
}

TEST_CASE("gcd_many: examples") {
    LaurentPoly a = P("s*t - 1");
    LaurentPoly b = a * P("q - s");
    std::vector<LaurentPoly> v{a, b};
    CHECK(equal_up_to_units(gcd_many(v), a, UnitGroup::full_monomial()));
    std::vector<LaurentPoly> withzero{LaurentPoly::zero(), b};
    CHECK(gcd_many(withzero) == normalize_canonical(b, UnitGroup::full_monomial()));
    std::vector<LaurentPoly> zeros{LaurentPoly::zero(), LaurentPoly::zero()};
    CHECK(gcd_many(zeros).is_zero());
}

TEST_CASE("gcd properties on random inputs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        LaurentPoly f = vt::random_poly(rng, 4, 2), g = vt::random_poly(rng, 4, 2),
                    h = vt::random_poly(rng, 3, 2);
        std::vector<LaurentPoly> fg{f, g};
        LaurentPoly d = gcd_many(fg);
        if (!d.is_zero()) {
            CHECK(divides(d, f));
            CHECK(divides(d, g));
        }
        if (!h.is_zero()) {
            std::vector<LaurentPoly> fh_gh{f * h, g * h};
            LaurentPoly lhs = gcd_many(fh_gh);
            LaurentPoly rhs = d * h;
            CHECK(equal_up_to_units(lhs, rhs, UnitGroup::full_monomial()));
        }
    }
}

TEST_CASE("gcd of minor chains recovers the common factor") {
    // the shape delta_ell produces: unit-like cofactors times a shared factor
    std::mt19937_64 rng(888);
    const LaurentPoly cof[3] = {P("t - 1"), P("s - 1"), P("1 - q")};
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly f = vt::random_poly(rng, 4, 2), g = vt::random_poly(rng, 3, 2);
        LaurentPoly shared = f * g;
        if (shared.is_zero()) continue;
        std::vector<LaurentPoly> minors;
        for (const LaurentPoly& c : cof) minors.push_back(c * shared);
        LaurentPoly d = gcd_many(minors);
        CHECK(equal_up_to_units(d, shared, UnitGroup::full_monomial()));
    }
}

TEST_CASE("gcd over a prime field") {
    CoeffRing f2 = CoeffRing::prime_field(2);
    LaurentPoly a = P("s*t + 1", f2) * P("q + s", f2);
    LaurentPoly b = P("s*t + 1", f2) * P("t*q + 1", f2);
    std::vector<LaurentPoly> v{a, b};
    CHECK(equal_up_to_units(gcd_many(v), P("s*t + 1", f2), UnitGroup::full_monomial()));
}
