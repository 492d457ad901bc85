#include "doctest.h"
#include "test_util.hpp"

#include "valex/invariants.hpp"
#include "valex/repsearch.hpp"

using namespace valex;

namespace {

const char* kPres34 =
    "gens a\n"
    "rel a^-1 q s^-2 a^-1 s^-1 a^-1 s^2 q^-3 a^-1 q^2 s^-2 a s^3 q^-2 a q^3 s^-2 a s a s q^-1\n";

FpMat mat2(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    FpMat m(p, 2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
}

}  // namespace

TEST_CASE("target elements") {
    RepSearchTarget sl2f2{2, 2, true};
    CHECK(target_elements(sl2f2).size() == 6);  // |SL_2(F_2)| = 6
    RepSearchTarget gl2f3{3, 2, false};
    CHECK(target_elements(gl2f3).size() == 48);  // |GL_2(F_3)| = 48
}

TEST_CASE("rep search finds the reference assignment for 3.4") {
    Presentation p = Presentation::parse(kPres34);
    std::vector<Representation> reps = enumerate_reps(p, RepSearchTarget{2, 2, true});
    CHECK(!reps.empty());
    FpMat A = mat2(2, 0, 1, 1, 0), SQ = mat2(2, 0, 1, 1, 1);
    bool found = false;
    bool trivial_found = false;
    for (const Representation& r : reps) {
        if (r.image(gen_id("a")) == A && r.image(gen_s()) == SQ && r.image(gen_q()) == SQ) found = true;
        if (r.image(gen_id("a")).is_identity() && r.image(gen_s()).is_identity() &&
            r.image(gen_q()).is_identity())
            trivial_found = true;
    }
    CHECK(found);
    CHECK(trivial_found);
    // every returned representation survives independent re-multiplication
    for (const Representation& r : reps)
        for (const GroupWord& rel : p.all_relators()) CHECK(r.eval(rel).is_identity());
}

TEST_CASE("free group on two meridians: 36 assignments with s = q = I") {
    Presentation p = Presentation::parse("gens a b\n");
    std::vector<Representation> reps = enumerate_reps(p, RepSearchTarget{2, 2, true});
    int with_trivial_sq = 0;
    for (const Representation& r : reps)
        if (r.image(gen_s()).is_identity() && r.image(gen_q()).is_identity()) ++with_trivial_sq;
    CHECK(with_trivial_sq == 36);
}

TEST_CASE("cap rejects oversized searches") {
    Presentation p = Presentation::parse("gens a b c d\n");
    RepSearchOptions opts;
    opts.cap = 100;
    CHECK_THROWS_AS(enumerate_reps(p, RepSearchTarget{2, 2, true}, opts), std::invalid_argument);
}

TEST_CASE("conjugation dedupe") {
    Presentation p = Presentation::parse("gens a\n");
    RepSearchOptions opts;
    opts.dedupe_conjugation = true;
    std::vector<Representation> deduped = enumerate_reps(p, RepSearchTarget{2, 2, true}, opts);
    std::vector<Representation> all = enumerate_reps(p, RepSearchTarget{2, 2, true});
    CHECK(deduped.size() < all.size());
}

TEST_CASE("conjugate representations give the same twisted value") {
    Presentation p = Presentation::parse(kPres34);
    std::vector<Representation> reps = enumerate_reps(p, RepSearchTarget{2, 2, true});
    // find the reference representation and conjugate it by a few elements
    FpMat A = mat2(2, 0, 1, 1, 0), SQ = mat2(2, 0, 1, 1, 1);
    Representation base;
    for (const Representation& r : reps)
        if (r.image(gen_id("a")) == A && r.image(gen_s()) == SQ) base = r;
    REQUIRE(!base.images.empty());
    LaurentPoly expected = twisted_h(p, base).value;
    for (const FpMat& c : target_elements(RepSearchTarget{2, 2, true})) {
        Representation conj = base;
        auto cinv = c.inverse();
        REQUIRE(cinv.has_value());
        for (auto& [g, m] : conj.images) m = c * m * *cinv;
        CHECK(equal_up_to_units(twisted_h(p, conj).value, expected, UnitGroup::twisted_monomial(2)));
    }
}

TEST_CASE("braid compatibility") {
    BraidWord b = BraidWord::parse("k=3 b2 v2 B1 B2 v2 b2 v1 v2");
    // trivial representation is compatible with any braid
    Representation triv;
    triv.modulus = 2;
    triv.degree = 2;
    for (int i = 1; i <= 3; ++i) triv.images[gen_id("x" + std::to_string(i))] = FpMat::identity(2, 2);
    triv.images[gen_s()] = FpMat::identity(2, 2);
    triv.images[gen_q()] = FpMat::identity(2, 2);
    CHECK(check_braid_compatible(b, triv).compatible);

    // representations of the closure group are compatible by construction
    std::vector<Representation> reps = enumerate_reps(closure_presentation(b), RepSearchTarget{2, 2, true});
    REQUIRE(!reps.empty());
    int n = 0;
    for (const Representation& r : reps) {
        CHECK(check_braid_compatible(b, r).compatible);
        if (++n == 10) break;
    }

    // a deliberately incompatible assignment names the failing strands
    Representation bad = triv;
    bad.images[gen_id("x1")] = mat2(2, 0, 1, 1, 0);
    CompatibilityVerdict v = check_braid_compatible(b, bad);
    CHECK_FALSE(v.compatible);
    CHECK(!v.failing_strands.empty());
}
