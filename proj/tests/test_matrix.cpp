#include "doctest.h"
#include "test_util.hpp"

#include "valex/matrix.hpp"

using namespace valex;
using vt::P;

namespace {

PolyMatrix from_rows(std::vector<std::vector<LaurentPoly>> rows, CoeffRing ring = CoeffRing::integers()) {
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()), ring);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("det: fixtures") {
    CHECK(det(from_rows({{P("s*t"), P("0")}, {P("0"), P("1")}})) == P("s*t"));
    CHECK(det(from_rows({{P("-1"), P("s")}, {P("t"), P("-s*t")}})).is_zero());
    CHECK(det(PolyMatrix::identity(4, CoeffRing::integers())) == P("1"));
    CHECK_THROWS_AS(det(PolyMatrix(2, 3, CoeffRing::integers())), std::invalid_argument);
}

TEST_CASE("det kernels agree") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            PolyMatrix m(n, n, CoeffRing::integers());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = vt::random_poly(rng, 3, 2);
            CHECK(det(m, DetKernel::Cofactor) == det(m, DetKernel::FractionFree));
        }
    }
    // and over a prime field
    CoeffRing f2 = CoeffRing::prime_field(2);
    for (int trial = 0; trial < 8; ++trial) {
        PolyMatrix m(5, 5, f2);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = vt::random_poly(rng, 3, 2, f2);
        CHECK(det(m, DetKernel::Cofactor) == det(m, DetKernel::FractionFree));
    }
}

TEST_CASE("det is multiplicative on monomial matrices") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix a(3, 3, CoeffRing::integers()), b(3, 3, CoeffRing::integers());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = vt::random_monomial(rng);
                b.at(i, j) = vt::random_monomial(rng);
            }
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("minors enumeration") {
    PolyMatrix m = from_rows({{P("1"), P("s"), P("0")}, {P("t"), P("0"), P("q")}});
    auto all = minors(m, 2);
    CHECK(all.size() == 3);  // C(2,2) * C(3,2)
    CHECK(all[0] == P("-s*t"));                   // cols {0,1}
    CHECK(all[1] == P("q"));                      // cols {0,2}
    CHECK(all[2] == P("s*q"));                    // cols {1,2}
    auto deduped = minors(m, 2, /*dedupe_units=*/true);
    CHECK(deduped.size() == 1);  // all three are monomials, one unit class
}
