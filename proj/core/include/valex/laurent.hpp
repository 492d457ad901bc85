#pragma once

// Exact Laurent polynomials in the three commuting variables s, t, q over the
// integers or a prime field F_p. All arithmetic is exact; values are immutable
// once built and safe to share across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace valex {

using Coeff = boost::multiprecision::cpp_int;

// Coefficient ring: modulus == 0 means the integers, otherwise F_modulus.
struct CoeffRing {
    std::uint32_t modulus = 0;

    bool is_field() const { return modulus != 0; }
    bool operator==(const CoeffRing&) const = default;

    static CoeffRing integers() { return CoeffRing{0}; }
    static CoeffRing prime_field(std::uint32_t p) { return CoeffRing{p}; }
};

// Exponent triple (e_s, e_t, e_q). Ordered lexicographically by
// (e_q, e_t, e_s); the canonical lex anchor of a polynomial is its greatest
// monomial in this order.
struct Exp3 {
    std::int32_t s = 0;
    std::int32_t t = 0;
    std::int32_t q = 0;

    friend bool operator==(const Exp3&, const Exp3&) = default;
    friend bool operator<(const Exp3& a, const Exp3& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.t != b.t) return a.t < b.t;
        return a.s < b.s;
    }
    Exp3 operator+(const Exp3& o) const { return {s + o.s, t + o.t, q + o.q}; }
    Exp3 operator-(const Exp3& o) const { return {s - o.s, t - o.t, q - o.q}; }
    Exp3 operator*(std::int32_t k) const { return {s * k, t * k, q * k}; }
};

enum class UnitKind {
    FullMonomial,     // +- s^i t^j q^k
    StQuarter,        // (st)^i, no sign
    TwistedMonomial,  // eps * (s^e1 t^e2 q^e3)^n, eps a coefficient unit
    TwistedSt,        // eps * (st)^(j n)
};

struct UnitGroup {
    UnitKind kind = UnitKind::FullMonomial;
    int degree = 1;  // the twist degree n; 1 for the untwisted kinds

    static UnitGroup full_monomial() { return {UnitKind::FullMonomial, 1}; }
    static UnitGroup st_quarter() { return {UnitKind::StQuarter, 1}; }
    static UnitGroup twisted_monomial(int n) { return {UnitKind::TwistedMonomial, n}; }
    static UnitGroup twisted_st(int n) { return {UnitKind::TwistedSt, n}; }

    bool operator==(const UnitGroup&) const = default;
    std::string name() const;
};

class LaurentPoly {
  public:
    using TermMap = std::map<Exp3, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(CoeffRing ring) : ring_(ring) {}
    LaurentPoly(CoeffRing ring, TermMap terms);

    static LaurentPoly zero(CoeffRing ring = CoeffRing::integers()) { return LaurentPoly(ring); }
    static LaurentPoly constant(Coeff c, CoeffRing ring = CoeffRing::integers());
    static LaurentPoly monomial(Coeff c, Exp3 e, CoeffRing ring = CoeffRing::integers());
    static LaurentPoly var_s(CoeffRing ring = CoeffRing::integers()) { return monomial(1, {1, 0, 0}, ring); }
    static LaurentPoly var_t(CoeffRing ring = CoeffRing::integers()) { return monomial(1, {0, 1, 0}, ring); }
    static LaurentPoly var_q(CoeffRing ring = CoeffRing::integers()) { return monomial(1, {0, 0, 1}, ring); }

    const CoeffRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    // Lex anchor: greatest monomial under (e_q, e_t, e_s). Requires nonzero.
    const std::pair<const Exp3, Coeff>& anchor() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Integer power. Negative exponents require a monomial with unit
    // coefficient (the invertible elements of the ring).
    LaurentPoly pow(int k) const;

    bool operator==(const LaurentPoly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;  // arbitrary total order for containers

    // Componentwise minimum exponents over the support. Requires nonzero.
    Exp3 min_exponents() const;

    // q-degree data, computed on this representative.
    struct QProfile {
        int width = 0;
        int deg_q = 0;
        int deg_q_inv = 0;
        bool zero = false;  // distinguished flag: a zero polynomial carries no information
    };
    QProfile q_profile() const;

    // Substitute each variable by a signed monomial. images[0] = image of s, ...
    struct MonomialImage {
        int sign = 1;  // +1 or -1
        Exp3 exp;
    };
    LaurentPoly substitute(const MonomialImage images[3]) const;

    // The substitution (s,t,q) -> (s q^-1, t q, 1).
    LaurentPoly collapse_q() const;

    std::string to_string() const;
    static LaurentPoly parse(std::string_view text, CoeffRing ring = CoeffRing::integers());

  private:
    CoeffRing ring_;
    TermMap terms_;

    void add_term(const Exp3& e, const Coeff& c);
    friend class PolyMatrix;
};

// --- divisibility, gcd, canonical forms -------------------------------------

struct DivisionResult {
    bool divides = false;
    LaurentPoly quotient;
};

// Exact division f / d in the Laurent ring; d must be nonzero.
DivisionResult divide_exact(const LaurentPoly& f, const LaurentPoly& d);
inline bool divides(const LaurentPoly& d, const LaurentPoly& f) { return divide_exact(f, d).divides; }

// A gcd of the inputs in canonical unit form (FullMonomial). gcd() of an
// all-zero list is 0. Recursive primitive-PRS over the variable tower.
LaurentPoly gcd_many(std::span<const LaurentPoly> polys);
LaurentPoly gcd_pair(const LaurentPoly& a, const LaurentPoly& b);

// Canonical representative of the unit orbit of f under u. Idempotent and
// constant on orbits.
LaurentPoly normalize_canonical(const LaurentPoly& f, UnitGroup u);

// True iff g = unit * f for some admissible unit of u.
bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g, UnitGroup u);

}  // namespace valex
