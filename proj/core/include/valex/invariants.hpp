#pragma once

// The invariant pipelines: H_K, normalized H, higher elementary invariants,
// the two-variable specialization G_K, twisted analogues, virtual crossing
// number bounds, skein verification, and classicality obstruction reports.

#include "valex/braid.hpp"

#include <optional>

namespace valex {

enum class Pipeline { PresentationRoute, BraidRoute };

struct InvariantResult {
    LaurentPoly value;  // canonical under unit_group
    UnitGroup unit_group;
    Pipeline pipeline = Pipeline::PresentationRoute;
    std::string fingerprint;  // the input in its text form
};

// H = Delta^0. Square presentations whose relators are null-homologous use
// det(A) (equal to the minor gcd of M); everything else goes through
// delta_ell. The braid overload evaluates det(Psi(beta) - I) with both
// determinant kernels and the closure-presentation route and requires
// agreement.
InvariantResult h_poly(const Presentation& p);
InvariantResult h_poly(const BraidWord& b);

// Delta^l of a braid closure as the gcd of the (k-l) x (k-l) minors of
// Psi(beta) - I.
IdealReport delta_ell(const BraidWord& b, int level);

// Raw braid invariant (-1)^(writhe + virtual) det(Psi(beta) - I), before any
// canonicalization; the exact value the Markov factor laws speak about.
LaurentPoly normalized_h_raw(const BraidWord& b);

// Canonical under (st)^i units.
InvariantResult normalized_h(const BraidWord& b);

// G(s,t) = H(s,t,1), canonical under +-s^i t^j.
LaurentPoly generalized_g(const InvariantResult& h);

struct BoundReport {
    LaurentPoly::QProfile profile;
    int twist_degree = 1;
    bool informative = false;           // false when the polynomial is zero
    std::optional<int> lower_bound;     // on the virtual crossing number
    bool from_normalized = false;       // normalized-degree bound vs q-width bound
};

// Lower bound on v(K): ceil(q-width / 2n) for the unnormalized kinds,
// ceil(max(deg_q, deg_q_inv) / n) for the normalized kinds.
BoundReport crossing_bounds(const InvariantResult& r);

// --- twisted pipelines ----------------------------------------------------------

// Throws unless rho kills every relator (including [s,q]); the message names
// the first violated relator.
void require_valid_representation(const Presentation& p, const Representation& rho);

// Twisted invariant via det of the twisted Alexander matrix (square
// presentations) with the Wada quotient as a mandatory cross-check; the Wada
// quotient route alone for non-square presentations.
InvariantResult twisted_h(const Presentation& p, const Representation& rho);

// Braid route: det(Psi_rho(beta) - I); requires beta_* rho = rho and checks it.
InvariantResult twisted_h(const BraidWord& b, const Representation& rho);

LaurentPoly normalized_twisted_h_raw(const BraidWord& b, const Representation& rho);
InvariantResult normalized_twisted_h(const BraidWord& b, const Representation& rho);

// --- skein -----------------------------------------------------------------------

struct SkeinReport {
    bool holds = false;
    LaurentPoly plus, minus, zero;  // raw per-diagram values
};

// Checks plus - (st) minus == (st - 1) zero exactly at the given classical
// letter position (0-based).
SkeinReport skein_check(const BraidWord& b, std::size_t position);

// --- classicality ------------------------------------------------------------------

struct ClassicalityReport {
    LaurentPoly h;  // canonical
    bool h_nonzero = false;
    bool div_q_minus_s = false;
    bool div_one_minus_tq = false;
    std::optional<bool> div_one_minus_st;  // only for single-component inputs
    bool support_law = false;  // e_s + e_q - e_t constant over the support
    int support_offset = 0;
    LaurentPoly delta1_at_q1;
    bool delta1_symmetric = false;
    std::string verdict;  // "non-classical (...)" or "no obstruction found"
};

ClassicalityReport classicality_report(const Presentation& p, std::optional<bool> single_component = {});
ClassicalityReport classicality_report(const BraidWord& b);

}  // namespace valex
