#pragma once

// Finitely presented virtual knot groups <a_1..a_n, s, q | r_1..r_n, [s,q]>:
// parsing, Fox Jacobians, the Alexander matrices A and M, elementary-ideal
// invariants, and the welded / extended / quandle quotient specializations.

#include "valex/group_ring.hpp"
#include "valex/matrix.hpp"

namespace valex {

struct Presentation {
    std::vector<Gen> meridians;        // ordered, no duplicates, never s or q
    std::vector<GroupWord> relators;   // user relators; [s,q] is appended implicitly
    bool include_sq_commutator = true;
    bool has_s = true;  // cleared by quotient specializations that kill s or q
    bool has_q = true;

    std::vector<Gen> all_generators() const;      // meridians + present reserved gens
    GroupWord sq_commutator() const;              // s q s^-1 q^-1
    std::vector<GroupWord> all_relators() const;  // relators + [s,q] when included

    // Line format:
    //   gens <name> <name> ...
    //   rel <word>
    //   no-sq-commutator        (optional)
    static Presentation parse(std::string_view text);
    std::string to_string() const;

    void validate() const;
};

struct AlexanderMatrices {
    PolyMatrix a;  // relator rows (without [s,q]) x meridian columns
    PolyMatrix m;  // all relator rows x all generator columns (meridians, s, q)
};

// Fox Jacobian over all generators; rows follow all_relators() order.
std::vector<std::vector<GroupRingElem>> jacobian(const Presentation& p);

AlexanderMatrices alexander_matrices(const Presentation& p);

struct IdealReport {
    int level = 0;
    int minor_size = 0;
    std::vector<LaurentPoly> generators;  // minors, deduplicated up to units, canonical
    LaurentPoly delta;                    // gcd, canonical under FullMonomial
};

// The level-l invariant: gcd of the (g-1-l) x (g-1-l) minors of M, where g
// counts all generators including s and q. delta = 0 when the minor size
// exceeds the relator count, 1 when the size drops to zero or below.
IdealReport delta_ell(const Presentation& p, int level);

enum class QuotientKind { Welded, Extended, Quandle };

// Rewrites relators under q -> s (welded), q -> 1 (extended) or s -> 1
// (quandle); the collapsed reserved generator disappears.
Presentation quotient_specialize(const Presentation& p, QuotientKind which);

}  // namespace valex
