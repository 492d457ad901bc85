#pragma once

// Exhaustive enumeration of finite-field representations of a presented
// group, and braid-compatibility checks (beta_* rho = rho).

#include "valex/braid.hpp"

namespace valex {

struct RepSearchTarget {
    std::uint32_t p = 2;
    int n = 2;
    bool special_linear = true;  // SL(n, F_p) vs GL(n, F_p)
};

struct RepSearchOptions {
    std::uint64_t cap = 100'000'000;   // reject searches with more assignments than this
    bool dedupe_conjugation = false;   // keep one representative per simultaneous-conjugation orbit
};

// All group elements of the target, ordered lexicographically by the
// row-major entry list.
std::vector<FpMat> target_elements(const RepSearchTarget& target);

// Every assignment of (meridians, s, q) -> target killing all relators and
// [s,q]; deterministic (lexicographic) output order.
std::vector<Representation> enumerate_reps(const Presentation& p, const RepSearchTarget& target,
                                           const RepSearchOptions& opts = {});

struct CompatibilityVerdict {
    bool compatible = false;
    std::vector<int> failing_strands;  // 1-based
};

CompatibilityVerdict check_braid_compatible(const BraidWord& b, const Representation& rho);

// The canonical extension of a braid-fixed representation across a right
// stabilization: rho'(x_{k+1}) = rho(q^-1 x_k q) for the virtual type and
// rho(s^-1 x_k s) for the classical types.
Representation extend_for_stabilization(const Representation& rho, int strands, MarkovMove::Kind stab_kind);

}  // namespace valex
