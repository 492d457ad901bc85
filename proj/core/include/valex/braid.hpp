#pragma once

// Virtual braid words, the fundamental action on the free group F_{k+2}, the
// (twisted) virtual Burau representation, braid closures, and the virtual
// Markov moves.

#include "valex/presentation.hpp"
#include "valex/representation.hpp"

namespace valex {

struct BraidLetter {
    enum class Kind { Sigma, SigmaInv, Tau };
    Kind kind = Kind::Sigma;
    int index = 1;  // 1 <= index <= strands-1

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
    BraidLetter inverse() const {
        return {kind == Kind::Sigma ? Kind::SigmaInv : kind == Kind::SigmaInv ? Kind::Sigma : Kind::Tau, index};
    }
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    // Tokens: `b<i>` (sigma_i), `B<i>` (sigma_i inverse), `v<i>` (tau_i);
    // optional leading `k=<strands>`, otherwise k = max index + 1.
    static BraidWord parse(std::string_view text);
    std::string to_string() const;  // round-trips through parse, includes k=

    BraidWord operator*(const BraidWord& o) const;  // same strand count
    BraidWord inverse() const;

    void validate() const;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct BraidStats {
    int writhe = 0;
    int virtual_count = 0;
    int components = 1;
    std::size_t length = 0;
};

BraidStats braid_stats(const BraidWord& b);

// The strand generators x_1 .. x_k.
std::vector<Gen> strand_generators(int k);

// The image x_j^beta of one strand generator under the fundamental action
// (automorphisms compose left to right along the word).
GroupWord fundamental_action(const BraidWord& b, int j);

// All strand images at once.
std::vector<GroupWord> fundamental_action_all(const BraidWord& b);

enum class BurauRoute {
    GeneratorMatrices,  // product of the per-letter matrices
    FoxJacobian,        // abelian evaluation of the Magnus cocycle D(Phi(beta))
};

// The k x k virtual Burau matrix Psi(beta) over Z[s±,t±,q±]. Both routes give
// identical matrices.
PolyMatrix burau(const BraidWord& b, BurauRoute route = BurauRoute::GeneratorMatrices);

// The nk x nk twisted Burau matrix over F_p[s±,t±,q±]. rho must provide
// images for x_1..x_k, s and q. Built by the right-to-left cocycle recursion;
// the Jacobian route is the definitional cross-check.
PolyMatrix twisted_burau(const BraidWord& b, const Representation& rho,
                         BurauRoute route = BurauRoute::GeneratorMatrices);

// Presentation of the closure: <x_1..x_k, s, q | x_j^-1 x_j^beta, [s,q]>.
Presentation closure_presentation(const BraidWord& b);

// --- virtual Markov moves -----------------------------------------------------

struct MarkovMove {
    enum class Kind {
        Conjugate,        // beta -> gamma beta gamma^-1
        StabVirtual,      // beta -> beta tau_k      (strands + 1)
        StabPositive,     // beta -> beta sigma_k^-1 (strands + 1)
        StabNegative,     // beta -> beta sigma_k    (strands + 1)
        DestabVirtual,    // inverse operations (strands - 1)
        DestabPositive,
        DestabNegative,
        ExchangeRight,    // alpha sigma_k beta sigma_k^-1 <-> alpha tau_k beta tau_k
        ExchangeLeft,     // alpha sigma_1 beta sigma_1^-1 <-> alpha tau_1 beta tau_1
    };
    Kind kind = Kind::StabVirtual;
    BraidWord gamma;                  // Conjugate
    BraidWord alpha_part, beta_part;  // Exchange*: explicit decomposition factors

    static MarkovMove conjugate(BraidWord g) { return {Kind::Conjugate, std::move(g), {}, {}}; }
    static MarkovMove stab(Kind k) { return {k, {}, {}, {}}; }
    static MarkovMove exchange(Kind k, BraidWord alpha, BraidWord beta) {
        return {k, {}, std::move(alpha), std::move(beta)};
    }
};

// Applies the move; throws std::invalid_argument when it is not applicable
// (missing trailing letter pattern, stray top-strand letters, or an exchange
// decomposition that does not match the input).
BraidWord markov_move(const BraidWord& b, const MarkovMove& move);

// Assembled exchange-move pairs (classical form, virtual form).
std::pair<BraidWord, BraidWord> exchange_right_pair(const BraidWord& alpha, const BraidWord& beta);
std::pair<BraidWord, BraidWord> exchange_left_pair(const BraidWord& alpha, const BraidWord& beta);

}  // namespace valex
