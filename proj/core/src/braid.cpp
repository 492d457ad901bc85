#include "valex/braid.hpp"

#include <algorithm>
#include <sstream>

namespace valex {

void BraidWord::validate() const {
    if (strands < 1) throw std::invalid_argument("braid: strand count must be >= 1");
    for (const BraidLetter& l : letters)
        if (l.index < 1 || l.index >= strands)
            throw std::invalid_argument("braid: letter index " + std::to_string(l.index) + " out of range for " +
                                        std::to_string(strands) + " strands");
}

BraidWord BraidWord::parse(std::string_view text) {
    BraidWord b;
    b.strands = 0;
    bool saw_k = false;
    std::istringstream is{std::string(text)};
    std::string tok;
    int max_index = 0;
    while (is >> tok) {
        if (tok.rfind("k=", 0) == 0) {
            if (saw_k || !b.letters.empty())
                throw std::invalid_argument("braid: k= must appear once, before the letters");
            b.strands = std::stoi(tok.substr(2));
            saw_k = true;
            continue;
        }
        if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'B' && tok[0] != 'v'))
            throw std::invalid_argument("braid: malformed token '" + tok + "'");
        int idx = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("braid: malformed token '" + tok + "'");
            idx = idx * 10 + (tok[i] - '0');
        }
        if (idx < 1) throw std::invalid_argument("braid: malformed token '" + tok + "'");
        BraidLetter::Kind kind = tok[0] == 'b'   ? BraidLetter::Kind::Sigma
                                 : tok[0] == 'B' ? BraidLetter::Kind::SigmaInv
                                                 : BraidLetter::Kind::Tau;
        b.letters.push_back({kind, idx});
        max_index = std::max(max_index, idx);
    }
    if (!saw_k) b.strands = std::max(1, max_index + 1);
    b.validate();
    return b;
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    os << "k=" << strands;
    for (const BraidLetter& l : letters) {
        os << ' '
           << (l.kind == BraidLetter::Kind::Sigma ? 'b' : l.kind == BraidLetter::Kind::SigmaInv ? 'B' : 'v')
           << l.index;
    }
    return os.str();
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (strands != o.strands) throw std::invalid_argument("braid: product needs equal strand counts");
    BraidWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
}

BraidWord BraidWord::inverse() const {
    BraidWord out;
    out.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
}

BraidStats braid_stats(const BraidWord& b) {
    BraidStats st;
    st.length = b.letters.size();
    std::vector<int> perm(b.strands);
    for (int i = 0; i < b.strands; ++i) perm[i] = i;
    for (const BraidLetter& l : b.letters) {
        switch (l.kind) {
            case BraidLetter::Kind::Sigma: ++st.writhe; break;
            case BraidLetter::Kind::SigmaInv: --st.writhe; break;
            case BraidLetter::Kind::Tau: ++st.virtual_count; break;
        }
        std::swap(perm[l.index - 1], perm[l.index]);
    }
    std::vector<bool> seen(b.strands, false);
    st.components = 0;
    for (int i = 0; i < b.strands; ++i) {
        if (seen[i]) continue;
        ++st.components;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return st;
}

std::vector<Gen> strand_generators(int k) {
    std::vector<Gen> gens;
    gens.reserve(k);
    for (int i = 1; i <= k; ++i) gens.push_back(gen_id("x" + std::to_string(i)));
    return gens;
}

namespace {

// Images of the strand generators under one braid letter, per the defining
// automorphisms. Only strands index, index+1 move.
void letter_images(const BraidLetter& l, std::span<const Gen> xs, GroupWord& img_i, GroupWord& img_i1) {
    const Gen s = gen_s(), q = gen_q();
    const Gen xi = xs[l.index - 1], xi1 = xs[l.index];
    img_i = GroupWord{};
    img_i1 = GroupWord{};
    switch (l.kind) {
        case BraidLetter::Kind::Sigma:
            img_i.append(s, 1).append(xi1, 1).append(s, -1);
            img_i1.append(xi1, 1).append(xi, 1).append(s, 1).append(xi1, -1).append(s, -1);
            break;
        case BraidLetter::Kind::SigmaInv:
            img_i.append(s, -1).append(xi, -1).append(s, 1).append(xi1, 1).append(xi, 1);
            img_i1.append(s, -1).append(xi, 1).append(s, 1);
            break;
        case BraidLetter::Kind::Tau:
            img_i.append(q, 1).append(xi1, 1).append(q, -1);
            img_i1.append(q, -1).append(xi, 1).append(q, 1);
            break;
    }
}

GroupWord substitute(const GroupWord& w, std::span<const Gen> xs, std::span<const GroupWord> images) {
    GroupWord out;
    for (const Letter& l : w.letters()) {
        int strand = -1;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i] == l.gen) {
                strand = static_cast<int>(i);
                break;
            }
        if (strand < 0) {
            out.append(l.gen, l.exp);
            continue;
        }
        const GroupWord& img = images[strand];
        GroupWord inv = l.exp < 0 ? img.inverse() : GroupWord{};
        const GroupWord& use = l.exp < 0 ? inv : img;
        for (std::int32_t rep = 0; rep < (l.exp < 0 ? -l.exp : l.exp); ++rep)
            for (const Letter& m : use.letters()) out.append(m.gen, m.exp);
    }
    return out;
}

}  // namespace

std::vector<GroupWord> fundamental_action_all(const BraidWord& b) {
    b.validate();
    std::vector<Gen> xs = strand_generators(b.strands);
    std::vector<GroupWord> words;
    words.reserve(xs.size());
    for (Gen g : xs) words.push_back(GroupWord::generator(g));
    // (x)(theta1 theta2) = ((x)theta1)theta2: extend the accumulated images by
    // substituting each new letter's action into them. Images are kept in the
    // s/q-commuting normal form; the defining braid relations only hold in
    // that quotient.
    for (const BraidLetter& l : b.letters) {
        std::vector<GroupWord> step;
        step.reserve(xs.size());
        for (Gen g : xs) step.push_back(GroupWord::generator(g));
        letter_images(l, xs, step[l.index - 1], step[l.index]);
        for (GroupWord& w : words) w = substitute(w, xs, step).normalize_sq();
    }
    return words;
}

GroupWord fundamental_action(const BraidWord& b, int j) {
    if (j < 1 || j > b.strands) throw std::invalid_argument("fundamental_action: strand out of range");
    return fundamental_action_all(b)[j - 1];
}

PolyMatrix burau(const BraidWord& b, BurauRoute route) {
    b.validate();
    const CoeffRing ring = CoeffRing::integers();
    const int k = b.strands;
    if (route == BurauRoute::FoxJacobian) {
        std::vector<Gen> xs = strand_generators(k);
        std::vector<GroupWord> imgs = fundamental_action_all(b);
        PolyMatrix m(k, k, ring);
        for (int i = 0; i < k; ++i) {
            std::vector<LaurentPoly> row = abelian_fox_row(imgs[i], xs, xs, ring);
            for (int j = 0; j < k; ++j) m.at(i, j) = std::move(row[j]);
        }
        return m;
    }
    PolyMatrix acc = PolyMatrix::identity(k, ring);
    const LaurentPoly one = LaurentPoly::constant(1, ring);
    const LaurentPoly s = LaurentPoly::var_s(ring), t = LaurentPoly::var_t(ring), q = LaurentPoly::var_q(ring);
    for (const BraidLetter& l : b.letters) {
        PolyMatrix g = PolyMatrix::identity(k, ring);
        const int a = l.index - 1;
        switch (l.kind) {
            case BraidLetter::Kind::Sigma:
                g.at(a, a) = LaurentPoly::zero(ring);
                g.at(a, a + 1) = s;
                g.at(a + 1, a) = t;
                g.at(a + 1, a + 1) = one - s * t;
                break;
            case BraidLetter::Kind::SigmaInv:
                g.at(a, a) = one - LaurentPoly::monomial(1, {-1, -1, 0}, ring);
                g.at(a, a + 1) = LaurentPoly::monomial(1, {0, -1, 0}, ring);
                g.at(a + 1, a) = LaurentPoly::monomial(1, {-1, 0, 0}, ring);
                g.at(a + 1, a + 1) = LaurentPoly::zero(ring);
                break;
            case BraidLetter::Kind::Tau:
                g.at(a, a) = LaurentPoly::zero(ring);
                g.at(a, a + 1) = q;
                g.at(a + 1, a) = LaurentPoly::monomial(1, {0, 0, -1}, ring);
                g.at(a + 1, a + 1) = LaurentPoly::zero(ring);
                break;
        }
        acc = acc * g;
    }
    return acc;
}

namespace {

// n x n block with entries rho-matrix * monomial, written into `out`.
void write_block(PolyMatrix& out, int bi, int bj, const FpMat& m, const LaurentPoly& mono, bool add = false) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly v = mono * LaurentPoly::constant(m.at(i, j), mono.ring());
            if (add)
                out.at(bi * n + i, bj * n + j) += v;
            else
                out.at(bi * n + i, bj * n + j) = v;
        }
}

FpMat rho_inverse(const FpMat& m) {
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("twisted_burau: singular generator image");
    return *inv;
}

}  // namespace

PolyMatrix twisted_burau(const BraidWord& b, const Representation& rho, BurauRoute route) {
    b.validate();
    const CoeffRing ring = CoeffRing::prime_field(rho.modulus);
    const int k = b.strands, n = rho.degree;
    std::vector<Gen> xs = strand_generators(k);
    for (Gen g : xs)
        if (!rho.has_image(g)) throw std::invalid_argument("twisted_burau: missing image for " + gen_name(g));
    if (!rho.has_image(gen_s()) || !rho.has_image(gen_q()))
        throw std::invalid_argument("twisted_burau: missing image for s or q");

    if (route == BurauRoute::FoxJacobian) {
        std::vector<GroupWord> imgs = fundamental_action_all(b);
        PolyMatrix out(n * k, n * k, ring);
        for (int i = 0; i < k; ++i) {
            std::vector<PolyMatrix> row = omega_fox_row(imgs[i], xs, rho, xs);
            for (int j = 0; j < k; ++j)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) out.at(i * n + r, j * n + c) = row[j].at(r, c);
        }
        return out;
    }

    // Right-to-left recursion Psi_rho(g beta') = Psi_{beta'_* rho}(g) Psi_rho(beta').
    const LaurentPoly one = LaurentPoly::constant(1, ring);
    const LaurentPoly s = LaurentPoly::var_s(ring), t = LaurentPoly::var_t(ring), q = LaurentPoly::var_q(ring);
    const LaurentPoly s_inv = LaurentPoly::monomial(1, {-1, 0, 0}, ring);
    const LaurentPoly t_inv = LaurentPoly::monomial(1, {0, -1, 0}, ring);
    const LaurentPoly q_inv = LaurentPoly::monomial(1, {0, 0, -1}, ring);
    const LaurentPoly st_inv = LaurentPoly::monomial(1, {-1, -1, 0}, ring);

    const FpMat S = rho.image(gen_s()), Q = rho.image(gen_q());
    const FpMat Sinv = rho_inverse(S), Qinv = rho_inverse(Q);
    std::vector<FpMat> cur;  // current images of x_1..x_k under the suffix action
    cur.reserve(k);
    for (Gen g : xs) cur.push_back(rho.image(g));

    PolyMatrix acc = PolyMatrix::identity(n * k, ring);
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        const BraidLetter& l = *it;
        const int a = l.index - 1;
        const FpMat Xi = cur[a], Xi1 = cur[a + 1];
        PolyMatrix g = PolyMatrix::identity(n * k, ring);
        switch (l.kind) {
            case BraidLetter::Kind::Sigma: {
                write_block(g, a, a, FpMat(rho.modulus, n), one);  // zero block
                write_block(g, a, a + 1, S, s);
                write_block(g, a + 1, a, Xi1, t);
                FpMat w = Xi1 * Xi * S * rho_inverse(Xi1);
                write_block(g, a + 1, a + 1, FpMat::identity(rho.modulus, n), one);
                write_block(g, a + 1, a + 1, w, -(s * t), /*add=*/true);
                cur[a] = S * Xi1 * Sinv;
                cur[a + 1] = Xi1 * Xi * S * rho_inverse(Xi1) * Sinv;
                break;
            }
            case BraidLetter::Kind::SigmaInv: {
                FpMat u = Sinv * rho_inverse(Xi);  // rho(s^-1 x_i^-1)
                write_block(g, a, a, u * S * Xi1, one);
                write_block(g, a, a, u, -st_inv, /*add=*/true);
                write_block(g, a, a + 1, u * S, t_inv);
                write_block(g, a + 1, a, Sinv, s_inv);
                write_block(g, a + 1, a + 1, FpMat(rho.modulus, n), one);  // zero block
                cur[a] = u * S * Xi1 * Xi;
                cur[a + 1] = Sinv * Xi * S;
                break;
            }
            case BraidLetter::Kind::Tau: {
                write_block(g, a, a, FpMat(rho.modulus, n), one);
                write_block(g, a, a + 1, Q, q);
                write_block(g, a + 1, a, Qinv, q_inv);
                write_block(g, a + 1, a + 1, FpMat(rho.modulus, n), one);
                cur[a] = Q * Xi1 * Qinv;
                cur[a + 1] = Qinv * Xi * Q;
                break;
            }
        }
        acc = g * acc;
    }
    return acc;
}

Presentation closure_presentation(const BraidWord& b) {
    Presentation p;
    p.meridians = strand_generators(b.strands);
    std::vector<GroupWord> imgs = fundamental_action_all(b);
    for (int j = 0; j < b.strands; ++j)
        p.relators.push_back(GroupWord::generator(p.meridians[j], -1) * imgs[j]);
    return p;
}

// --- Markov moves --------------------------------------------------------------

namespace {

bool supported_below(const BraidWord& b, int top_index) {
    return std::all_of(b.letters.begin(), b.letters.end(),
                       [&](const BraidLetter& l) { return l.index < top_index; });
}

BraidWord widen(const BraidWord& b, int strands) {
    BraidWord out = b;
    out.strands = strands;
    return out;
}

BraidWord shift_indices(const BraidWord& b, int delta, int strands) {
    BraidWord out;
    out.strands = strands;
    for (const BraidLetter& l : b.letters) out.letters.push_back({l.kind, l.index + delta});
    out.validate();
    return out;
}

}  // namespace

std::pair<BraidWord, BraidWord> exchange_right_pair(const BraidWord& alpha, const BraidWord& beta) {
    if (alpha.strands != beta.strands)
        throw std::invalid_argument("exchange: alpha and beta need equal strand counts");
    const int k = alpha.strands;
    BraidWord a1 = widen(alpha, k + 1), b1 = widen(beta, k + 1);
    BraidWord sig{k + 1, {{BraidLetter::Kind::Sigma, k}}};
    BraidWord sig_inv{k + 1, {{BraidLetter::Kind::SigmaInv, k}}};
    BraidWord tau{k + 1, {{BraidLetter::Kind::Tau, k}}};
    return {a1 * sig * b1 * sig_inv, a1 * tau * b1 * tau};
}

std::pair<BraidWord, BraidWord> exchange_left_pair(const BraidWord& alpha, const BraidWord& beta) {
    if (alpha.strands != beta.strands)
        throw std::invalid_argument("exchange: alpha and beta need equal strand counts");
    const int k = alpha.strands;
    BraidWord a1 = shift_indices(alpha, 1, k + 1), b1 = shift_indices(beta, 1, k + 1);
    BraidWord sig{k + 1, {{BraidLetter::Kind::Sigma, 1}}};
    BraidWord sig_inv{k + 1, {{BraidLetter::Kind::SigmaInv, 1}}};
    BraidWord tau{k + 1, {{BraidLetter::Kind::Tau, 1}}};
    return {a1 * sig * b1 * sig_inv, a1 * tau * b1 * tau};
}

BraidWord markov_move(const BraidWord& b, const MarkovMove& move) {
    using K = MarkovMove::Kind;
    auto stab_kind = [](K k) -> BraidLetter::Kind {
        switch (k) {
            case K::StabVirtual:
            case K::DestabVirtual: return BraidLetter::Kind::Tau;
            case K::StabPositive:
            case K::DestabPositive: return BraidLetter::Kind::SigmaInv;
            default: return BraidLetter::Kind::Sigma;
        }
    };
    switch (move.kind) {
        case K::Conjugate: {
            if (move.gamma.strands != b.strands)
                throw std::invalid_argument("markov: conjugator strand count mismatch");
            return move.gamma * b * move.gamma.inverse();
        }
        case K::StabVirtual:
        case K::StabPositive:
        case K::StabNegative: {
            BraidWord out = widen(b, b.strands + 1);
            out.letters.push_back({stab_kind(move.kind), b.strands});
            return out;
        }
        case K::DestabVirtual:
        case K::DestabPositive:
        case K::DestabNegative: {
            if (b.strands < 2 || b.letters.empty())
                throw std::invalid_argument("markov: destabilization needs a trailing letter");
            BraidLetter expect{stab_kind(move.kind), b.strands - 1};
            if (!(b.letters.back() == expect))
                throw std::invalid_argument("markov: trailing letter does not match the destabilization type");
            BraidWord rest = b;
            rest.letters.pop_back();
            if (!supported_below(rest, b.strands - 1))
                throw std::invalid_argument("markov: word touches the top strand elsewhere; cannot destabilize");
            rest.strands = b.strands - 1;
            rest.validate();
            return rest;
        }
        case K::ExchangeRight:
        case K::ExchangeLeft: {
            auto [classical, virt] = move.kind == K::ExchangeRight
                                         ? exchange_right_pair(move.alpha_part, move.beta_part)
                                         : exchange_left_pair(move.alpha_part, move.beta_part);
            if (b == classical) return virt;
            if (b == virt) return classical;
            throw std::invalid_argument("markov: braid does not match the supplied exchange decomposition");
        }
    }
    throw std::logic_error("markov: bad move kind");
}

}  // namespace valex
