#include "valex/group_ring.hpp"

#include <algorithm>

namespace valex {

GroupRingElem GroupRingElem::of_word(const GroupWord& w, Coeff c) {
    GroupRingElem e;
    e.add(w, c);
    return e;
}

void GroupRingElem::add(const GroupWord& w, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    GroupRingElem out = *this;
    for (auto& [w, c] : o.terms_) out.add(w, c);
    return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    GroupRingElem out = *this;
    for (auto& [w, c] : o.terms_) out.add(w, -c);
    return out;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem out;
    for (auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    GroupRingElem out;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) out.add(w1 * w2, c1 * c2);
    return out;
}

GroupRingElem GroupRingElem::translated(const GroupWord& w) const {
    GroupRingElem out;
    for (auto& [u, c] : terms_) out.add(w * u, c);
    return out;
}

GroupRingElem fox_derivative(const GroupWord& w, Gen g) {
    GroupRingElem out;
    GroupWord prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == g) {
            GroupRingElem d;
            if (l.exp > 0) {
                for (std::int32_t i = 0; i < l.exp; ++i) d += GroupRingElem::of_word(GroupWord::generator(g, i));
            } else {
                for (std::int32_t i = 1; i <= -l.exp; ++i) d += GroupRingElem::of_word(GroupWord::generator(g, -i), -1);
            }
            out += d.translated(prefix);
        }
        prefix.append(l.gen, l.exp);
    }
    return out;
}

LaurentPoly abelian_eval_word(const GroupWord& w, std::span<const Gen> meridians, CoeffRing ring) {
    Exp3 e;
    const Gen s = gen_s(), q = gen_q();
    for (const Letter& l : w.letters()) {
        if (l.gen == s)
            e.s += l.exp;
        else if (l.gen == q)
            e.q += l.exp;
        else if (std::find(meridians.begin(), meridians.end(), l.gen) != meridians.end())
            e.t += l.exp;
        else
            throw std::invalid_argument("abelian_eval: generator '" + gen_name(l.gen) +
                                        "' is not a meridian and not s, q");
    }
    return LaurentPoly::monomial(1, e, ring);
}

LaurentPoly abelian_eval(const GroupRingElem& e, std::span<const Gen> meridians, CoeffRing ring) {
    LaurentPoly out = LaurentPoly::zero(ring);
    for (auto& [w, c] : e.terms())
        out += abelian_eval_word(w, meridians, ring) * LaurentPoly::constant(c, ring);
    return out;
}

std::vector<LaurentPoly> abelian_fox_row(const GroupWord& w, std::span<const Gen> cols,
                                         std::span<const Gen> meridians, CoeffRing ring) {
    std::vector<LaurentPoly> row(cols.size(), LaurentPoly::zero(ring));
    const Gen s = gen_s(), q = gen_q();
    Exp3 prefix{};  // alpha of the prefix read so far
    for (const Letter& l : w.letters()) {
        Exp3 g{};  // alpha of the single generator
        if (l.gen == s)
            g.s = 1;
        else if (l.gen == q)
            g.q = 1;
        else if (std::find(meridians.begin(), meridians.end(), l.gen) != meridians.end())
            g.t = 1;
        else
            throw std::invalid_argument("abelian_fox_row: generator '" + gen_name(l.gen) +
                                        "' is not a meridian and not s, q");
        auto col = std::find(cols.begin(), cols.end(), l.gen);
        if (col != cols.end()) {
            LaurentPoly& target = row[static_cast<std::size_t>(col - cols.begin())];
            // d(g^e) = 1 + g + ... + g^(e-1)  (e > 0),  -(g^-1 + ... + g^e)  (e < 0)
            if (l.exp > 0) {
                for (std::int32_t i = 0; i < l.exp; ++i)
                    target += LaurentPoly::monomial(1, prefix + g * i, ring);
            } else {
                for (std::int32_t i = 1; i <= -l.exp; ++i)
                    target += LaurentPoly::monomial(-1, prefix + g * (-i), ring);
            }
        }
        prefix = prefix + g * l.exp;
    }
    return row;
}

bool fundamental_identity_check(const GroupWord& w, std::span<const Gen> meridians) {
    const CoeffRing ring = CoeffRing::integers();
    std::vector<Gen> gens;
    for (const Letter& l : w.letters())
        if (std::find(gens.begin(), gens.end(), l.gen) == gens.end()) gens.push_back(l.gen);
    LaurentPoly lhs = LaurentPoly::zero(ring);
    const LaurentPoly one = LaurentPoly::constant(1, ring);
    for (Gen g : gens) {
        LaurentPoly ag = abelian_eval_word(GroupWord::generator(g), meridians, ring);
        lhs += abelian_eval(fox_derivative(w, g), meridians, ring) * (ag - one);
    }
    LaurentPoly rhs = abelian_eval_word(w, meridians, ring) - one;
    return lhs == rhs;
}

}  // namespace valex
