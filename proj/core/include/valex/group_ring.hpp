#pragma once

// Integral group-ring elements over the free group, Fox derivatives, and the
// abelianization map alpha: meridians -> t, s -> s, q -> q.

#include "valex/laurent.hpp"
#include "valex/word.hpp"

#include <map>

namespace valex {

class GroupRingElem {
  public:
    using TermMap = std::map<GroupWord, Coeff>;

    GroupRingElem() = default;

    static GroupRingElem zero() { return {}; }
    static GroupRingElem one() { return of_word(GroupWord{}); }
    static GroupRingElem of_word(const GroupWord& w, Coeff c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem& operator+=(const GroupRingElem& o) { return *this = *this + o; }

    // left-multiply by a group element
    GroupRingElem translated(const GroupWord& w) const;

    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  private:
    TermMap terms_;
    void add(const GroupWord& w, const Coeff& c);
};

// Free (Fox) derivative d(w)/d(g): d(g)/d(g) = 1, d(g^-1)/d(g) = -g^-1,
// d(uv)/d(g) = du/dg + u dv/dg. Powers g^k use the closed form
// 1 + g + ... + g^(k-1) (k > 0) and -(g^-1 + ... + g^k) (k < 0).
GroupRingElem fox_derivative(const GroupWord& w, Gen g);

// alpha on a single word: s -> s, q -> q, every meridian -> t. Throws when a
// generator is neither a declared meridian nor s, q.
LaurentPoly abelian_eval_word(const GroupWord& w, std::span<const Gen> meridians,
                              CoeffRing ring = CoeffRing::integers());

LaurentPoly abelian_eval(const GroupRingElem& e, std::span<const Gen> meridians,
                         CoeffRing ring = CoeffRing::integers());

// alpha(dw/dg) for every g in cols, in a single scan of w. Equivalent to
// abelian_eval(fox_derivative(w, g), ...) but linear in the word length.
std::vector<LaurentPoly> abelian_fox_row(const GroupWord& w, std::span<const Gen> cols,
                                         std::span<const Gen> meridians,
                                         CoeffRing ring = CoeffRing::integers());

// Verifies sum_g alpha(dw/dg)(alpha(g) - 1) == alpha(w) - 1 exactly.
bool fundamental_identity_check(const GroupWord& w, std::span<const Gen> meridians);

}  // namespace valex
