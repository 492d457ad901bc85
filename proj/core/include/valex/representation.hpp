#pragma once

// Matrices over a prime field, representations of the free group on a
// generator set into GL_n(F_p), and the evaluation Omega sending a group-ring
// element e = sum m_i w_i to sum m_i rho(w_i) alpha(w_i).

#include "valex/group_ring.hpp"
#include "valex/matrix.hpp"

#include <map>
#include <optional>

namespace valex {

class FpMat {
  public:
    FpMat() = default;
    FpMat(std::uint32_t p, int n) : p_(p), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static FpMat identity(std::uint32_t p, int n);

    std::uint32_t modulus() const { return p_; }
    int dim() const { return n_; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, std::int64_t v) { a_[static_cast<std::size_t>(i) * n_ + j] = ((v % p_) + p_) % p_; }

    FpMat operator*(const FpMat& o) const;
    std::int64_t det() const;
    bool invertible() const { return det() != 0; }
    std::optional<FpMat> inverse() const;

    bool is_identity() const { return *this == identity(p_, n_); }
    bool commutes_with(const FpMat& o) const { return *this * o == o * *this; }

    friend bool operator==(const FpMat&, const FpMat&) = default;
    friend auto operator<=>(const FpMat&, const FpMat&) = default;

    std::string to_string() const;  // row-major bracket list, e.g. [[0,1],[1,0]]

  private:
    std::uint32_t p_ = 2;
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

struct Representation {
    std::uint32_t modulus = 2;
    int degree = 1;
    std::map<Gen, FpMat> images;
    std::vector<std::string> verified_relators;  // names/text of relators checked to die

    const FpMat& image(Gen g) const;
    bool has_image(Gen g) const { return images.count(g) != 0; }

    // Image of a whole word (inverses via modular inversion).
    FpMat eval(const GroupWord& w) const;

    // rho(s) and rho(q) must commute; every image must be invertible.
    void validate_basic() const;

    // exact text form: `p = 2`, `n = 2`, then one `name = [[..],[..]]` per
    // generator, in file order.
    static Representation parse(std::string_view text);
    std::string to_string() const;
};

// Omega(e) = sum m_i rho(w_i) * alpha(w_i): an n x n matrix of Laurent
// polynomials over F_p.
PolyMatrix omega_eval(const GroupRingElem& e, const Representation& rho, std::span<const Gen> meridians);

// Omega(1 - g) for a single generator.
PolyMatrix omega_one_minus(Gen g, const Representation& rho, std::span<const Gen> meridians);

// Omega(dw/dg) for every g in cols in one scan of w; the twisted counterpart
// of abelian_fox_row.
std::vector<PolyMatrix> omega_fox_row(const GroupWord& w, std::span<const Gen> cols,
                                      const Representation& rho, std::span<const Gen> meridians);

}  // namespace valex
