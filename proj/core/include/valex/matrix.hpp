#pragma once

// Dense matrices of Laurent polynomials, exact determinants (two independent
// kernels), and minor enumeration.

#include "valex/laurent.hpp"

#include <functional>
#include <optional>

namespace valex {

enum class DetKernel {
    Auto,          // memoized cofactor up to 8x8, fraction-free above
    Cofactor,      // expansion with memoized minors
    FractionFree,  // Bareiss elimination with exact division
};

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, CoeffRing ring);

    static PolyMatrix identity(int n, CoeffRing ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CoeffRing& ring() const { return ring_; }

    const LaurentPoly& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    LaurentPoly& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;

    PolyMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;

    bool operator==(const PolyMatrix& o) const;

  private:
    int rows_ = 0, cols_ = 0;
    CoeffRing ring_;
    std::vector<LaurentPoly> e_;
};

// Exact determinant. Throws on non-square input.
LaurentPoly det(const PolyMatrix& m, DetKernel kernel = DetKernel::Auto);

// All size x size minors (over every row and column subset), in deterministic
// subset order. When dedupe_units is set, duplicates up to FullMonomial units
// are collapsed.
std::vector<LaurentPoly> minors(const PolyMatrix& m, int size, bool dedupe_units = false);

}  // namespace valex
