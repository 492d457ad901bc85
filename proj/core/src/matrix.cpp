#include "valex/matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace valex {

PolyMatrix::PolyMatrix(int rows, int cols, CoeffRing ring)
    : rows_(rows), cols_(cols), ring_(ring),
      e_(static_cast<std::size_t>(rows) * cols, LaurentPoly::zero(ring)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

PolyMatrix PolyMatrix::identity(int n, CoeffRing ring) {
    PolyMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1, ring);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || !(ring_ == o.ring_)) throw std::invalid_argument("matrix: product shape/ring mismatch");
    PolyMatrix out(rows_, o.cols_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const LaurentPoly& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(ring_ == o.ring_))
        throw std::invalid_argument("matrix: difference shape/ring mismatch");
    PolyMatrix out(rows_, cols_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

PolyMatrix PolyMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), ring_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && e_ == o.e_;
}

namespace {

// Cofactor expansion over column subsets; dp over subsets keyed by the column
// bitmask, processing rows in order.
LaurentPoly det_cofactor(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return LaurentPoly::constant(1, m.ring());
    if (n > 30) throw std::invalid_argument("det: cofactor kernel limited to small matrices");
    std::unordered_map<std::uint32_t, LaurentPoly> prev;
    prev.emplace(0u, LaurentPoly::constant(1, m.ring()));
    for (int r = 0; r < n; ++r) {
        std::unordered_map<std::uint32_t, LaurentPoly> cur;
        for (const auto& [mask, d] : prev) {
            if (d.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                const LaurentPoly& a = m.at(r, c);
                if (a.is_zero()) continue;
                // choosing column c at row r adds one inversion per used
                // column greater than c
                bool negative = std::popcount(mask >> (c + 1)) & 1;
                LaurentPoly term = d * a;
                auto [it, fresh] = cur.try_emplace(mask | bit, LaurentPoly::zero(m.ring()));
                if (negative)
                    it->second -= term;
                else
                    it->second += term;
            }
        }
        prev = std::move(cur);
    }
    auto it = prev.find((n >= 32 ? 0xFFFFFFFFu : (1u << n) - 1));
    return it == prev.end() ? LaurentPoly::zero(m.ring()) : it->second;
}

// Bareiss fraction-free elimination; divisions are exact in the Laurent ring.
LaurentPoly det_bareiss(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return LaurentPoly::constant(1, m.ring());
    std::vector<std::vector<LaurentPoly>> a(n);
    for (int i = 0; i < n; ++i) {
        a[i].reserve(n);
        for (int j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
    }
    int sign = 1;
    LaurentPoly prev_pivot = LaurentPoly::constant(1, m.ring());
    for (int k = 0; k < n - 1; ++k) {
        // pick the sparsest nonzero pivot in the remaining block
        int pr = -1, pc = -1;
        std::size_t best = SIZE_MAX;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (!a[i][j].is_zero() && a[i][j].term_count() < best) {
                    best = a[i][j].term_count();
                    pr = i;
                    pc = j;
                }
        if (pr < 0) return LaurentPoly::zero(m.ring());
        if (pr != k) {
            std::swap(a[pr], a[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(a[i][pc], a[i][k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto dv = divide_exact(num, prev_pivot);
                if (!dv.divides) throw std::logic_error("det: fraction-free division failed");
                a[i][j] = std::move(dv.quotient);
            }
            a[i][k] = LaurentPoly::zero(m.ring());
        }
        prev_pivot = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace

LaurentPoly det(const PolyMatrix& m, DetKernel kernel) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    switch (kernel) {
        case DetKernel::Cofactor: return det_cofactor(m);
        case DetKernel::FractionFree: return det_bareiss(m);
        case DetKernel::Auto: return m.rows() <= 8 ? det_cofactor(m) : det_bareiss(m);
    }
    throw std::logic_error("det: bad kernel");
}

namespace {

void subsets(int n, int k, const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<LaurentPoly> minors(const PolyMatrix& m, int size, bool dedupe_units) {
    if (size <= 0) throw std::invalid_argument("minors: size must be positive");
    std::vector<LaurentPoly> out;
    if (size > m.rows() || size > m.cols()) return out;
    std::set<LaurentPoly> seen;
    subsets(m.rows(), size, [&](std::span<const int> rs) {
        std::vector<int> rows(rs.begin(), rs.end());
        subsets(m.cols(), size, [&](std::span<const int> cs) {
            LaurentPoly d = det(m.submatrix(rows, cs));
            if (dedupe_units) {
                LaurentPoly c = normalize_canonical(d, UnitGroup::full_monomial());
                if (seen.insert(c).second) out.push_back(std::move(c));
            } else {
                out.push_back(std::move(d));
            }
        });
    });
    return out;
}

}  // namespace valex
