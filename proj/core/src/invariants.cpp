#include "valex/invariants.hpp"

#include <algorithm>

namespace valex {

namespace {

LaurentPoly det_minus_identity(const PolyMatrix& m) {
    return det(m - PolyMatrix::identity(m.rows(), m.ring()));
}

}  // namespace

namespace {

bool null_homologous_relators(const Presentation& p) {
    for (const GroupWord& r : p.relators)
        if (!abelian_eval_word(r, p.meridians).is_one()) return false;
    return true;
}

}  // namespace

InvariantResult h_poly(const Presentation& p) {
    p.validate();
    LaurentPoly value;
    if (p.has_s && p.has_q && p.relators.size() == p.meridians.size() && null_homologous_relators(p)) {
        value = det(alexander_matrices(p).a);
    } else {
        value = delta_ell(p, 0).delta;
    }
    return {normalize_canonical(value, UnitGroup::full_monomial()), UnitGroup::full_monomial(),
            Pipeline::PresentationRoute, p.to_string()};
}

InvariantResult h_poly(const BraidWord& b) {
    PolyMatrix shifted = burau(b) - PolyMatrix::identity(b.strands, CoeffRing::integers());
    LaurentPoly via_burau = det(shifted, DetKernel::Cofactor);
    if (det(shifted, DetKernel::FractionFree) != via_burau)
        throw std::logic_error("h_poly: determinant kernels disagree");
    InvariantResult via_pres = h_poly(closure_presentation(b));
    if (!equal_up_to_units(via_burau, via_pres.value, UnitGroup::full_monomial()))
        throw std::logic_error("h_poly: Burau route disagrees with the closure-presentation route");
    return {normalize_canonical(via_burau, UnitGroup::full_monomial()), UnitGroup::full_monomial(),
            Pipeline::BraidRoute, b.to_string()};
}

IdealReport delta_ell(const BraidWord& b, int level) {
    if (level < 0) throw std::invalid_argument("delta_ell: level must be >= 0");
    const int k = b.strands;
    IdealReport rep;
    rep.level = level;
    rep.minor_size = k - level;
    if (rep.minor_size <= 0) {
        rep.delta = LaurentPoly::constant(1, CoeffRing::integers());
        rep.generators.push_back(rep.delta);
        return rep;
    }
    PolyMatrix shifted = burau(b) - PolyMatrix::identity(k, CoeffRing::integers());
    rep.generators = minors(shifted, rep.minor_size, /*dedupe_units=*/true);
    rep.delta = gcd_many(rep.generators);
    return rep;
}

LaurentPoly normalized_h_raw(const BraidWord& b) {
    BraidStats st = braid_stats(b);
    LaurentPoly d = det_minus_identity(burau(b));
    return (st.length % 2) ? -d : d;  // (-1)^(wr+v) = (-1)^|beta|
}

InvariantResult normalized_h(const BraidWord& b) {
    return {normalize_canonical(normalized_h_raw(b), UnitGroup::st_quarter()), UnitGroup::st_quarter(),
            Pipeline::BraidRoute, b.to_string()};
}

LaurentPoly generalized_g(const InvariantResult& h) {
    const LaurentPoly::MonomialImage img[3] = {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 0}}};
    return normalize_canonical(h.value.substitute(img), UnitGroup::full_monomial());
}

BoundReport crossing_bounds(const InvariantResult& r) {
    BoundReport out;
    out.profile = r.value.q_profile();
    out.twist_degree = std::max(1, r.unit_group.degree);
    out.from_normalized = r.unit_group.kind == UnitKind::StQuarter || r.unit_group.kind == UnitKind::TwistedSt;
    out.informative = !out.profile.zero;
    if (!out.informative) return out;
    const int n = out.twist_degree;
    int bound;
    if (out.from_normalized)
        bound = (std::max(out.profile.deg_q, out.profile.deg_q_inv) + n - 1) / n;
    else
        bound = (out.profile.width + 2 * n - 1) / (2 * n);
    out.lower_bound = bound;
    return out;
}

// --- twisted -------------------------------------------------------------------

void require_valid_representation(const Presentation& p, const Representation& rho) {
    rho.validate_basic();
    for (Gen g : p.all_generators())
        if (!rho.has_image(g))
            throw std::invalid_argument("representation: missing image for generator '" + gen_name(g) + "'");
    for (const GroupWord& r : p.all_relators())
        if (!rho.eval(r).is_identity())
            throw std::invalid_argument("representation: relator '" + r.to_string() + "' is not killed");
}

namespace {

// Assemble the full twisted presentation matrix M as one (n * rows) x (n * cols)
// matrix over F_p, rows = all relators, cols = all generators.
PolyMatrix twisted_full_matrix(const Presentation& p, const Representation& rho) {
    std::vector<Gen> cols = p.all_generators();
    std::vector<GroupWord> rels = p.all_relators();
    const int n = rho.degree;
    PolyMatrix m(n * static_cast<int>(rels.size()), n * static_cast<int>(cols.size()),
                 CoeffRing::prime_field(rho.modulus));
    for (std::size_t i = 0; i < rels.size(); ++i) {
        std::vector<PolyMatrix> row = omega_fox_row(rels[i], cols, rho, p.meridians);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    m.at(static_cast<int>(i) * n + r, static_cast<int>(j) * n + c) = row[j].at(r, c);
    }
    return m;
}

PolyMatrix drop_block_column(const PolyMatrix& m, int block, int n) {
    std::vector<int> rows(m.rows()), cols;
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    for (int j = 0; j < m.cols(); ++j)
        if (j / n != block) cols.push_back(j);
    return m.submatrix(rows, cols);
}

// Wada quotient: gcd of the maximal square subdeterminants of M with block
// column j removed, divided (exactly) by det Omega(1 - a_j).
LaurentPoly wada_quotient(const Presentation& p, const Representation& rho, const PolyMatrix& full, int block,
                          Gen gen) {
    const int n = rho.degree;
    PolyMatrix hat = drop_block_column(full, block, n);
    LaurentPoly denom = det(omega_one_minus(gen, rho, p.meridians));
    if (denom.is_zero()) throw std::domain_error("twisted_h: det Omega(1 - a_j) vanishes for the chosen column");
    LaurentPoly numer;
    if (hat.rows() < hat.cols()) {
        numer = LaurentPoly::zero(hat.ring());
    } else if (hat.rows() == hat.cols()) {
        numer = det(hat);
    } else {
        std::vector<LaurentPoly> dets = minors(hat, hat.cols(), /*dedupe_units=*/true);
        numer = gcd_many(dets);
    }
    if (numer.is_zero()) return numer;
    auto dv = divide_exact(numer, denom);
    if (!dv.divides)
        throw std::logic_error("twisted_h: Wada quotient is not exact; internal consistency failure");
    return dv.quotient;
}

}  // namespace

InvariantResult twisted_h(const Presentation& p, const Representation& rho) {
    p.validate();
    require_valid_representation(p, rho);
    const UnitGroup units = UnitGroup::twisted_monomial(rho.degree);
    PolyMatrix full = twisted_full_matrix(p, rho);
    const int n = rho.degree;

    LaurentPoly value;
    bool have_primary = false;
    if (p.relators.size() == p.meridians.size() && !p.meridians.empty()) {
        // square Wirtinger-like presentation: H = det(A)
        std::vector<int> rows, cols;
        for (std::size_t i = 0; i < p.relators.size() * n; ++i) rows.push_back(static_cast<int>(i));
        for (std::size_t j = 0; j < p.meridians.size() * n; ++j) cols.push_back(static_cast<int>(j));
        value = det(full.submatrix(rows, cols));
        have_primary = true;
    }

    // Wada quotient route: remove the first meridian column with invertible
    // Omega(1 - a_j), falling back to the q column (always invertible).
    int block = -1;
    Gen gen = gen_q();
    for (std::size_t j = 0; j < p.meridians.size(); ++j)
        if (!det(omega_one_minus(p.meridians[j], rho, p.meridians)).is_zero()) {
            block = static_cast<int>(j);
            gen = p.meridians[j];
            break;
        }
    if (block < 0) block = static_cast<int>(p.all_generators().size()) - 1;  // q column
    LaurentPoly wada = wada_quotient(p, rho, full, block, gen);

    if (have_primary) {
        if (!equal_up_to_units(value, wada, units))
            throw std::logic_error("twisted_h: det(A) and the Wada quotient disagree");
    } else {
        value = wada;
    }
    return {normalize_canonical(value, units), units, Pipeline::PresentationRoute, p.to_string()};
}

namespace {

void require_braid_fixed(const BraidWord& b, const Representation& rho) {
    std::vector<Gen> xs = strand_generators(b.strands);
    std::vector<GroupWord> imgs = fundamental_action_all(b);
    for (int i = 0; i < b.strands; ++i)
        if (!(rho.eval(imgs[i]) == rho.image(xs[i])))
            throw std::invalid_argument("twisted_h: representation is not fixed by the braid (strand " +
                                        std::to_string(i + 1) + ")");
}

}  // namespace

InvariantResult twisted_h(const BraidWord& b, const Representation& rho) {
    rho.validate_basic();
    require_braid_fixed(b, rho);
    PolyMatrix psi = twisted_burau(b, rho);
    LaurentPoly value = det(psi - PolyMatrix::identity(psi.rows(), psi.ring()));
    const UnitGroup units = UnitGroup::twisted_monomial(rho.degree);
    return {normalize_canonical(value, units), units, Pipeline::BraidRoute, b.to_string()};
}

LaurentPoly normalized_twisted_h_raw(const BraidWord& b, const Representation& rho) {
    rho.validate_basic();
    require_braid_fixed(b, rho);
    PolyMatrix psi = twisted_burau(b, rho);
    LaurentPoly d = det(psi - PolyMatrix::identity(psi.rows(), psi.ring()));
    BraidStats st = braid_stats(b);
    bool flip = (static_cast<long long>(rho.degree) * static_cast<long long>(st.length)) % 2 != 0;
    return flip ? -d : d;
}

InvariantResult normalized_twisted_h(const BraidWord& b, const Representation& rho) {
    const UnitGroup units = UnitGroup::twisted_st(rho.degree);
    return {normalize_canonical(normalized_twisted_h_raw(b, rho), units), units, Pipeline::BraidRoute,
            b.to_string()};
}

// --- skein ---------------------------------------------------------------------

SkeinReport skein_check(const BraidWord& b, std::size_t position) {
    if (position >= b.letters.size()) throw std::invalid_argument("skein: position out of range");
    if (b.letters[position].kind == BraidLetter::Kind::Tau)
        throw std::invalid_argument("skein: letter at position is virtual");
    BraidWord plus = b, minus = b, zero = b;
    plus.letters[position].kind = BraidLetter::Kind::Sigma;
    minus.letters[position].kind = BraidLetter::Kind::SigmaInv;
    zero.letters.erase(zero.letters.begin() + static_cast<std::ptrdiff_t>(position));
    SkeinReport rep;
    rep.plus = normalized_h_raw(plus);
    rep.minus = normalized_h_raw(minus);
    rep.zero = normalized_h_raw(zero);
    const CoeffRing ring = CoeffRing::integers();
    LaurentPoly st = LaurentPoly::monomial(1, {1, 1, 0}, ring);
    LaurentPoly lhs = rep.plus - st * rep.minus;
    LaurentPoly rhs = (st - LaurentPoly::constant(1, ring)) * rep.zero;
    rep.holds = lhs == rhs;
    return rep;
}

// --- classicality ----------------------------------------------------------------

namespace {

ClassicalityReport classicality_common(const Presentation& p, const LaurentPoly& h,
                                       std::optional<bool> single_component) {
    const CoeffRing ring = CoeffRing::integers();
    ClassicalityReport rep;
    rep.h = h;
    rep.h_nonzero = !h.is_zero();
    const LaurentPoly one = LaurentPoly::constant(1, ring);
    const LaurentPoly s = LaurentPoly::var_s(ring), t = LaurentPoly::var_t(ring), q = LaurentPoly::var_q(ring);
    rep.div_q_minus_s = divides(q - s, h);
    rep.div_one_minus_tq = divides(one - t * q, h);
    if (single_component.has_value() && *single_component) rep.div_one_minus_st = divides(one - s * t, h);

    rep.support_law = true;
    if (!h.is_zero()) {
        auto it = h.terms().begin();
        rep.support_offset = it->first.s + it->first.q - it->first.t;
        for (auto& [e, c] : h.terms())
            if (e.s + e.q - e.t != rep.support_offset) {
                rep.support_law = false;
                break;
            }
    }

    IdealReport d1 = delta_ell(p, 1);
    const LaurentPoly::MonomialImage q_to_1[3] = {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 0}}};
    rep.delta1_at_q1 = normalize_canonical(d1.delta.substitute(q_to_1), UnitGroup::full_monomial());
    const LaurentPoly::MonomialImage mirror[3] = {{1, {-1, 0, 0}}, {1, {0, -1, 0}}, {1, {0, 0, 1}}};
    rep.delta1_symmetric =
        equal_up_to_units(rep.delta1_at_q1, rep.delta1_at_q1.substitute(mirror), UnitGroup::full_monomial());

    if (rep.h_nonzero)
        rep.verdict = "non-classical (H is nonzero)";
    else if (!rep.delta1_symmetric)
        rep.verdict = "non-classical (Delta^1 at q=1 is asymmetric)";
    else
        rep.verdict = "no obstruction found";
    return rep;
}

}  // namespace

ClassicalityReport classicality_report(const Presentation& p, std::optional<bool> single_component) {
    return classicality_common(p, h_poly(p).value, single_component);
}

ClassicalityReport classicality_report(const BraidWord& b) {
    BraidStats st = braid_stats(b);
    return classicality_common(closure_presentation(b), h_poly(b).value, st.components == 1);
}

}  // namespace valex
