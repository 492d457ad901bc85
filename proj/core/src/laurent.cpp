#include "valex/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace valex {

namespace {

Coeff reduce(const Coeff& c, const CoeffRing& ring) {
    if (!ring.is_field()) return c;
    Coeff r = c % ring.modulus;
    if (r < 0) r += ring.modulus;
    return r;
}

void require_same_ring(const CoeffRing& a, const CoeffRing& b) {
    if (!(a == b)) throw std::invalid_argument("laurent: mixed coefficient rings");
}

Coeff field_inverse(const Coeff& c, std::uint32_t p) {
    // extended euclid on small moduli
    long long a = static_cast<long long>(c % p), m = p;
    long long x0 = 0, x1 = 1, b = m;
    while (a != 0) {
        long long qd = b / a;
        b -= qd * a;
        std::swap(a, b);
        x0 -= qd * x1;
        std::swap(x0, x1);
    }
    long long inv = ((x0 % m) + m) % m;
    return Coeff(inv);
}

}  // namespace

std::string UnitGroup::name() const {
    switch (kind) {
        case UnitKind::FullMonomial: return "full-monomial";
        case UnitKind::StQuarter: return "st-power";
        case UnitKind::TwistedMonomial: return "twisted-monomial(n=" + std::to_string(degree) + ")";
        case UnitKind::TwistedSt: return "twisted-st(n=" + std::to_string(degree) + ")";
    }
    return "?";
}

LaurentPoly::LaurentPoly(CoeffRing ring, TermMap terms) : ring_(ring) {
    for (auto& [e, c] : terms) {
        Coeff r = reduce(c, ring_);
        if (r != 0) terms_.emplace(e, std::move(r));
    }
}

LaurentPoly LaurentPoly::constant(Coeff c, CoeffRing ring) {
    return monomial(std::move(c), Exp3{}, ring);
}

LaurentPoly LaurentPoly::monomial(Coeff c, Exp3 e, CoeffRing ring) {
    LaurentPoly p(ring);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp3{} && terms_.begin()->second == 1;
}

const std::pair<const Exp3, Coeff>& LaurentPoly::anchor() const {
    if (terms_.empty()) throw std::logic_error("laurent: anchor of zero");
    return *terms_.rbegin();
}

void LaurentPoly::add_term(const Exp3& e, const Coeff& c) {
    Coeff r = reduce(c, ring_);
    if (r == 0) return;
    auto [it, inserted] = terms_.emplace(e, r);
    if (!inserted) {
        it->second = reduce(it->second + r, ring_);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ring_);
    for (auto& [e, c] : terms_) out.terms_.emplace(e, reduce(-c, ring_));
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly out = *this;
    for (auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly out = *this;
    for (auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly out(ring_);
    if (terms_.empty() || o.terms_.empty()) return out;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k == 0) return constant(1, ring_);
    if (k < 0) {
        if (!is_monomial()) throw std::domain_error("laurent: negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Coeff cinv;
        if (ring_.is_field())
            cinv = field_inverse(c, ring_.modulus);
        else if (c == 1 || c == -1)
            cinv = c;
        else
            throw std::domain_error("laurent: negative power of a non-invertible coefficient");
        LaurentPoly inv = monomial(cinv, {-e.s, -e.t, -e.q}, ring_);
        return inv.pow(-k);
    }
    LaurentPoly acc = constant(1, ring_);
    LaurentPoly base = *this;
    int n = k;
    while (n > 0) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (ring_.modulus != o.ring_.modulus) return ring_.modulus < o.ring_.modulus;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

Exp3 LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::logic_error("laurent: min_exponents of zero");
    Exp3 m = terms_.begin()->first;
    for (auto& [e, c] : terms_) {
        m.s = std::min(m.s, e.s);
        m.t = std::min(m.t, e.t);
        m.q = std::min(m.q, e.q);
    }
    return m;
}

LaurentPoly::QProfile LaurentPoly::q_profile() const {
    QProfile out;
    if (terms_.empty()) {
        out.zero = true;
        return out;
    }
    int lo = terms_.begin()->first.q, hi = lo;
    for (auto& [e, c] : terms_) {
        lo = std::min(lo, e.q);
        hi = std::max(hi, e.q);
    }
    out.width = hi - lo;
    out.deg_q = hi;
    out.deg_q_inv = -lo;
    return out;
}

LaurentPoly LaurentPoly::substitute(const MonomialImage images[3]) const {
    LaurentPoly out(ring_);
    for (auto& [e, c] : terms_) {
        Exp3 ne = images[0].exp * e.s + images[1].exp * e.t + images[2].exp * e.q;
        Coeff nc = c;
        int flips = 0;
        if (images[0].sign < 0 && (e.s & 1)) flips ^= 1;
        if (images[1].sign < 0 && (e.t & 1)) flips ^= 1;
        if (images[2].sign < 0 && (e.q & 1)) flips ^= 1;
        out.add_term(ne, flips ? -nc : nc);
    }
    return out;
}

LaurentPoly LaurentPoly::collapse_q() const {
    const MonomialImage img[3] = {{1, {1, 0, -1}}, {1, {0, 1, 1}}, {1, {0, 0, 0}}};
    return substitute(img);
}

// --- text form ---------------------------------------------------------------

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending by (e_q, e_t, e_s)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exp3& e = it->first;
        const Coeff& c = it->second;
        bool neg = c < 0;
        Coeff mag = neg ? Coeff(-c) : c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool constant_term = (e == Exp3{});
        std::vector<std::string> factors;
        if (mag != 1 || constant_term) factors.push_back(mag.str());
        auto var = [&](char v, int exp) {
            if (exp == 0) return;
            std::string f(1, v);
            if (exp != 1) f += "^" + std::to_string(exp);
            factors.push_back(std::move(f));
        };
        var('s', e.s);
        var('t', e.t);
        var('q', e.q);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, CoeffRing ring) {
    LaurentPoly out(ring);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&]() -> long long {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("laurent: malformed integer in polynomial text");
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("laurent: expected '+' or '-' between terms");
        }
        Coeff coeff = 1;
        Exp3 e;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = Coeff(parse_int());
                saw_factor = true;
            } else if (i < text.size() && (text[i] == 's' || text[i] == 't' || text[i] == 'q')) {
                char v = text[i++];
                int exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    exp = static_cast<int>(parse_int());
                }
                (v == 's' ? e.s : v == 't' ? e.t : e.q) += exp;
                saw_factor = true;
            } else {
                throw std::invalid_argument("laurent: unexpected character in polynomial text");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw std::invalid_argument("laurent: empty term");
        out.add_term(e, sign < 0 ? Coeff(-coeff) : coeff);
        any = true;
    }
    if (!any) throw std::invalid_argument("laurent: empty polynomial text");
    return out;
}

// --- exact division ----------------------------------------------------------

namespace {

// Exact division of shifted (ordinary-polynomial) representatives by leading
// terms under the (e_q, e_t, e_s) order.
bool poly_divide(const LaurentPoly::TermMap& f, const LaurentPoly::TermMap& d, const CoeffRing& ring,
                 LaurentPoly::TermMap& quot) {
    LaurentPoly::TermMap r = f;
    const auto& [de, dc] = *d.rbegin();
    Coeff dcinv;
    if (ring.is_field()) dcinv = field_inverse(dc, ring.modulus);
    while (!r.empty()) {
        const auto& [re, rc] = *r.rbegin();
        Exp3 eq = re - de;
        if (eq.s < 0 || eq.t < 0 || eq.q < 0) return false;
        Coeff cq;
        if (ring.is_field()) {
            cq = rc * dcinv % ring.modulus;
        } else {
            if (rc % dc != 0) return false;
            cq = rc / dc;
        }
        quot[eq] = cq;
        // r -= cq * x^eq * d
        for (auto& [e, c] : d) {
            Exp3 ne = e + eq;
            Coeff delta = c * cq;
            if (ring.is_field()) delta %= ring.modulus;
            auto it = r.find(ne);
            if (it == r.end()) {
                Coeff nc = -delta;
                if (ring.is_field()) {
                    nc %= ring.modulus;
                    if (nc < 0) nc += ring.modulus;
                }
                if (nc != 0) r.emplace(ne, std::move(nc));
            } else {
                it->second -= delta;
                if (ring.is_field()) {
                    it->second %= ring.modulus;
                    if (it->second < 0) it->second += ring.modulus;
                }
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return true;
}

LaurentPoly::TermMap shift_to_origin(const LaurentPoly& p, Exp3& shift) {
    shift = p.min_exponents();
    LaurentPoly::TermMap out;
    for (auto& [e, c] : p.terms()) out.emplace(e - shift, c);
    return out;
}

}  // namespace

DivisionResult divide_exact(const LaurentPoly& f, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    require_same_ring(f.ring(), d.ring());
    if (f.is_zero()) return {true, LaurentPoly::zero(f.ring())};
    Exp3 fs, ds;
    LaurentPoly::TermMap f0 = shift_to_origin(f, fs);
    LaurentPoly::TermMap d0 = shift_to_origin(d, ds);
    LaurentPoly::TermMap q0;
    if (!poly_divide(f0, d0, f.ring(), q0)) return {false, LaurentPoly::zero(f.ring())};
    Exp3 shift = fs - ds;
    LaurentPoly::TermMap q;
    for (auto& [e, c] : q0) q.emplace(e + shift, c);
    return {true, LaurentPoly(f.ring(), std::move(q))};
}

// --- gcd: recursive primitive PRS over the tower ------------------------------

namespace {

// Univariate view in one of s/t/q with LaurentPoly (in the other vars) coeffs.
using Uni = std::map<int, LaurentPoly>;

int var_exp(const Exp3& e, int v) { return v == 0 ? e.s : v == 1 ? e.t : e.q; }

Exp3 without_var(Exp3 e, int v) {
    (v == 0 ? e.s : v == 1 ? e.t : e.q) = 0;
    return e;
}

Exp3 with_var(Exp3 e, int v, int k) {
    (v == 0 ? e.s : v == 1 ? e.t : e.q) = k;
    return e;
}

Uni to_uni(const LaurentPoly& p, int v) {
    Uni out;
    for (auto& [e, c] : p.terms()) {
        auto [it, ok] = out.emplace(var_exp(e, v), LaurentPoly::zero(p.ring()));
        it->second += LaurentPoly::monomial(c, without_var(e, v), p.ring());
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

int degree_in(const LaurentPoly& p, int v) {
    int d = 0;
    for (auto& [e, c] : p.terms()) d = std::max(d, var_exp(e, v));
    return d;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b, int vi);

// strip the integer content (or normalize the leading coefficient over a
// field); keeps pseudo-remainder coefficients from exploding
LaurentPoly strip_numeric_content(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    if (p.ring().is_field()) return p;
    Coeff g = 0;
    for (auto& [e, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) return p;
    }
    return divide_exact(p, LaurentPoly::constant(g, p.ring())).quotient;
}

LaurentPoly content_rec(const LaurentPoly& p, int v, int vi) {
    Uni u = to_uni(p, v);
    LaurentPoly c = LaurentPoly::zero(p.ring());
    for (auto& [k, coeff] : u) {
        c = gcd_rec(c, coeff, vi + 1);
        if (c.is_monomial() && (p.ring().is_field() || c.anchor().second == 1)) break;
    }
    return c;
}

// vars are visited in the order q, t, s
constexpr int kVarOrder[3] = {2, 1, 0};

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b, int vi) {
    const CoeffRing ring = a.ring();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // skip variables not present in either
    while (vi < 3 && degree_in(a, kVarOrder[vi]) == 0 && degree_in(b, kVarOrder[vi]) == 0) ++vi;
    if (vi == 3) {
        if (ring.is_field()) return LaurentPoly::constant(1, ring);
        Coeff g = 0;
        for (auto& [e, c] : a.terms()) g = boost::multiprecision::gcd(g, c);
        for (auto& [e, c] : b.terms()) g = boost::multiprecision::gcd(g, c);
        return LaurentPoly::constant(g, ring);
    }
    const int v = kVarOrder[vi];

    LaurentPoly ca = content_rec(a, v, vi);
    LaurentPoly cb = content_rec(b, v, vi);
    LaurentPoly c = gcd_rec(ca, cb, vi + 1);
    LaurentPoly pa = divide_exact(a, ca).quotient;
    LaurentPoly pb = divide_exact(b, cb).quotient;

    // primitive PRS in variable v
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    while (true) {
        int db = degree_in(pb, v);
        if (db == 0) {
            // nonzero remainder of degree 0: primitive parts are coprime in v
            return c;
        }
        // quick exits: either primitive part dividing the other settles it
        if (divide_exact(pa, pb).divides) {
            LaurentPoly cpb = content_rec(pb, v, vi);
            return c * divide_exact(pb, cpb).quotient;
        }
        // pseudo-remainder prem(pa, pb, v), stripping numeric content as we go
        Uni ub = to_uni(pb, v);
        LaurentPoly lcb = ub.rbegin()->second;
        LaurentPoly r = pa;
        while (!r.is_zero() && degree_in(r, v) >= db) {
            Uni ur = to_uni(r, v);
            int dr = ur.rbegin()->first;
            LaurentPoly lcr = ur.rbegin()->second;
            // r = lcb * r - lcr * x_v^(dr-db) * pb
            LaurentPoly shift = LaurentPoly::monomial(1, with_var(Exp3{}, v, dr - db), r.ring());
            r = strip_numeric_content(lcb * r - lcr * shift * pb);
        }
        if (r.is_zero()) {
            LaurentPoly cpb = content_rec(pb, v, vi);
            return c * divide_exact(pb, cpb).quotient;
        }
        LaurentPoly cr = content_rec(r, v, vi);
        pa = pb;
        pb = divide_exact(r, cr).quotient;
    }
}

LaurentPoly shifted_nonneg(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Exp3 m = p.min_exponents();
    LaurentPoly::TermMap terms;
    for (auto& [e, c] : p.terms()) terms.emplace(e - m, c);
    return LaurentPoly(p.ring(), std::move(terms));
}

// --- heuristic gcd (evaluate at a large integer, reconstruct, verify) --------
// The primitive PRS suffers intermediate-expression swell on dense integer
// inputs. The evaluation route is exact because every candidate is verified
// by trial division on both inputs; the PRS stays as the fallback (and is the
// only route over prime fields, where coefficients cannot swell).

Coeff max_norm(const LaurentPoly& p) {
    Coeff m = 0;
    for (auto& [e, c] : p.terms()) m = std::max(m, Coeff(abs(c)));
    return m;
}

LaurentPoly eval_var(const LaurentPoly& p, int v, const Coeff& xi) {
    LaurentPoly out = LaurentPoly::zero(p.ring());
    for (auto& [e, c] : p.terms()) {
        Exp3 rest = e;
        int k = var_exp(e, v);
        (v == 0 ? rest.s : v == 1 ? rest.t : rest.q) = 0;
        out += LaurentPoly::monomial(c * boost::multiprecision::pow(xi, static_cast<unsigned>(k)), rest, p.ring());
    }
    return out;
}

// base-xi digit expansion of every coefficient, balanced into (-xi/2, xi/2]
LaurentPoly lift_from_eval(const LaurentPoly& h, int v, const Coeff& xi, CoeffRing ring) {
    LaurentPoly out = LaurentPoly::zero(ring);
    LaurentPoly rest = h;
    int e = 0;
    while (!rest.is_zero()) {
        if (e > 512) throw std::logic_error("gcd: runaway lift");
        LaurentPoly::TermMap digit_terms, next_terms;
        for (auto& [mono, c] : rest.terms()) {
            Coeff d = c % xi;
            if (d * 2 > xi) d -= xi;
            if (d * 2 <= -xi) d += xi;
            if (d != 0) digit_terms.emplace(mono, d);
            Coeff up = (c - d) / xi;
            if (up != 0) next_terms.emplace(mono, up);
        }
        LaurentPoly digit(ring, std::move(digit_terms));
        out += digit * LaurentPoly::monomial(1, with_var(Exp3{}, v, e), ring);
        rest = LaurentPoly(ring, std::move(next_terms));
        ++e;
    }
    return out;
}

Coeff integer_content(const LaurentPoly& p) {
    Coeff g = 0;
    for (auto& [e, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b, int depth) {
    const CoeffRing ring = a.ring();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int vi = 0;
    while (vi < 3 && degree_in(a, kVarOrder[vi]) == 0 && degree_in(b, kVarOrder[vi]) == 0) ++vi;
    if (vi == 3) {
        Coeff g = boost::multiprecision::gcd(integer_content(a), integer_content(b));
        return LaurentPoly::constant(g, ring);
    }
    if (depth > 8) return std::nullopt;
    const int v = kVarOrder[vi];
    // integer contents can carry evaluated higher-level factors; split them
    // off, recurse on the primitive parts, and put their gcd back
    Coeff ca = integer_content(a), cb = integer_content(b);
    LaurentPoly pa = divide_exact(a, LaurentPoly::constant(ca, ring)).quotient;
    LaurentPoly pb = divide_exact(b, LaurentPoly::constant(cb, ring)).quotient;
    LaurentPoly cg = LaurentPoly::constant(boost::multiprecision::gcd(ca, cb), ring);
    Coeff xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 5; ++attempt) {
        LaurentPoly ax = eval_var(pa, v, xi), bx = eval_var(pb, v, xi);
        if (!ax.is_zero() && !bx.is_zero()) {
            std::optional<LaurentPoly> h = heuristic_gcd(ax, bx, depth + 1);
            if (h && !h->is_zero()) {
                // the primitive inputs have a primitive gcd, so any integer
                // content of the lift is extraneous
                LaurentPoly cand = strip_numeric_content(lift_from_eval(*h, v, xi, ring));
                if (!cand.is_zero() && divide_exact(pa, cand).divides && divide_exact(pb, cand).divides)
                    return cand * cg;
            }
        }
        xi = xi * xi / 2 + 29;
    }
    return std::nullopt;
}

std::optional<LaurentPoly> try_heuristic(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ring().is_field()) return std::nullopt;
    return heuristic_gcd(a, b, 0);
}

}  // namespace

LaurentPoly gcd_pair(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a.ring(), b.ring());
    LaurentPoly a0 = shifted_nonneg(a), b0 = shifted_nonneg(b);
    if (std::optional<LaurentPoly> h = try_heuristic(a0, b0))
        return normalize_canonical(*h, UnitGroup::full_monomial());
    return normalize_canonical(gcd_rec(std::move(a0), std::move(b0), 0), UnitGroup::full_monomial());
}

LaurentPoly gcd_many(std::span<const LaurentPoly> polys) {
    if (polys.empty()) throw std::invalid_argument("gcd_many: empty input");
    const CoeffRing ring = polys.front().ring();
    LaurentPoly g = LaurentPoly::zero(ring);
    for (const auto& f : polys) {
        LaurentPoly f0 = shifted_nonneg(f);
        std::optional<LaurentPoly> h = try_heuristic(g, f0);
        g = h ? std::move(*h) : gcd_rec(g, std::move(f0), 0);
        if (!g.is_zero() && g.is_monomial()) {
            const Coeff& c = g.anchor().second;
            if (ring.is_field() || c == 1 || c == -1) break;
        }
    }
    return normalize_canonical(g, UnitGroup::full_monomial());
}

// --- canonical forms / unit equivalence ---------------------------------------

namespace {

int floor_div(int a, int b) {
    int qd = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? qd - 1 : qd;
}

// The coefficient units admitted by the group: full field units for the
// twisted kinds, bare sign for FullMonomial, nothing for StQuarter.
enum class CoeffUnits { None, Sign, Field };

CoeffUnits coeff_units(UnitGroup u, const CoeffRing& ring) {
    switch (u.kind) {
        case UnitKind::StQuarter: return CoeffUnits::None;
        case UnitKind::FullMonomial: return CoeffUnits::Sign;
        default: return ring.is_field() ? CoeffUnits::Field : CoeffUnits::Sign;
    }
}

}  // namespace

LaurentPoly normalize_canonical(const LaurentPoly& f, UnitGroup u) {
    if (f.is_zero()) return f;
    const CoeffRing ring = f.ring();
    const int n = std::max(1, u.degree);
    Exp3 mins = f.min_exponents();
    Exp3 shift{};
    switch (u.kind) {
        case UnitKind::FullMonomial:
        case UnitKind::TwistedMonomial:
            shift = {-n * floor_div(mins.s, n), -n * floor_div(mins.t, n), -n * floor_div(mins.q, n)};
            break;
        case UnitKind::StQuarter:
        case UnitKind::TwistedSt: {
            int j = -floor_div(mins.s, n);
            shift = {j * n, j * n, 0};
            break;
        }
    }
    LaurentPoly::TermMap terms;
    for (auto& [e, c] : f.terms()) terms.emplace(e + shift, c);
    LaurentPoly out(ring, std::move(terms));

    switch (coeff_units(u, ring)) {
        case CoeffUnits::None:
            break;
        case CoeffUnits::Sign: {
            if (ring.is_field()) {
                // pick the smaller of c and p-c as the anchor representative
                Coeff c = out.anchor().second;
                if (Coeff(ring.modulus) - c < c) out = -out;
            } else if (out.anchor().second < 0) {
                out = -out;
            }
            break;
        }
        case CoeffUnits::Field: {
            Coeff inv = field_inverse(out.anchor().second, ring.modulus);
            out = out * LaurentPoly::constant(inv, ring);
            break;
        }
    }
    return out;
}

bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g, UnitGroup u) {
    if (!(f.ring() == g.ring())) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const CoeffRing ring = f.ring();
    const int n = std::max(1, u.degree);
    Exp3 d = g.anchor().first - f.anchor().first;
    switch (u.kind) {
        case UnitKind::FullMonomial:
        case UnitKind::TwistedMonomial:
            if (d.s % n || d.t % n || d.q % n) return false;
            break;
        case UnitKind::StQuarter:
        case UnitKind::TwistedSt:
            if (d.q != 0 || d.s != d.t || d.s % n) return false;
            break;
    }
    // candidate coefficient ratio from the anchors
    const Coeff& cf = f.anchor().second;
    const Coeff& cg = g.anchor().second;
    Coeff ratio;
    if (ring.is_field()) {
        ratio = cg * field_inverse(cf, ring.modulus) % ring.modulus;
    } else {
        if (cg % cf != 0) return false;
        ratio = cg / cf;
    }
    switch (coeff_units(u, ring)) {
        case CoeffUnits::None:
            if (ratio != 1) return false;
            break;
        case CoeffUnits::Sign:
            if (ring.is_field()) {
                if (ratio != 1 && ratio != Coeff(ring.modulus) - 1) return false;
            } else if (ratio != 1 && ratio != -1) {
                return false;
            }
            break;
        case CoeffUnits::Field:
            break;  // any nonzero ratio admissible
    }
    return g == f * LaurentPoly::monomial(ratio, d, ring);
}

}  // namespace valex
