#include "valex/representation.hpp"

#include <cctype>
#include <sstream>

namespace valex {

FpMat FpMat::identity(std::uint32_t p, int n) {
    FpMat m(p, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("fpmat: mismatched product");
    FpMat out(p_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            std::int64_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < n_; ++j) out.set(i, j, out.at(i, j) + a * o.at(k, j));
        }
    return out;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        std::int64_t qd = r / newr;
        t -= qd * newt;
        std::swap(t, newt);
        r -= qd * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("fpmat: element not invertible");
    return ((t % p) + p) % p;
}

}  // namespace

std::int64_t FpMat::det() const {
    std::vector<std::int64_t> a = a_;
    const std::int64_t p = p_;
    std::int64_t d = 1;
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (a[static_cast<std::size_t>(r) * n_ + c] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n_; ++j) std::swap(a[static_cast<std::size_t>(piv) * n_ + j], a[static_cast<std::size_t>(c) * n_ + j]);
            d = (p - d) % p;
        }
        std::int64_t pv = a[static_cast<std::size_t>(c) * n_ + c] % p;
        d = d * pv % p;
        std::int64_t inv = mod_inverse(pv, p);
        for (int r = c + 1; r < n_; ++r) {
            std::int64_t f = a[static_cast<std::size_t>(r) * n_ + c] % p * inv % p;
            if (!f) continue;
            for (int j = c; j < n_; ++j) {
                auto& x = a[static_cast<std::size_t>(r) * n_ + j];
                x = ((x - f * a[static_cast<std::size_t>(c) * n_ + j]) % p + p) % p;
            }
        }
    }
    return d;
}

std::optional<FpMat> FpMat::inverse() const {
    const std::int64_t p = p_;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n_) * 2 * n_, 0);
    auto at2 = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * 2 * n_ + j]; };
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) at2(i, j) = at(i, j);
        at2(i, n_ + i) = 1;
    }
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (at2(r, c) % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < 2 * n_; ++j) std::swap(at2(piv, j), at2(c, j));
        std::int64_t inv = mod_inverse(at2(c, c), p);
        for (int j = 0; j < 2 * n_; ++j) at2(c, j) = at2(c, j) * inv % p;
        for (int r = 0; r < n_; ++r) {
            if (r == c) continue;
            std::int64_t f = at2(r, c) % p;
            if (!f) continue;
            for (int j = 0; j < 2 * n_; ++j) at2(r, j) = ((at2(r, j) - f * at2(c, j)) % p + p) % p;
        }
    }
    FpMat out(p_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(i, j, at2(i, n_ + j));
    return out;
}

std::string FpMat::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << '[';
        for (int j = 0; j < n_; ++j) {
            if (j) os << ',';
            os << at(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

const FpMat& Representation::image(Gen g) const {
    auto it = images.find(g);
    if (it == images.end())
        throw std::invalid_argument("representation: no image for generator '" + gen_name(g) + "'");
    return it->second;
}

FpMat Representation::eval(const GroupWord& w) const {
    FpMat acc = FpMat::identity(modulus, degree);
    for (const Letter& l : w.letters()) {
        const FpMat& img = image(l.gen);
        FpMat base = img;
        if (l.exp < 0) {
            auto inv = img.inverse();
            if (!inv) throw std::domain_error("representation: image of '" + gen_name(l.gen) + "' not invertible");
            base = *inv;
        }
        for (std::int32_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) acc = acc * base;
    }
    return acc;
}

void Representation::validate_basic() const {
    for (auto& [g, m] : images) {
        if (m.modulus() != modulus || m.dim() != degree)
            throw std::invalid_argument("representation: inconsistent matrix shape for '" + gen_name(g) + "'");
        if (!m.invertible())
            throw std::invalid_argument("representation: image of '" + gen_name(g) + "' is singular");
    }
    if (has_image(gen_s()) && has_image(gen_q()) && !image(gen_s()).commutes_with(image(gen_q())))
        throw std::invalid_argument("representation: images of s and q do not commute");
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::int64_t parse_int(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("representation: expected integer");
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
}

void expect(std::string_view s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw std::invalid_argument(std::string("representation: expected '") + c + "'");
    ++i;
}

}  // namespace

Representation Representation::parse(std::string_view text) {
    Representation rep;
    bool saw_p = false, saw_n = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        std::size_t i = 0;
        skip_ws(line, i);
        if (i >= line.size() || line[i] == '#') continue;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '=') ++j;
        std::string name(line.substr(i, j - i));
        i = j;
        expect(line, i, '=');
        if (name == "p") {
            std::int64_t p = parse_int(line, i);
            if (p < 2) throw std::invalid_argument("representation: modulus must be a prime >= 2");
            rep.modulus = static_cast<std::uint32_t>(p);
            saw_p = true;
        } else if (name == "n") {
            std::int64_t n = parse_int(line, i);
            if (n < 1) throw std::invalid_argument("representation: degree must be >= 1");
            rep.degree = static_cast<int>(n);
            saw_n = true;
        } else {
            if (!saw_p || !saw_n)
                throw std::invalid_argument("representation: p and n must precede generator matrices");
            FpMat m(rep.modulus, rep.degree);
            expect(line, i, '[');
            for (int r = 0; r < rep.degree; ++r) {
                if (r) expect(line, i, ',');
                expect(line, i, '[');
                for (int c = 0; c < rep.degree; ++c) {
                    if (c) expect(line, i, ',');
                    m.set(r, c, parse_int(line, i));
                }
                expect(line, i, ']');
            }
            expect(line, i, ']');
            if (!rep.images.emplace(gen_id(name), m).second)
                throw std::invalid_argument("representation: duplicate matrix for '" + name + "'");
        }
    }
    if (!saw_p || !saw_n || rep.images.empty())
        throw std::invalid_argument("representation: file must define p, n and at least one generator");
    rep.validate_basic();
    return rep;
}

std::string Representation::to_string() const {
    std::ostringstream os;
    os << "p = " << modulus << "\n" << "n = " << degree << "\n";
    for (auto& [g, m] : images) os << gen_name(g) << " = " << m.to_string() << "\n";
    return os.str();
}

PolyMatrix omega_eval(const GroupRingElem& e, const Representation& rho, std::span<const Gen> meridians) {
    const CoeffRing ring = CoeffRing::prime_field(rho.modulus);
    const int n = rho.degree;
    PolyMatrix out(n, n, ring);
    for (auto& [w, c] : e.terms()) {
        FpMat m = rho.eval(w);
        LaurentPoly mono = abelian_eval_word(w, meridians, ring) * LaurentPoly::constant(c, ring);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.at(i, j)) out.at(i, j) += mono * LaurentPoly::constant(m.at(i, j), ring);
    }
    return out;
}

PolyMatrix omega_one_minus(Gen g, const Representation& rho, std::span<const Gen> meridians) {
    GroupRingElem e = GroupRingElem::one() - GroupRingElem::of_word(GroupWord::generator(g));
    return omega_eval(e, rho, meridians);
}

std::vector<PolyMatrix> omega_fox_row(const GroupWord& w, std::span<const Gen> cols,
                                      const Representation& rho, std::span<const Gen> meridians) {
    const CoeffRing ring = CoeffRing::prime_field(rho.modulus);
    const int n = rho.degree;
    std::vector<PolyMatrix> row(cols.size(), PolyMatrix(n, n, ring));
    const Gen s = gen_s(), q = gen_q();
    Exp3 prefix_alpha{};
    FpMat prefix_rho = FpMat::identity(rho.modulus, n);
    auto add_term = [&](PolyMatrix& target, const FpMat& m, const Exp3& e, int sign) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.at(i, j))
                    target.at(i, j) += LaurentPoly::monomial(sign * m.at(i, j), e, ring);
    };
    for (const Letter& l : w.letters()) {
        Exp3 g{};
        if (l.gen == s)
            g.s = 1;
        else if (l.gen == q)
            g.q = 1;
        else if (std::find(meridians.begin(), meridians.end(), l.gen) != meridians.end())
            g.t = 1;
        else
            throw std::invalid_argument("omega_fox_row: generator '" + gen_name(l.gen) +
                                        "' is not a meridian and not s, q");
        const FpMat img = rho.image(l.gen);
        const FpMat img_used = l.exp < 0 ? *img.inverse() : img;
        auto col = std::find(cols.begin(), cols.end(), l.gen);
        if (col != cols.end()) {
            PolyMatrix& target = row[static_cast<std::size_t>(col - cols.begin())];
            FpMat acc = prefix_rho;
            if (l.exp > 0) {
                for (std::int32_t i = 0; i < l.exp; ++i) {
                    add_term(target, acc, prefix_alpha + g * i, 1);
                    acc = acc * img;
                }
            } else {
                FpMat inv = img_used;
                FpMat acc2 = prefix_rho;
                for (std::int32_t i = 1; i <= -l.exp; ++i) {
                    acc2 = acc2 * inv;
                    add_term(target, acc2, prefix_alpha + g * (-i), -1);
                }
            }
        }
        for (std::int32_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) prefix_rho = prefix_rho * img_used;
        prefix_alpha = prefix_alpha + g * l.exp;
    }
    return row;
}

}  // namespace valex
