#include "valex/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace valex {

std::vector<Gen> Presentation::all_generators() const {
    std::vector<Gen> gens = meridians;
    if (has_s) gens.push_back(gen_s());
    if (has_q) gens.push_back(gen_q());
    return gens;
}

GroupWord Presentation::sq_commutator() const {
    GroupWord w;
    w.append(gen_s(), 1).append(gen_q(), 1).append(gen_s(), -1).append(gen_q(), -1);
    return w;
}

std::vector<GroupWord> Presentation::all_relators() const {
    std::vector<GroupWord> rs = relators;
    if (include_sq_commutator && has_s && has_q) rs.push_back(sq_commutator());
    return rs;
}

void Presentation::validate() const {
    std::vector<Gen> seen;
    for (Gen g : meridians) {
        if (gen_reserved(g))
            throw std::invalid_argument("presentation: '" + gen_name(g) + "' is reserved and cannot be a meridian");
        if (std::find(seen.begin(), seen.end(), g) != seen.end())
            throw std::invalid_argument("presentation: duplicate generator '" + gen_name(g) + "'");
        seen.push_back(g);
    }
    std::vector<Gen> ctx = all_generators();
    for (const GroupWord& r : relators)
        for (const Letter& l : r.letters())
            if (std::find(ctx.begin(), ctx.end(), l.gen) == ctx.end())
                throw std::invalid_argument("presentation: relator uses unknown generator '" + gen_name(l.gen) + "'");
}

Presentation Presentation::parse(std::string_view text) {
    Presentation p;
    std::vector<std::string> rel_lines;
    std::size_t pos = 0;
    bool saw_gens = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        // trim
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("gens", 0) == 0 && (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
            if (saw_gens) throw std::invalid_argument("presentation: repeated gens line");
            saw_gens = true;
            std::istringstream is{std::string(line.substr(4))};
            std::string name;
            while (is >> name) {
                if (name == "s" || name == "q")
                    throw std::invalid_argument("presentation: '" + name + "' is reserved and cannot be declared");
                p.meridians.push_back(gen_id(name));
            }
        } else if (line.rfind("rel", 0) == 0 && (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
            rel_lines.emplace_back(line.substr(3));
        } else if (line == "no-sq-commutator") {
            p.include_sq_commutator = false;
        } else {
            throw std::invalid_argument("presentation: unrecognized line '" + std::string(line) + "'");
        }
    }
    if (!saw_gens) throw std::invalid_argument("presentation: missing gens line");
    std::vector<Gen> ctx = p.all_generators();
    for (const std::string& rl : rel_lines) p.relators.push_back(GroupWord::parse(rl, ctx));
    p.validate();
    return p;
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "gens";
    for (Gen g : meridians) os << ' ' << gen_name(g);
    os << '\n';
    for (const GroupWord& r : relators) os << "rel " << r.to_string() << '\n';
    if (!include_sq_commutator) os << "no-sq-commutator\n";
    return os.str();
}

std::vector<std::vector<GroupRingElem>> jacobian(const Presentation& p) {
    std::vector<Gen> cols = p.all_generators();
    std::vector<GroupWord> rels = p.all_relators();
    std::vector<std::vector<GroupRingElem>> out;
    out.reserve(rels.size());
    for (const GroupWord& r : rels) {
        std::vector<GroupRingElem> row;
        row.reserve(cols.size());
        for (Gen g : cols) row.push_back(fox_derivative(r, g));
        out.push_back(std::move(row));
    }
    return out;
}

AlexanderMatrices alexander_matrices(const Presentation& p) {
    const CoeffRing ring = CoeffRing::integers();
    std::vector<Gen> cols = p.all_generators();
    std::vector<GroupWord> rels = p.all_relators();
    const int nm = static_cast<int>(p.meridians.size());
    const int nr = static_cast<int>(p.relators.size());
    PolyMatrix m(static_cast<int>(rels.size()), static_cast<int>(cols.size()), ring);
    for (int i = 0; i < static_cast<int>(rels.size()); ++i) {
        std::vector<LaurentPoly> row = abelian_fox_row(rels[i], cols, p.meridians, ring);
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) m.at(i, j) = std::move(row[j]);
    }
    // self-check: the [s,q] row must evaluate to (0,...,0, 1-q, s-1)
    if (p.include_sq_commutator && p.has_s && p.has_q) {
        const int last = static_cast<int>(rels.size()) - 1;
        const LaurentPoly one = LaurentPoly::constant(1, ring);
        LaurentPoly expect_s = one - LaurentPoly::var_q(ring);
        LaurentPoly expect_q = LaurentPoly::var_s(ring) - one;
        for (int j = 0; j < nm; ++j)
            if (!m.at(last, j).is_zero()) throw std::logic_error("presentation: [s,q] row self-check failed");
        if (!(m.at(last, nm) == expect_s) || !(m.at(last, nm + 1) == expect_q))
            throw std::logic_error("presentation: [s,q] row self-check failed");
    }
    PolyMatrix a(nr, nm, ring);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nm; ++j) a.at(i, j) = m.at(i, j);
    return {std::move(a), std::move(m)};
}

IdealReport delta_ell(const Presentation& p, int level) {
    if (level < 0) throw std::invalid_argument("delta_ell: level must be >= 0");
    AlexanderMatrices mats = alexander_matrices(p);
    const int g = static_cast<int>(p.all_generators().size());
    const int size = g - 1 - level;
    IdealReport rep;
    rep.level = level;
    rep.minor_size = size;
    if (size <= 0) {
        rep.delta = LaurentPoly::constant(1, CoeffRing::integers());
        rep.generators.push_back(rep.delta);
        return rep;
    }
    if (size > mats.m.rows()) {
        rep.delta = LaurentPoly::zero(CoeffRing::integers());
        return rep;
    }
    rep.generators = minors(mats.m, size, /*dedupe_units=*/true);
    rep.delta = gcd_many(rep.generators);
    return rep;
}

Presentation quotient_specialize(const Presentation& p, QuotientKind which) {
    Gen dead = which == QuotientKind::Quandle ? gen_s() : gen_q();
    Gen replacement = which == QuotientKind::Welded ? gen_s() : 0;
    bool erase = which != QuotientKind::Welded;

    Presentation out;
    out.meridians = p.meridians;
    out.has_s = p.has_s && dead != gen_s();
    out.has_q = p.has_q && dead != gen_q();
    out.include_sq_commutator = false;
    for (const GroupWord& r : p.relators) {
        GroupWord w;
        for (const Letter& l : r.letters()) {
            if (l.gen == dead) {
                if (!erase) w.append(replacement, l.exp);
            } else {
                w.append(l.gen, l.exp);
            }
        }
        if (!w.empty()) out.relators.push_back(std::move(w));
    }
    return out;
}

}  // namespace valex
