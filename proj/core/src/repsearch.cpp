#include "valex/repsearch.hpp"

#include <algorithm>

namespace valex {

std::vector<FpMat> target_elements(const RepSearchTarget& target) {
    const int n = target.n;
    const std::uint32_t p = target.p;
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    std::vector<FpMat> out;
    std::vector<std::int64_t> entries(cells, 0);
    while (true) {
        FpMat m(p, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, entries[static_cast<std::size_t>(i) * n + j]);
        std::int64_t d = m.det();
        if (target.special_linear ? d == 1 : d != 0) out.push_back(std::move(m));
        // odometer over entries, most significant first
        std::size_t k = cells;
        while (k > 0) {
            --k;
            if (++entries[k] < p) break;
            entries[k] = 0;
            if (k == 0) return out;
        }
    }
}

std::vector<Representation> enumerate_reps(const Presentation& p, const RepSearchTarget& target,
                                           const RepSearchOptions& opts) {
    p.validate();
    std::vector<FpMat> elems = target_elements(target);
    std::vector<Gen> gens = p.all_generators();
    // cap check: |target|^(#generators)
    double total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total *= static_cast<double>(elems.size());
    if (total > static_cast<double>(opts.cap))
        throw std::invalid_argument("rep-search: assignment space exceeds the cap (" +
                                    std::to_string(opts.cap) + ")");

    std::vector<GroupWord> rels = p.all_relators();
    // relator i becomes checkable once all its generators are assigned; record
    // the latest generator position it depends on
    std::vector<std::size_t> ready_at(rels.size(), 0);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const Letter& l : rels[r].letters())
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                if (gens[gi] == l.gen) ready_at[r] = std::max(ready_at[r], gi);

    std::vector<Representation> out;
    Representation cur;
    cur.modulus = target.p;
    cur.degree = target.n;

    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == gens.size()) {
            Representation rep = cur;
            for (const GroupWord& r : rels) rep.verified_relators.push_back(r.to_string());
            out.push_back(std::move(rep));
            return;
        }
        for (const FpMat& e : elems) {
            cur.images[gens[gi]] = e;
            bool ok = true;
            if (gens[gi] == gen_s() || gens[gi] == gen_q()) {
                if (cur.has_image(gen_s()) && cur.has_image(gen_q()) &&
                    !cur.image(gen_s()).commutes_with(cur.image(gen_q())))
                    ok = false;
            }
            for (std::size_t r = 0; ok && r < rels.size(); ++r)
                if (ready_at[r] == gi && !cur.eval(rels[r]).is_identity()) ok = false;
            if (ok) self(self, gi + 1);
        }
        cur.images.erase(gens[gi]);
    };
    rec(rec, 0);

    if (opts.dedupe_conjugation) {
        RepSearchTarget gl{target.p, target.n, false};
        std::vector<FpMat> conjugators = target_elements(gl);
        auto key = [&](const Representation& r) {
            std::string k;
            for (Gen g : gens) k += r.image(g).to_string();
            return k;
        };
        std::vector<Representation> kept;
        std::vector<std::string> seen;
        for (const Representation& r : out) {
            std::string best = key(r);
            for (const FpMat& c : conjugators) {
                auto cinv = c.inverse();
                Representation conj = r;
                for (auto& [g, m] : conj.images) m = c * m * *cinv;
                best = std::min(best, key(conj));
            }
            if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
                seen.push_back(best);
                kept.push_back(r);
            }
        }
        out = std::move(kept);
    }
    return out;
}

CompatibilityVerdict check_braid_compatible(const BraidWord& b, const Representation& rho) {
    rho.validate_basic();
    CompatibilityVerdict v;
    std::vector<Gen> xs = strand_generators(b.strands);
    for (Gen g : xs)
        if (!rho.has_image(g))
            throw std::invalid_argument("check_braid_compatible: missing image for " + gen_name(g));
    std::vector<GroupWord> imgs = fundamental_action_all(b);
    for (int i = 0; i < b.strands; ++i)
        if (!(rho.eval(imgs[i]) == rho.image(xs[i]))) v.failing_strands.push_back(i + 1);
    v.compatible = v.failing_strands.empty();
    return v;
}

Representation extend_for_stabilization(const Representation& rho, int strands, MarkovMove::Kind stab_kind) {
    Gen xk = gen_id("x" + std::to_string(strands));
    Gen xk1 = gen_id("x" + std::to_string(strands + 1));
    GroupWord w;
    switch (stab_kind) {
        case MarkovMove::Kind::StabVirtual:
            w.append(gen_q(), -1).append(xk, 1).append(gen_q(), 1);
            break;
        case MarkovMove::Kind::StabPositive:
        case MarkovMove::Kind::StabNegative:
            w.append(gen_s(), -1).append(xk, 1).append(gen_s(), 1);
            break;
        default:
            throw std::invalid_argument("extend_for_stabilization: not a stabilization kind");
    }
    Representation out = rho;
    out.images[xk1] = rho.eval(w);
    return out;
}

}  // namespace valex
