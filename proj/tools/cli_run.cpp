#include "cli_run.hpp"

#include "valex/corpus.hpp"
#include "valex/invariants.hpp"
#include "valex/repsearch.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace valex::cli {

namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --braid accepts a file name or an inline word
BraidWord load_braid(const std::string& spec) {
    if (std::filesystem::exists(spec)) return BraidWord::parse(slurp(spec));
    return BraidWord::parse(spec);
}

Presentation load_pres(const std::string& path) { return Presentation::parse(slurp(path)); }

json result_json(const InvariantResult& r, const char* invariant) {
    json j;
    j["invariant"] = invariant;
    j["value"] = r.value.to_string();
    j["unitGroup"] = r.unit_group.name();
    j["pipeline"] = r.pipeline == Pipeline::BraidRoute ? "braid" : "presentation";
    j["fingerprint"] = r.fingerprint;
    return j;
}

void print_result(std::ostream& out, const InvariantResult& r, const char* invariant, bool as_json) {
    if (as_json) {
        out << result_json(r, invariant).dump() << "\n";
    } else {
        out << "(canonical) " << r.value.to_string() << "\n";
    }
}

json bound_json(const BoundReport& b) {
    json j;
    j["qWidth"] = b.profile.width;
    j["degQ"] = b.profile.deg_q;
    j["degQinv"] = b.profile.deg_q_inv;
    j["twistDegree"] = b.twist_degree;
    j["informative"] = b.informative;
    if (b.lower_bound)
        j["lowerBound"] = *b.lower_bound;
    else
        j["lowerBound"] = nullptr;
    j["normalized"] = b.from_normalized;
    return j;
}

struct MoveStep {
    std::string description;
    bool ok = true;
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact virtual Alexander invariant toolkit"};
    app.require_subcommand(1);

    std::string braid_spec, pres_path, rep_path, data_dir, which;
    int level = 0;
    std::size_t pos = 0;
    std::uint64_t seed = 1;
    int moves = 20, strands = 3, deg = 2;
    std::uint32_t modulus = 2;
    bool as_json = false, normalized = false, use_gl = false, dedupe = false;

    auto* alex = app.add_subcommand("alex", "virtual Alexander polynomial H(s,t,q)");
    alex->add_option("--pres", pres_path);
    alex->add_option("--braid", braid_spec);
    alex->add_flag("--json", as_json);

    auto* norm = app.add_subcommand("normalized", "normalized invariant of a braid closure");
    norm->add_option("--braid", braid_spec)->required();
    norm->add_flag("--json", as_json);

    auto* ideals = app.add_subcommand("ideals", "higher elementary-ideal invariants");
    ideals->add_option("--pres", pres_path);
    ideals->add_option("--braid", braid_spec);
    ideals->add_option("--level", level)->required();
    ideals->add_flag("--json", as_json);

    auto* twisted = app.add_subcommand("twisted", "twisted invariant for a finite-field representation");
    twisted->add_option("--pres", pres_path);
    twisted->add_option("--braid", braid_spec);
    twisted->add_option("--rep", rep_path)->required();
    twisted->add_flag("--normalized", normalized);
    twisted->add_flag("--json", as_json);

    auto* bounds = app.add_subcommand("bounds", "virtual crossing number lower bounds");
    bounds->add_option("--pres", pres_path);
    bounds->add_option("--braid", braid_spec);
    bounds->add_option("--rep", rep_path);
    bounds->add_flag("--normalized", normalized);
    bounds->add_flag("--json", as_json);

    auto* skein = app.add_subcommand("skein", "verify the skein identity at a classical letter");
    skein->add_option("--braid", braid_spec)->required();
    skein->add_option("--pos", pos, "1-based letter position")->required();
    skein->add_flag("--json", as_json);

    auto* fuzz = app.add_subcommand("markov-fuzz", "seeded random Markov-move script with factor checks");
    fuzz->add_option("--braid", braid_spec);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--moves", moves);
    fuzz->add_option("--strands", strands);

    auto* search = app.add_subcommand("rep-search", "enumerate finite-field representations");
    search->add_option("--pres", pres_path)->required();
    search->add_option("--p", modulus);
    search->add_option("--n", deg);
    search->add_flag("--gl", use_gl);
    search->add_flag("--dedupe", dedupe);
    search->add_flag("--json", as_json);

    auto* quot = app.add_subcommand("quotient", "welded / extended / quandle specialization");
    quot->add_option("--pres", pres_path)->required();
    quot->add_option("--which", which)->required()->check(CLI::IsMember({"welded", "extended", "quandle"}));

    auto* table = app.add_subcommand("table", "replay every corpus expected value");
    table->add_option("--data", data_dir);
    table->add_flag("--json", as_json);

    std::vector<const char*> argv;
    argv.push_back("valex");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto need_one_input = [&]() {
        if (pres_path.empty() == braid_spec.empty())
            throw std::invalid_argument("exactly one of --pres and --braid is required");
    };

    try {
        if (alex->parsed()) {
            need_one_input();
            InvariantResult r = pres_path.empty() ? h_poly(load_braid(braid_spec)) : h_poly(load_pres(pres_path));
            print_result(out, r, "h", as_json);
            return 0;
        }
        if (norm->parsed()) {
            print_result(out, normalized_h(load_braid(braid_spec)), "hnorm", as_json);
            return 0;
        }
        if (ideals->parsed()) {
            need_one_input();
            Presentation p = pres_path.empty() ? closure_presentation(load_braid(braid_spec)) : load_pres(pres_path);
            IdealReport rep = delta_ell(p, level);
            if (as_json) {
                json j;
                j["level"] = rep.level;
                j["minorSize"] = rep.minor_size;
                json gens = json::array();
                for (const LaurentPoly& g : rep.generators) gens.push_back(g.to_string());
                j["generators"] = gens;
                j["delta"] = rep.delta.to_string();
                out << j.dump() << "\n";
            } else {
                out << "level " << rep.level << ", minors of size " << rep.minor_size << ", "
                    << rep.generators.size() << " generator(s)\n";
                out << "Delta^" << rep.level << " = " << rep.delta.to_string() << "\n";
            }
            return 0;
        }
        if (twisted->parsed()) {
            need_one_input();
            Representation rho = Representation::parse(slurp(rep_path));
            InvariantResult r;
            if (normalized) {
                if (braid_spec.empty())
                    throw std::invalid_argument("--normalized requires a braid input");
                r = normalized_twisted_h(load_braid(braid_spec), rho);
            } else if (pres_path.empty()) {
                r = twisted_h(load_braid(braid_spec), rho);
            } else {
                r = twisted_h(load_pres(pres_path), rho);
            }
            print_result(out, r, normalized ? "hnorm-twisted" : "h-twisted", as_json);
            return 0;
        }
        if (bounds->parsed()) {
            need_one_input();
            InvariantResult r;
            if (!rep_path.empty()) {
                Representation rho = Representation::parse(slurp(rep_path));
                if (normalized)
                    r = normalized_twisted_h(load_braid(braid_spec), rho);
                else if (pres_path.empty())
                    r = twisted_h(load_braid(braid_spec), rho);
                else
                    r = twisted_h(load_pres(pres_path), rho);
            } else if (normalized) {
                r = normalized_h(load_braid(braid_spec));
            } else {
                r = pres_path.empty() ? h_poly(load_braid(braid_spec)) : h_poly(load_pres(pres_path));
            }
            BoundReport b = crossing_bounds(r);
            if (as_json) {
                out << bound_json(b).dump() << "\n";
            } else {
                if (!b.informative) {
                    out << "no information (polynomial is zero)\n";
                } else {
                    out << "q-width " << b.profile.width << ", deg_q " << b.profile.deg_q << ", deg_q^-1 "
                        << b.profile.deg_q_inv << ", twist degree " << b.twist_degree << "\n";
                    out << "v(K) >= " << *b.lower_bound << "\n";
                }
            }
            return 0;
        }
        if (skein->parsed()) {
            if (pos == 0) throw std::invalid_argument("skein: positions are 1-based");
            SkeinReport rep = skein_check(load_braid(braid_spec), pos - 1);
            if (as_json) {
                json j;
                j["position"] = pos;
                j["holds"] = rep.holds;
                j["plus"] = rep.plus.to_string();
                j["minus"] = rep.minus.to_string();
                j["zero"] = rep.zero.to_string();
                out << j.dump() << "\n";
            } else {
                out << "H_+ = " << rep.plus.to_string() << "\n";
                out << "H_- = " << rep.minus.to_string() << "\n";
                out << "H_0 = " << rep.zero.to_string() << "\n";
                out << (rep.holds ? "identity holds\n" : "identity FAILS\n");
            }
            return rep.holds ? 0 : 1;
        }
        if (fuzz->parsed()) {
            std::mt19937_64 rng(seed);
            BraidWord cur;
            if (!braid_spec.empty()) {
                cur = load_braid(braid_spec);
            } else {
                cur.strands = strands;
                std::uniform_int_distribution<int> kind(0, 2);
                std::uniform_int_distribution<int> idx(1, strands - 1);
                for (int i = 0; i < 6; ++i) {
                    int kk = kind(rng);
                    cur.letters.push_back({kk == 0   ? BraidLetter::Kind::Sigma
                                           : kk == 1 ? BraidLetter::Kind::SigmaInv
                                                     : BraidLetter::Kind::Tau,
                                           idx(rng)});
                }
            }
            const CoeffRing ring = CoeffRing::integers();
            const LaurentPoly st = LaurentPoly::monomial(1, {1, 1, 0}, ring);
            const LaurentPoly st_inv = LaurentPoly::monomial(1, {-1, -1, 0}, ring);
            auto raw_det = [](const BraidWord& b) {
                return det(burau(b) - PolyMatrix::identity(b.strands, CoeffRing::integers()));
            };
            LaurentPoly current = raw_det(cur);
            std::vector<std::string> script;
            for (int step = 0; step < moves; ++step) {
                std::uniform_int_distribution<int> pick(0, 5);
                int mv = pick(rng);
                LaurentPoly predicted = current;
                BraidWord next = cur;
                std::string desc;
                switch (mv) {
                    case 0: {  // conjugation
                        std::uniform_int_distribution<int> kind(0, 2);
                        std::uniform_int_distribution<int> idx(1, cur.strands - 1);
                        BraidWord g;
                        g.strands = cur.strands;
                        int kk = kind(rng);
                        if (cur.strands > 1)
                            g.letters.push_back({kk == 0   ? BraidLetter::Kind::Sigma
                                                 : kk == 1 ? BraidLetter::Kind::SigmaInv
                                                           : BraidLetter::Kind::Tau,
                                                 idx(rng)});
                        next = markov_move(cur, MarkovMove::conjugate(g));
                        desc = "conjugate by " + g.to_string();
                        break;
                    }
                    case 1:
                        next = markov_move(cur, MarkovMove::stab(MarkovMove::Kind::StabVirtual));
                        predicted = -current;
                        desc = "virtual stabilization";
                        break;
                    case 2:
                        next = markov_move(cur, MarkovMove::stab(MarkovMove::Kind::StabPositive));
                        predicted = -current;
                        desc = "positive stabilization";
                        break;
                    case 3:
                        next = markov_move(cur, MarkovMove::stab(MarkovMove::Kind::StabNegative));
                        predicted = -(st * current);
                        desc = "negative stabilization";
                        break;
                    case 4: {  // destabilize when the tail allows it
                        bool done = false;
                        for (auto k : {MarkovMove::Kind::DestabVirtual, MarkovMove::Kind::DestabPositive,
                                       MarkovMove::Kind::DestabNegative}) {
                            try {
                                next = markov_move(cur, MarkovMove::stab(k));
                                predicted = k == MarkovMove::Kind::DestabNegative ? -(st_inv * current) : -current;
                                desc = "destabilization";
                                done = true;
                                break;
                            } catch (const std::invalid_argument&) {
                            }
                        }
                        if (!done) {
                            next = markov_move(cur, MarkovMove::stab(MarkovMove::Kind::StabVirtual));
                            predicted = -current;
                            desc = "virtual stabilization (no destab applicable)";
                        }
                        break;
                    }
                    case 5: {  // right exchange with the current word as the alpha part
                        std::uniform_int_distribution<int> kind(0, 2);
                        std::uniform_int_distribution<int> idx(1, cur.strands - 1);
                        BraidWord beta;
                        beta.strands = cur.strands;
                        if (cur.strands > 1) {
                            int kk = kind(rng);
                            beta.letters.push_back({kk == 0   ? BraidLetter::Kind::Sigma
                                                    : kk == 1 ? BraidLetter::Kind::SigmaInv
                                                              : BraidLetter::Kind::Tau,
                                                    idx(rng)});
                        }
                        auto [classical, virt] = exchange_right_pair(cur, beta);
                        predicted = raw_det(classical);
                        next = virt;
                        desc = "right exchange (alpha = current, beta = " + beta.to_string() + ")";
                        break;
                    }
                }
                LaurentPoly actual = raw_det(next);
                script.push_back(desc + " -> " + next.to_string());
                if (!(actual == predicted)) {
                    err << "factor law violated at step " << step << " (" << desc << ")\n";
                    err << "script so far:\n";
                    for (const std::string& s : script) err << "  " << s << "\n";
                    err << "expected " << predicted.to_string() << "\n";
                    err << "actual   " << actual.to_string() << "\n";
                    return 1;
                }
                cur = next;
                current = actual;
                if (cur.strands > 6) {  // keep the matrices small over long scripts
                    cur = braid_spec.empty() ? BraidWord{strands, {}} : load_braid(braid_spec);
                    current = raw_det(cur);
                }
            }
            out << "ok: " << moves << " moves verified (seed " << seed << ")\n";
            return 0;
        }
        if (search->parsed()) {
            Presentation p = load_pres(pres_path);
            RepSearchTarget target{modulus, deg, !use_gl};
            RepSearchOptions opts;
            opts.dedupe_conjugation = dedupe;
            if (const char* cap = std::getenv("VALEX_REPSEARCH_CAP")) opts.cap = std::strtoull(cap, nullptr, 10);
            std::vector<Representation> reps = enumerate_reps(p, target, opts);
            std::vector<Gen> order = p.all_generators();
            if (as_json) {
                json j = json::array();
                for (const Representation& r : reps) {
                    json one;
                    for (Gen g : order) one[gen_name(g)] = r.image(g).to_string();
                    j.push_back(one);
                }
                out << j.dump() << "\n";
            } else {
                out << reps.size() << " representation(s) into " << (use_gl ? "GL" : "SL") << "(" << deg
                    << ", F_" << modulus << ")\n";
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    out << "# " << (i + 1) << "\n";
                    for (Gen g : order) out << gen_name(g) << " = " << reps[i].image(g).to_string() << "\n";
                }
            }
            return 0;
        }
        if (quot->parsed()) {
            Presentation p = load_pres(pres_path);
            QuotientKind kind = which == "welded"     ? QuotientKind::Welded
                                : which == "extended" ? QuotientKind::Extended
                                                      : QuotientKind::Quandle;
            Presentation q = quotient_specialize(p, kind);
            out << "# generators:";
            for (Gen g : q.all_generators()) out << ' ' << gen_name(g);
            out << "\n" << q.to_string();
            return 0;
        }
        if (table->parsed()) {
            std::filesystem::path dir;
            if (!data_dir.empty())
                dir = data_dir;
            else if (const char* env = std::getenv("VALEX_DATA_DIR"))
                dir = env;
            else
                dir = "data/corpus";
            Corpus corpus = Corpus::load(dir);
            int failures = 0;
            json jout = json::array();
            for (const CorpusEntry& e : corpus.entries()) {
                for (const Expectation& exp : e.expectations) {
                    std::string mismatch = verify_expectation(e, exp);
                    if (as_json) {
                        json j;
                        j["entry"] = e.name;
                        j["invariant"] = exp.invariant;
                        j["ok"] = mismatch.empty();
                        if (!mismatch.empty()) j["detail"] = mismatch;
                        jout.push_back(j);
                    } else if (mismatch.empty()) {
                        out << "ok " << e.name << " " << exp.invariant << "\n";
                    } else {
                        out << "MISMATCH " << mismatch << "\n";
                    }
                    if (!mismatch.empty()) ++failures;
                }
            }
            if (as_json) out << jout.dump() << "\n";
            if (failures) {
                err << failures << " corpus mismatch(es)\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "consistency violation: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace valex::cli
