#include "valex/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace valex {

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("corpus: cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

UnitGroup parse_units(const std::string& tag, int degree) {
    if (tag == "full") return UnitGroup::full_monomial();
    if (tag == "st") return UnitGroup::st_quarter();
    if (tag == "tmono") return UnitGroup::twisted_monomial(degree);
    if (tag == "tst") return UnitGroup::twisted_st(degree);
    throw std::invalid_argument("corpus: unknown unit group tag '" + tag + "'");
}

CorpusEntry parse_entry(const std::filesystem::path& file) {
    CorpusEntry entry;
    std::istringstream in(slurp(file));
    std::string line;
    struct PendingExpect {
        std::string invariant, units, poly;
    };
    std::vector<PendingExpect> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "name") {
            ls >> entry.name;
        } else if (key == "provenance") {
            ls >> entry.provenance;
        } else if (key == "pres") {
            std::string fn;
            while (ls >> fn) entry.presentations.push_back(Presentation::parse(slurp(file.parent_path() / fn)));
        } else if (key == "braid") {
            std::string fn;
            ls >> fn;
            entry.braid = BraidWord::parse(slurp(file.parent_path() / fn));
        } else if (key == "rep") {
            std::string fn;
            ls >> fn;
            entry.representation = Representation::parse(slurp(file.parent_path() / fn));
        } else if (key == "expect") {
            PendingExpect pe;
            ls >> pe.invariant >> pe.units;
            std::getline(ls, pe.poly);
            pending.push_back(std::move(pe));
        } else {
            throw std::invalid_argument("corpus: unknown key '" + key + "' in " + file.string());
        }
    }
    if (entry.name.empty()) throw std::invalid_argument("corpus: entry without name in " + file.string());
    for (const auto& pe : pending) {
        Expectation ex;
        ex.invariant = pe.invariant;
        int degree = entry.representation ? entry.representation->degree : 1;
        ex.units = parse_units(pe.units, degree);
        CoeffRing ring = (pe.units == "tmono" || pe.units == "tst") && entry.representation
                             ? CoeffRing::prime_field(entry.representation->modulus)
                             : CoeffRing::integers();
        ex.value = LaurentPoly::parse(pe.poly, ring);
        entry.expectations.push_back(std::move(ex));
    }
    return entry;
}

}  // namespace

Corpus Corpus::load(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw std::invalid_argument("corpus: data directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& de : std::filesystem::directory_iterator(dir))
        if (de.path().extension() == ".entry") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    Corpus c;
    for (const auto& f : files) c.entries_.push_back(parse_entry(f));
    return c;
}

const CorpusEntry& Corpus::lookup(std::string_view name) const {
    for (const CorpusEntry& e : entries_)
        if (e.name == name) return e;
    throw std::invalid_argument("corpus: unknown entry '" + std::string(name) + "'");
}

std::string verify_expectation(const CorpusEntry& entry, const Expectation& exp) {
    auto mismatch = [&](const LaurentPoly& got, const std::string& what) -> std::string {
        if (equal_up_to_units(got, exp.value, exp.units)) return {};
        return entry.name + " " + exp.invariant + " (" + what + "): got " + got.to_string() + ", expected " +
               exp.value.to_string() + " up to " + exp.units.name() + " units";
    };
    std::string err;
    if (exp.invariant == "h") {
        for (const Presentation& p : entry.presentations) {
            err = mismatch(h_poly(p).value, "presentation route");
            if (!err.empty()) return err;
        }
        if (entry.braid) {
            err = mismatch(h_poly(*entry.braid).value, "braid route");
            if (!err.empty()) return err;
        }
        if (entry.presentations.empty() && !entry.braid) return entry.name + ": no input for h";
        return {};
    }
    if (exp.invariant == "hnorm") {
        if (!entry.braid) return entry.name + ": hnorm needs a braid input";
        return mismatch(normalized_h(*entry.braid).value, "braid route");
    }
    if (exp.invariant == "delta0" || exp.invariant == "delta1") {
        int level = exp.invariant == "delta1" ? 1 : 0;
        if (entry.presentations.empty()) return entry.name + ": " + exp.invariant + " needs a presentation";
        for (const Presentation& p : entry.presentations) {
            err = mismatch(delta_ell(p, level).delta, "presentation route");
            if (!err.empty()) return err;
        }
        return {};
    }
    if (exp.invariant == "htwisted") {
        if (!entry.representation) return entry.name + ": htwisted needs a representation";
        for (const Presentation& p : entry.presentations) {
            err = mismatch(twisted_h(p, *entry.representation).value, "presentation route");
            if (!err.empty()) return err;
        }
        if (entry.braid) {
            err = mismatch(twisted_h(*entry.braid, *entry.representation).value, "braid route");
            if (!err.empty()) return err;
        }
        return {};
    }
    return entry.name + ": unknown invariant id '" + exp.invariant + "'";
}

}  // namespace valex
