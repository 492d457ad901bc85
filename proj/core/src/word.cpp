#include "valex/word.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace valex {

namespace {

struct InternTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, Gen> ids;

    InternTable() {
        names = {"s", "q"};
        ids = {{"s", 0u}, {"q", 1u}};
    }
};

InternTable& table() {
    static InternTable t;
    return t;
}

}  // namespace

Gen gen_id(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
    auto& t = table();
    std::scoped_lock lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
    Gen g = static_cast<Gen>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), g);
    return g;
}

const std::string& gen_name(Gen g) {
    auto& t = table();
    std::scoped_lock lock(t.mu);
    if (g >= t.names.size()) throw std::out_of_range("unknown generator id");
    return t.names[g];
}

bool gen_reserved(Gen g) { return g <= 1; }

GroupWord GroupWord::generator(Gen g, std::int32_t exp) {
    GroupWord w;
    w.append(g, exp);
    return w;
}

GroupWord& GroupWord::append(Gen g, std::int32_t exp) {
    if (exp == 0) return *this;
    if (!letters_.empty() && letters_.back().gen == g) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return *this;
    }
    letters_.push_back({g, exp});
    return *this;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    GroupWord out = *this;
    for (const Letter& l : o.letters_) out.append(l.gen, l.exp);
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->gen, -it->exp);
    return out;
}

GroupWord GroupWord::normalize_sq() const {
    const Gen s = gen_s(), q = gen_q();
    GroupWord cur = *this;
    while (true) {
        GroupWord next;
        std::int32_t run_s = 0, run_q = 0;
        bool in_run = false;
        auto flush = [&] {
            if (!in_run) return;
            next.append(s, run_s);
            next.append(q, run_q);
            run_s = run_q = 0;
            in_run = false;
        };
        for (const Letter& l : cur.letters_) {
            if (l.gen == s || l.gen == q) {
                in_run = true;
                (l.gen == s ? run_s : run_q) += l.exp;
            } else {
                flush();
                next.append(l.gen, l.exp);
            }
        }
        flush();
        if (next == cur) return next;
        cur = std::move(next);
    }
}

std::size_t GroupWord::length() const {
    std::size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

GroupWord GroupWord::parse(std::string_view text, std::span<const Gen> context) {
    GroupWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view tok = text.substr(i, j - i);
        i = j;
        std::string_view name = tok;
        std::int32_t exp = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            name = tok.substr(0, caret);
            std::string_view es = tok.substr(caret + 1);
            if (es.empty()) throw std::invalid_argument("word: malformed exponent in '" + std::string(tok) + "'");
            bool neg = es[0] == '-';
            std::size_t k = neg || es[0] == '+' ? 1 : 0;
            if (k >= es.size()) throw std::invalid_argument("word: malformed exponent in '" + std::string(tok) + "'");
            long v = 0;
            for (; k < es.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(es[k])))
                    throw std::invalid_argument("word: malformed exponent in '" + std::string(tok) + "'");
                v = v * 10 + (es[k] - '0');
            }
            exp = static_cast<std::int32_t>(neg ? -v : v);
        }
        if (name.empty()) throw std::invalid_argument("word: empty generator name");
        Gen g = gen_id(name);
        if (std::find(context.begin(), context.end(), g) == context.end())
            throw std::invalid_argument("word: unknown generator '" + std::string(name) + "'");
        out.append(g, exp);
    }
    return out;
}

std::string GroupWord::to_string() const {
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ' ';
        out += gen_name(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

}  // namespace valex
