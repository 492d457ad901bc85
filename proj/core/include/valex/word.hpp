#pragma once

// Freely reduced words on named generators. Generator names are interned
// process-wide; the names "s" and "q" are reserved for the two commuting
// auxiliary generators and are never meridians.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace valex {

using Gen = std::uint32_t;

Gen gen_id(std::string_view name);
const std::string& gen_name(Gen g);
bool gen_reserved(Gen g);  // true for "s" and "q"

inline Gen gen_s() { return gen_id("s"); }
inline Gen gen_q() { return gen_id("q"); }

struct Letter {
    Gen gen = 0;
    std::int32_t exp = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

class GroupWord {
  public:
    GroupWord() = default;

    static GroupWord generator(Gen g, std::int32_t exp = 1);

    // Grammar: whitespace-separated tokens `name`, `name^-1`, `name^<int>`.
    // Every generator must belong to `context`.
    static GroupWord parse(std::string_view text, std::span<const Gen> context);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const;  // total letter count, exponents unrolled

    GroupWord& append(Gen g, std::int32_t exp);  // free reduction on the fly
    GroupWord operator*(const GroupWord& o) const;
    GroupWord inverse() const;

    // Normal form in the free product <x_1,...> * <s,q | [s,q]>: every maximal
    // run of s/q letters is rewritten as s^a q^b. Braid automorphism images
    // live in this quotient; presentations keep plain free words so that the
    // [s,q] relator stays a genuine relator.
    GroupWord normalize_sq() const;

    std::string to_string() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

  private:
    std::vector<Letter> letters_;
};

}  // namespace valex
