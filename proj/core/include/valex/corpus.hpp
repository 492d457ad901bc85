#pragma once

// Embedded fixture corpus: knots with reference inputs (presentations, braid
// words, representations) plus expected invariant values, loaded from a data
// directory of `.entry` manifests at startup.

#include "valex/invariants.hpp"

#include <filesystem>
#include <optional>

namespace valex {

struct Expectation {
    std::string invariant;  // h | hnorm | delta0 | delta1 | htwisted
    UnitGroup units;
    LaurentPoly value;
};

struct CorpusEntry {
    std::string name;
    std::string provenance;  // published-input | derived-input
    std::vector<Presentation> presentations;
    std::optional<BraidWord> braid;
    std::optional<Representation> representation;
    std::vector<Expectation> expectations;
};

class Corpus {
  public:
    static Corpus load(const std::filesystem::path& dir);

    const std::vector<CorpusEntry>& entries() const { return entries_; }
    const CorpusEntry& lookup(std::string_view name) const;

  private:
    std::vector<CorpusEntry> entries_;
};

// Replays one expectation against the pipelines; returns an empty string on
// success and a human-readable mismatch description otherwise.
std::string verify_expectation(const CorpusEntry& entry, const Expectation& exp);

}  // namespace valex
