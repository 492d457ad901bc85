#include "doctest.h"

#include "valex/corpus.hpp"

using namespace valex;

#ifndef VALEX_DATA_DIR
#error "VALEX_DATA_DIR must point at the corpus directory"
#endif

TEST_CASE("corpus loads and lookup works") {
    Corpus c = Corpus::load(VALEX_DATA_DIR);
    CHECK(c.entries().size() == 13);
    const CorpusEntry& tre = c.lookup("2.1");
    CHECK(tre.presentations.size() == 3);
    CHECK(tre.braid.has_value());
    CHECK(tre.provenance == "published-input");
    const CorpusEntry& kish = c.lookup("kishino");
    CHECK(kish.provenance == "derived-input");
    CHECK_THROWS_AS(c.lookup("9.99"), std::invalid_argument);
}

TEST_CASE("every corpus expectation replays") {
    Corpus c = Corpus::load(VALEX_DATA_DIR);
    for (const CorpusEntry& e : c.entries()) {
        CHECK(!e.expectations.empty());
        for (const Expectation& exp : e.expectations) {
            std::string err = verify_expectation(e, exp);
            INFO(err);
            CHECK(err.empty());
        }
    }
}
