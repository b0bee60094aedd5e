#include <doctest.h>

#include <sstream>

#include "litnet/corpus.hpp"
#include "litnet/strutil.hpp"

using namespace litnet;

TEST_CASE("normalize_text lowercases and collapses whitespace") {
    CHECK(normalize_text("  MAP \t\n kinase  ") == "map kinase");
    CHECK(normalize_text("Insulin") == "insulin");
    CHECK(normalize_text("") == "");
}

TEST_CASE("token-bounded matching") {
    CHECK(contains_token_bounded("insulin binds mapk.", "insulin"));
    CHECK(contains_token_bounded("insulin binds mapk.", "mapk"));
    CHECK_FALSE(contains_token_bounded("storage problems", "rag"));
    CHECK_FALSE(contains_token_bounded("kinases", "kinase"));  // no plural-s allowance
    CHECK(contains_token_bounded("the map kinase pathway", "map kinase"));
    CHECK(contains_token_bounded("il-2 receptor", "il-2"));
}

TEST_CASE("ingest_corpus counts and dedups") {
    SUBCASE("three well-formed records") {
        std::istringstream in("d1\talpha text\nd2\tbeta text\nd3\tgamma text\n");
        Corpus corpus = ingest_corpus(in);
        CHECK(corpus.size() == 3);
        CHECK(corpus.duplicates_skipped() == 0);
    }
    SUBCASE("duplicate doc_id keeps first and warns") {
        std::istringstream in("d1\ta\nd2\tb\nd1\tc\nd3\td\n");
        std::ostringstream warnings;
        Corpus corpus = ingest_corpus(in, &warnings);
        CHECK(corpus.size() == 3);
        CHECK(corpus.duplicates_skipped() == 1);
        CHECK(warnings.str().find("duplicate doc_id 'd1'") != std::string::npos);
        CHECK(corpus.records()[0].text == "a");  // kept first
    }
    SUBCASE("empty stream is an error") {
        std::istringstream in("");
        CHECK_THROWS(ingest_corpus(in));
    }
    SUBCASE("blank text is an error") {
        std::istringstream in("d1\t   \n");
        CHECK_THROWS(ingest_corpus(in));
    }
}

TEST_CASE("ingest_lexicon") {
    SUBCASE("single entry") {
        std::istringstream in("INS\tinsulin\n");
        Lexicon lex = ingest_lexicon(in);
        CHECK(lex.size() == 1);
        CHECK(lex.contains("INS"));
    }
    SUBCASE("empty pattern is an error") {
        std::istringstream in("INS\t\n");
        CHECK_THROWS(ingest_lexicon(in));
    }
    SUBCASE("duplicate entity_id is an error") {
        std::istringstream in("INS\tinsulin\nINS\tproinsulin\n");
        CHECK_THROWS(ingest_lexicon(in));
    }
    SUBCASE("patterns dedup case-insensitively") {
        std::istringstream in("INS\tInsulin\tINSULIN\tinsulin\n");
        Lexicon lex = ingest_lexicon(in);
        CHECK(lex.terms()[0].patterns.size() == 1);
    }
}

namespace {
Corpus two_doc_corpus() {
    Corpus corpus;
    corpus.add({"d1", "Insulin binds MAPK."});
    corpus.add({"d2", "MAPK only."});
    return corpus;
}

Lexicon two_entity_lexicon() {
    Lexicon lex;
    lex.add("insulin", {"insulin"});
    lex.add("MAPK", {"MAPK"});
    return lex;
}
}  // namespace

TEST_CASE("build_index worked example") {
    OccurrenceIndex index = build_index(two_doc_corpus(), two_entity_lexicon());
    CHECK(index.total_abstracts() == 2);
    CHECK(index.posting("insulin") == std::vector<std::string>{"d1"});
    CHECK(index.posting("MAPK") == std::vector<std::string>{"d1", "d2"});
    CHECK(index.occurrence_count("insulin") == 1);
    CHECK(index.occurrence_count("MAPK") == 2);
    CHECK_THROWS_AS(index.occurrence_count("nope"), std::out_of_range);
}

TEST_CASE("entity with no matches has an empty posting") {
    Corpus corpus = two_doc_corpus();
    Lexicon lex;
    lex.add("absent", {"dystrophin"});
    OccurrenceIndex index = build_index(corpus, lex);
    CHECK(index.occurrence_count("absent") == 0);
    CHECK(index.entity_count() == 1);  // lexicon defines the node universe
}

TEST_CASE("plural surface form does not match under the boundary rule") {
    Corpus corpus;
    corpus.add({"d1", "several kinases were assayed"});
    Lexicon lex;
    lex.add("KIN", {"kinase"});
    OccurrenceIndex index = build_index(corpus, lex);
    CHECK(index.occurrence_count("KIN") == 0);
}

TEST_CASE("multi-word pattern matches across wrapped whitespace") {
    Corpus corpus;
    corpus.add({"d1", "the MAP\n   kinase cascade"});
    Lexicon lex;
    lex.add("MAPK", {"map kinase"});
    OccurrenceIndex index = build_index(corpus, lex);
    CHECK(index.occurrence_count("MAPK") == 1);
}

TEST_CASE("repeat mentions contribute one posting entry") {
    Corpus corpus;
    corpus.add({"d1", "insulin insulin insulin"});
    Lexicon lex;
    lex.add("INS", {"insulin"});
    OccurrenceIndex index = build_index(corpus, lex);
    CHECK(index.posting("INS") == std::vector<std::string>{"d1"});
}

TEST_CASE("index build is deterministic and thread-count independent") {
    Corpus corpus;
    for (int d = 0; d < 60; ++d) {
        std::string text = "filler";
        if (d % 3 == 0) text += " insulin";
        if (d % 4 == 0) text += " mapk";
        if (d % 5 == 0) text += " actin beta";
        corpus.add({"d" + std::to_string(d), text});
    }
    Lexicon lex;
    lex.add("INS", {"insulin"});
    lex.add("MAPK", {"mapk"});
    lex.add("ACTB", {"actin beta"});
    OccurrenceIndex one = build_index(corpus, lex, 1);
    OccurrenceIndex four = build_index(corpus, lex, 4);
    CHECK(one.postings() == four.postings());
    CHECK(build_index(corpus, lex, 1).postings() == one.postings());

    for (const auto& [entity, docs] : one.postings()) {
        CHECK(docs.size() <= one.total_abstracts());
    }
}

TEST_CASE("adding an abstract never shrinks a posting") {
    Corpus corpus = two_doc_corpus();
    Lexicon lex = two_entity_lexicon();
    OccurrenceIndex before = build_index(corpus, lex);
    corpus.add({"d3", "more insulin data"});
    OccurrenceIndex after = build_index(corpus, lex);
    for (const auto& [entity, docs] : before.postings()) {
        CHECK(after.posting(entity).size() >= docs.size());
    }
}

TEST_CASE("index save/load round trip") {
    OccurrenceIndex index = build_index(two_doc_corpus(), two_entity_lexicon());
    std::ostringstream out;
    index.save(out);
    std::istringstream in(out.str());
    OccurrenceIndex loaded = OccurrenceIndex::load(in);
    CHECK(loaded.total_abstracts() == index.total_abstracts());
    CHECK(loaded.postings() == index.postings());

    std::ostringstream again;
    loaded.save(again);
    CHECK(again.str() == out.str());
}
