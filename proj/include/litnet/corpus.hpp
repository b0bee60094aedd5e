#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace litnet {

struct AbstractRecord {
    std::string doc_id;
    std::string text;
};

/// Deduplicated abstract collection. N = size().
class Corpus {
public:
    /// Keeps the first record per doc_id; duplicates are counted.
    std::size_t add(AbstractRecord record);
    std::size_t size() const { return records_.size(); }
    const std::vector<AbstractRecord>& records() const { return records_; }
    std::size_t duplicates_skipped() const { return duplicates_; }

private:
    std::vector<AbstractRecord> records_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::size_t duplicates_ = 0;
};

struct EntityTerm {
    std::string entity_id;
    std::vector<std::string> patterns;  // normalized, deduplicated
};

/// Entity dictionary. Defines the node universe: entities with zero
/// corpus occurrences are still nodes.
class Lexicon {
public:
    void add(const std::string& entity_id, const std::vector<std::string>& patterns);
    std::size_t size() const { return terms_.size(); }
    const std::vector<EntityTerm>& terms() const { return terms_; }
    bool contains(const std::string& entity_id) const;

    /// Entity whose pattern equals the whole normalized field, or empty
    /// string when no pattern matches.
    std::string match_field(const std::string& field) const;

private:
    std::vector<EntityTerm> terms_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::unordered_map<std::string, std::string> pattern_to_entity_;
};

/// entity -> strictly sorted duplicate-free doc_id posting lists, plus N.
class OccurrenceIndex {
public:
    OccurrenceIndex() = default;
    OccurrenceIndex(std::map<std::string, std::vector<std::string>> postings,
                    std::size_t total_abstracts);

    std::size_t total_abstracts() const { return total_abstracts_; }
    std::size_t entity_count() const { return postings_.size(); }
    bool contains(const std::string& entity_id) const;

    /// Throws on unknown entity_id.
    const std::vector<std::string>& posting(const std::string& entity_id) const;
    std::size_t occurrence_count(const std::string& entity_id) const;

    const std::map<std::string, std::vector<std::string>>& postings() const {
        return postings_;
    }

    /// Flat file: header "# index total_abstracts=N entities=M", then one
    /// line per entity: entity_id TAB comma-joined sorted doc_ids.
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static OccurrenceIndex load(std::istream& in);
    static OccurrenceIndex load_file(const std::string& path);

private:
    std::map<std::string, std::vector<std::string>> postings_;
    std::size_t total_abstracts_ = 0;
};

/// TSV "doc_id TAB text", one record per line. Duplicate doc_ids keep the
/// first occurrence; a warning per duplicate goes to *warnings when given.
/// Throws on a zero-record stream.
Corpus ingest_corpus(std::istream& in, std::ostream* warnings = nullptr);
Corpus ingest_corpus_file(const std::string& path, std::ostream* warnings = nullptr);

/// TSV "entity_id TAB pattern1 [TAB pattern2 ...]".
/// Duplicate entity_id or empty pattern is an error.
Lexicon ingest_lexicon(std::istream& in);
Lexicon ingest_lexicon_file(const std::string& path);

/// Pattern-matching index build: posting(e) holds every doc whose text
/// contains at least one pattern of e under case-insensitive token-bounded
/// matching (whitespace runs collapse to one space first). threads > 1
/// partitions the document set.
OccurrenceIndex build_index(const Corpus& corpus, const Lexicon& lexicon,
                            unsigned threads = 1);

}  // namespace litnet
