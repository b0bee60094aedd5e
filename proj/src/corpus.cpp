#include "litnet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "litnet/strutil.hpp"

namespace litnet {

std::size_t Corpus::add(AbstractRecord record) {
    auto [it, inserted] = by_id_.try_emplace(record.doc_id, records_.size());
    if (!inserted) {
        ++duplicates_;
        return it->second;
    }
    records_.push_back(std::move(record));
    return records_.size() - 1;
}

void Lexicon::add(const std::string& entity_id,
                  const std::vector<std::string>& patterns) {
    if (entity_id.empty()) throw std::invalid_argument("lexicon: empty entity_id");
    if (by_id_.count(entity_id)) {
        throw std::invalid_argument("lexicon: duplicate entity_id '" + entity_id + "'");
    }
    EntityTerm term;
    term.entity_id = entity_id;
    for (const auto& raw : patterns) {
        std::string norm = normalize_text(raw);
        if (norm.empty()) {
            throw std::invalid_argument("lexicon: empty pattern for '" + entity_id + "'");
        }
        if (std::find(term.patterns.begin(), term.patterns.end(), norm) ==
            term.patterns.end()) {
            term.patterns.push_back(norm);
        }
    }
    if (term.patterns.empty()) {
        throw std::invalid_argument("lexicon: no patterns for '" + entity_id + "'");
    }
    for (const auto& p : term.patterns) pattern_to_entity_.try_emplace(p, entity_id);
    by_id_.emplace(entity_id, terms_.size());
    terms_.push_back(std::move(term));
}

bool Lexicon::contains(const std::string& entity_id) const {
    return by_id_.count(entity_id) != 0;
}

std::string Lexicon::match_field(const std::string& field) const {
    auto it = pattern_to_entity_.find(normalize_text(field));
    return it == pattern_to_entity_.end() ? std::string() : it->second;
}

OccurrenceIndex::OccurrenceIndex(
    std::map<std::string, std::vector<std::string>> postings,
    std::size_t total_abstracts)
    : postings_(std::move(postings)), total_abstracts_(total_abstracts) {
    for (auto& [entity, docs] : postings_) {
        std::sort(docs.begin(), docs.end());
        docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
        if (docs.size() > total_abstracts_) {
            throw std::invalid_argument("index: posting for '" + entity +
                                        "' exceeds corpus size");
        }
    }
}

bool OccurrenceIndex::contains(const std::string& entity_id) const {
    return postings_.count(entity_id) != 0;
}

const std::vector<std::string>& OccurrenceIndex::posting(
    const std::string& entity_id) const {
    auto it = postings_.find(entity_id);
    if (it == postings_.end()) {
        throw std::out_of_range("index: unknown entity '" + entity_id + "'");
    }
    return it->second;
}

std::size_t OccurrenceIndex::occurrence_count(const std::string& entity_id) const {
    return posting(entity_id).size();
}

void OccurrenceIndex::save(std::ostream& out) const {
    out << "# index total_abstracts=" << total_abstracts_ << " entities="
        << postings_.size() << '\n';
    for (const auto& [entity, docs] : postings_) {
        out << entity << '\t';
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (i) out << ',';
            out << docs[i];
        }
        out << '\n';
    }
}

void OccurrenceIndex::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write index file: " + path);
    save(out);
}

OccurrenceIndex OccurrenceIndex::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("index file: empty");
    std::size_t total = 0;
    {
        std::size_t pos = line.find("total_abstracts=");
        if (line.rfind("# index", 0) != 0 || pos == std::string::npos) {
            throw std::runtime_error("index file: bad header");
        }
        total = std::stoull(line.substr(pos + 16));
    }
    std::map<std::string, std::vector<std::string>> postings;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 2) throw std::runtime_error("index file: bad line: " + line);
        std::vector<std::string> docs;
        if (!fields[1].empty()) docs = split(fields[1], ',');
        if (!postings.emplace(fields[0], std::move(docs)).second) {
            throw std::runtime_error("index file: duplicate entity '" + fields[0] + "'");
        }
    }
    return OccurrenceIndex(std::move(postings), total);
}

OccurrenceIndex OccurrenceIndex::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open index file: " + path);
    return load(in);
}

Corpus ingest_corpus(std::istream& in, std::ostream* warnings) {
    Corpus corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() < 2 || fields[0].empty() || trim(fields[1]).empty()) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     ": expected doc_id TAB text");
        }
        std::size_t before = corpus.duplicates_skipped();
        corpus.add({fields[0], fields[1]});
        if (warnings && corpus.duplicates_skipped() > before) {
            *warnings << "warning: duplicate doc_id '" << fields[0]
                      << "' at line " << lineno << " (kept first)\n";
        }
    }
    if (corpus.size() == 0) throw std::runtime_error("corpus: no records");
    return corpus;
}

Corpus ingest_corpus_file(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return ingest_corpus(in, warnings);
}

Lexicon ingest_lexicon(std::istream& in) {
    Lexicon lexicon;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() < 2 || fields[0].empty()) {
            throw std::runtime_error("lexicon line " + std::to_string(lineno) +
                                     ": expected entity_id TAB pattern...");
        }
        lexicon.add(fields[0], {fields.begin() + 1, fields.end()});
    }
    if (lexicon.size() == 0) throw std::runtime_error("lexicon: no entries");
    return lexicon;
}

Lexicon ingest_lexicon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    return ingest_lexicon(in);
}

namespace {

// entity index -> docs hit, for a contiguous range of corpus records
void scan_range(const Corpus& corpus, const Lexicon& lexicon, std::size_t begin,
                std::size_t end, std::vector<std::vector<std::string>>& hits) {
    const auto& records = corpus.records();
    for (std::size_t d = begin; d < end; ++d) {
        std::string norm = normalize_text(records[d].text);
        const auto& terms = lexicon.terms();
        for (std::size_t e = 0; e < terms.size(); ++e) {
            for (const auto& pat : terms[e].patterns) {
                if (contains_token_bounded(norm, pat)) {
                    hits[e].push_back(records[d].doc_id);
                    break;
                }
            }
        }
    }
}

}  // namespace

OccurrenceIndex build_index(const Corpus& corpus, const Lexicon& lexicon,
                            unsigned threads) {
    if (corpus.size() == 0) throw std::invalid_argument("build_index: empty corpus");
    if (lexicon.size() == 0) throw std::invalid_argument("build_index: empty lexicon");

    std::size_t n_docs = corpus.size();
    unsigned n_threads = std::max(1u, threads);
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, n_docs));

    std::vector<std::vector<std::vector<std::string>>> partial(
        n_threads, std::vector<std::vector<std::string>>(lexicon.size()));

    if (n_threads == 1) {
        scan_range(corpus, lexicon, 0, n_docs, partial[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n_docs + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(n_docs, begin + chunk);
            pool.emplace_back(scan_range, std::cref(corpus), std::cref(lexicon),
                              begin, end, std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
    }

    std::map<std::string, std::vector<std::string>> postings;
    const auto& terms = lexicon.terms();
    for (std::size_t e = 0; e < terms.size(); ++e) {
        std::vector<std::string> docs;
        for (auto& part : partial) {
            docs.insert(docs.end(), part[e].begin(), part[e].end());
        }
        postings.emplace(terms[e].entity_id, std::move(docs));
    }
    return OccurrenceIndex(std::move(postings), n_docs);
}

}  // namespace litnet
