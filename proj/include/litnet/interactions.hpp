#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "litnet/corpus.hpp"
#include "litnet/netops.hpp"

namespace litnet {

struct SvoTriple {
    std::string subject;
    std::string verb;
    std::string object;
    std::string doc_id;  // optional
};

struct SvoTable {
    std::vector<SvoTriple> triples;
    std::size_t skipped = 0;  // malformed rows
};

/// Undirected typed pair; kind is an open set, "binding" and "activation"
/// by default. support counts witnessing triples.
struct TypedInteraction {
    PairKey pair;
    std::string kind;
    std::size_t support;
};

/// kind -> lowercase verb surface forms
using VerbMap = std::map<std::string, std::set<std::string>>;

/// binding <- {bind, binds, bound, binding};
/// activation <- {activate, activates, activated, activating}
VerbMap default_verb_map();

/// TSV rows: subject TAB verb TAB object [TAB doc_id]. Malformed rows are
/// skipped and counted; an empty file is a valid empty table.
SvoTable ingest_svo(std::istream& in);
SvoTable ingest_svo_file(const std::string& path);

/// A triple yields an interaction when subject and object each match a
/// lexicon pattern as the entire (token-bounded, case-insensitive) field and
/// the lowercased verb belongs to some kind. Direction is dropped;
/// subject == object triples are discarded. Result is sorted by (pair, kind).
std::vector<TypedInteraction> extract_typed_interactions(const SvoTable& svo,
                                                         const Lexicon& lexicon,
                                                         const VerbMap& verbs);

struct AnnotatedEdge {
    PairKey pair;
    std::vector<std::string> kinds;  // sorted, possibly empty
};

struct ConcordanceStats {
    // kind -> (interactions of that kind found among the edges, total)
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_kind;
    std::size_t annotated_edges = 0;
    std::size_t total_edges = 0;

    /// 100 * annotated / total; call only when total_edges > 0.
    double coverage_pct() const;
};

struct AnnotatedNetwork {
    std::vector<AnnotatedEdge> edges;  // same pairs as the input EdgeSet
    ConcordanceStats stats;
};

AnnotatedNetwork annotate_network(const EdgeSet& edges,
                                  const std::vector<TypedInteraction>& interactions);

/// SIF extended with a kind column: a TAB pp TAB b TAB comma-joined kinds
/// (empty field when the edge carries none).
void write_annotated_sif(const AnnotatedNetwork& network, std::ostream& out);
void write_annotated_sif_file(const AnnotatedNetwork& network,
                              const std::string& path);

/// TSV report: one row per kind (found, total, concordance %) plus a
/// coverage row.
void write_concordance_report(const ConcordanceStats& stats, std::ostream& out);
void write_concordance_report_file(const ConcordanceStats& stats,
                                   const std::string& path);

}  // namespace litnet
