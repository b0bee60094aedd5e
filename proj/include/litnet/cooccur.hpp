#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "litnet/corpus.hpp"
#include "litnet/netops.hpp"

namespace litnet {

struct CooccurrenceRecord {
    PairKey pair;
    std::uint64_t c_ab;   // abstracts containing both entities
    std::uint64_t n_a;    // marginal count of pair.a
    std::uint64_t n_b;    // marginal count of pair.b
    std::uint64_t big_n;  // corpus size
    double lambda;        // n_a * n_b / N
};

/// Table of every pair with c_ab >= 1, in canonical pair order, with a
/// record of the node universe it was computed over.
struct CooccurrenceTable {
    std::vector<CooccurrenceRecord> records;
    std::size_t universe = 0;        // lexicon entity count
    std::uint64_t total_abstracts = 0;
};

/// |posting(a) ∩ posting(b)| by sorted-list intersection.
std::uint64_t cooccurrence_count(const OccurrenceIndex& index,
                                 const std::string& a, const std::string& b);

/// Enumerates pairs doc-wise (docs -> entities-per-doc -> pairs) so only
/// pairs with a non-empty posting intersection are ever touched.
CooccurrenceTable build_cooccurrence_table(const OccurrenceIndex& index,
                                           unsigned threads = 1);

double poisson_lambda(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t big_n);

/// exp(-lambda) * lambda^x / x!, evaluated in log space.
double poisson_pmf(double lambda, int x);

/// Accumulates the PMF from x = 0 upward until the cumulative mass reaches
/// prob; returns the number of terms consumed. A pair is positive at prob
/// iff c_ab >= this threshold.
int poisson_threshold(double lambda, double prob);

/// Pairs with c_ab >= k.
EdgeSet k_mention_network(const CooccurrenceTable& table, int k);

/// Pairs with c_ab >= poisson_threshold(lambda, prob).
EdgeSet poisson_network(const CooccurrenceTable& table, double prob);

/// TSV: entity_a TAB entity_b TAB c_ab TAB n_a TAB n_b TAB lambda (%.6f),
/// with a single '#' header line carrying universe metadata.
void write_cooccurrence_table(const CooccurrenceTable& table, std::ostream& out);
void write_cooccurrence_table_file(const CooccurrenceTable& table,
                                   const std::string& path);
CooccurrenceTable read_cooccurrence_table(std::istream& in);
CooccurrenceTable read_cooccurrence_table_file(const std::string& path);

}  // namespace litnet
