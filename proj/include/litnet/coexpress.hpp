#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "litnet/netops.hpp"

namespace litnet {

/// probe x sample intensity matrix; each probe row carries the entity it
/// maps to (several probes may map to one entity).
struct ExpressionMatrix {
    std::vector<std::string> probe_ids;
    std::vector<std::string> entity_ids;  // parallel to probe_ids
    std::vector<std::string> sample_ids;
    std::vector<std::vector<double>> values;  // one row per probe
    std::size_t dropped_rows = 0;             // rows with gaps/non-numeric cells
};

/// TSV: header "#probe_id TAB entity_id TAB sample1 ...", then one row per
/// probe. Rows with blank or non-numeric cells are dropped and counted.
/// Fewer than 3 samples is an error.
ExpressionMatrix ingest_expression(std::istream& in);
ExpressionMatrix ingest_expression_file(const std::string& path);

/// Product-moment correlation. Throws std::domain_error when either vector
/// has zero variance; lengths must match and be >= 3.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationEdge {
    PairKey pair;
    double r;
};

struct CoexpressionResult {
    std::vector<CorrelationEdge> edges;  // canonical pair order
    std::size_t skipped_zero_variance = 0;
};

/// Entity pairs with |r| >= threshold (inclusive). Probe-level pairs are
/// computed first and collapsed to entity pairs: an edge exists when any
/// probe pair qualifies, keeping the qualifying r of largest magnitude.
/// Same-entity probe pairs are discarded.
CoexpressionResult coexpression_network(const ExpressionMatrix& matrix,
                                        double threshold);

struct SweepRow {
    double threshold;
    std::size_t n_correlations;  // pairs with |r| >= threshold
    std::size_t n_in_reference;
    /// 100 * n_in_reference / n_correlations; empty when n_correlations == 0
    std::optional<double> percentage() const {
        if (n_correlations == 0) return std::nullopt;
        return 100.0 * static_cast<double>(n_in_reference) /
               static_cast<double>(n_correlations);
    }
};

/// One row per threshold on the exact hundredths grid [start, stop]
/// (defaults 0.75..1.00 step 0.01), ascending. Grid values are generated
/// as integer hundredths.
std::vector<SweepRow> threshold_sweep(const std::vector<CorrelationEdge>& edges,
                                      const EdgeSet& reference,
                                      double start = 0.75, double stop = 1.00,
                                      double step = 0.01);

/// Pairs present in every network; requires >= 2 networks. Sign agreement
/// is not required. The result universe is the number of distinct entities
/// across the inputs.
EdgeSet intersect_networks(const std::vector<std::vector<CorrelationEdge>>& networks);

/// Correlation pairs absent from the reference, sorted by descending |r|
/// (ties by pair). The candidate-hypothesis output.
std::vector<CorrelationEdge> hypothesis_set(const std::vector<CorrelationEdge>& edges,
                                            const EdgeSet& reference);

/// Multi-dataset variant: pairs present in all datasets and absent from the
/// reference, ranked by descending minimum |r| across datasets.
struct Hypothesis {
    PairKey pair;
    std::vector<double> r_per_dataset;
    double min_abs_r;
};
std::vector<Hypothesis> ranked_hypotheses(
    const std::vector<std::vector<CorrelationEdge>>& networks,
    const EdgeSet& reference);

/// Correlation file: entity_a TAB entity_b TAB r; duplicate (b,a) rows
/// collapse to one undirected edge, keep-first.
std::vector<CorrelationEdge> read_correlations(std::istream& in);
std::vector<CorrelationEdge> read_correlations_file(const std::string& path);
void write_correlations(const std::vector<CorrelationEdge>& edges, std::ostream& out);
void write_correlations_file(const std::vector<CorrelationEdge>& edges,
                             const std::string& path);

/// Sweep report TSV (threshold, n_correlations, n_in_reference, percentage)
/// and the two-column threshold/percentage curve file.
void write_sweep_report(const std::vector<SweepRow>& rows, std::ostream& out);
void write_sweep_report_file(const std::vector<SweepRow>& rows,
                             const std::string& path);
void write_sweep_curve(const std::vector<SweepRow>& rows, std::ostream& out);
void write_sweep_curve_file(const std::vector<SweepRow>& rows,
                            const std::string& path);

}  // namespace litnet
