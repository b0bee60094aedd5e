#include "litnet/coexpress.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "litnet/strutil.hpp"

namespace litnet {

ExpressionMatrix ingest_expression(std::istream& in) {
    ExpressionMatrix matrix;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("expression file: empty");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') line.erase(0, 1);
    auto header = split(line, '\t');
    if (header.size() < 5) {
        throw std::runtime_error("expression file: need >= 3 sample columns");
    }
    matrix.sample_ids.assign(header.begin() + 2, header.end());
    std::size_t n_samples = matrix.sample_ids.size();

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != n_samples + 2) {
            throw std::runtime_error("expression file line " +
                                     std::to_string(lineno) + ": ragged row");
        }
        std::vector<double> row;
        row.reserve(n_samples);
        bool ok = !fields[0].empty() && !fields[1].empty();
        for (std::size_t i = 2; ok && i < fields.size(); ++i) {
            std::string cell = trim(fields[i]);
            if (cell.empty()) {
                ok = false;
                break;
            }
            std::size_t consumed = 0;
            double v;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                ok = false;
                break;
            }
            if (consumed != cell.size() || !std::isfinite(v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            ++matrix.dropped_rows;
            continue;
        }
        matrix.probe_ids.push_back(fields[0]);
        matrix.entity_ids.push_back(fields[1]);
        matrix.values.push_back(std::move(row));
    }
    return matrix;
}

ExpressionMatrix ingest_expression_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open expression file: " + path);
    return ingest_expression(in);
}

namespace {
// The r = 1.00 bucket tolerates floating-point shortfall from exact 1.
double effective_cut(double threshold) {
    return threshold >= 1.0 ? 1.0 - 1e-9 : threshold;
}
}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 3) throw std::invalid_argument("pearson: need >= 3 samples");
    std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    double nn = static_cast<double>(n);
    double var_x = sxx - sx * sx / nn;
    double var_y = syy - sy * sy / nn;
    if (var_x <= 0.0 || var_y <= 0.0) {
        throw std::domain_error("pearson: zero variance");
    }
    double r = (sxy - sx * sy / nn) / std::sqrt(var_x * var_y);
    return std::clamp(r, -1.0, 1.0);
}

CoexpressionResult coexpression_network(const ExpressionMatrix& matrix,
                                        double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("coexpression_network: threshold must be in (0,1]");
    }
    std::size_t n_probes = matrix.values.size();

    std::vector<bool> constant(n_probes, false);
    for (std::size_t i = 0; i < n_probes; ++i) {
        const auto& row = matrix.values[i];
        constant[i] = std::all_of(row.begin(), row.end(),
                                  [&](double v) { return v == row.front(); });
    }

    CoexpressionResult result;
    std::map<PairKey, double> best;  // entity pair -> qualifying r, max |r|
    for (std::size_t i = 0; i + 1 < n_probes; ++i) {
        for (std::size_t j = i + 1; j < n_probes; ++j) {
            if (matrix.entity_ids[i] == matrix.entity_ids[j]) continue;
            if (constant[i] || constant[j]) {
                ++result.skipped_zero_variance;
                continue;
            }
            double r;
            try {
                r = pearson(matrix.values[i], matrix.values[j]);
            } catch (const std::domain_error&) {
                ++result.skipped_zero_variance;
                continue;
            }
            if (std::abs(r) < effective_cut(threshold)) continue;
            PairKey key(matrix.entity_ids[i], matrix.entity_ids[j]);
            auto [it, inserted] = best.try_emplace(key, r);
            if (!inserted && std::abs(r) > std::abs(it->second)) it->second = r;
        }
    }
    result.edges.reserve(best.size());
    for (const auto& [pair, r] : best) result.edges.push_back({pair, r});
    return result;
}

std::vector<SweepRow> threshold_sweep(const std::vector<CorrelationEdge>& edges,
                                      const EdgeSet& reference, double start,
                                      double stop, double step) {
    if (!(start < stop)) throw std::invalid_argument("sweep: start must be < stop");
    if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be > 0");
    int lo = static_cast<int>(std::lround(start * 100.0));
    int hi = static_cast<int>(std::lround(stop * 100.0));
    int inc = static_cast<int>(std::lround(step * 100.0));
    if (inc < 1) throw std::invalid_argument("sweep: step below 0.01 grid");

    std::vector<SweepRow> rows;
    for (int h = lo; h <= hi; h += inc) {
        double threshold = h / 100.0;
        double cut = effective_cut(threshold);
        SweepRow row{threshold, 0, 0};
        for (const auto& edge : edges) {
            if (std::abs(edge.r) >= cut) {
                ++row.n_correlations;
                if (reference.contains(edge.pair)) ++row.n_in_reference;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {
std::size_t count_entities(const std::vector<std::vector<CorrelationEdge>>& networks) {
    std::unordered_set<std::string> entities;
    for (const auto& net : networks) {
        for (const auto& edge : net) {
            entities.insert(edge.pair.a);
            entities.insert(edge.pair.b);
        }
    }
    return entities.size();
}
}  // namespace

EdgeSet intersect_networks(const std::vector<std::vector<CorrelationEdge>>& networks) {
    if (networks.size() < 2) {
        throw std::invalid_argument("intersect_networks: need >= 2 networks");
    }
    EdgeSet out(count_entities(networks));
    for (const auto& edge : networks.front()) {
        bool everywhere = true;
        for (std::size_t i = 1; everywhere && i < networks.size(); ++i) {
            everywhere = std::any_of(networks[i].begin(), networks[i].end(),
                                     [&](const CorrelationEdge& e) {
                                         return e.pair == edge.pair;
                                     });
        }
        if (everywhere) out.insert(edge.pair);
    }
    return out;
}

std::vector<CorrelationEdge> hypothesis_set(const std::vector<CorrelationEdge>& edges,
                                            const EdgeSet& reference) {
    std::vector<CorrelationEdge> out;
    for (const auto& edge : edges) {
        if (!reference.contains(edge.pair)) out.push_back(edge);
    }
    std::sort(out.begin(), out.end(),
              [](const CorrelationEdge& x, const CorrelationEdge& y) {
                  double ax = std::abs(x.r), ay = std::abs(y.r);
                  if (ax != ay) return ax > ay;
                  return x.pair < y.pair;
              });
    return out;
}

std::vector<Hypothesis> ranked_hypotheses(
    const std::vector<std::vector<CorrelationEdge>>& networks,
    const EdgeSet& reference) {
    if (networks.empty()) {
        throw std::invalid_argument("ranked_hypotheses: need >= 1 network");
    }
    std::map<PairKey, std::vector<std::pair<std::size_t, double>>> seen;
    for (std::size_t i = 0; i < networks.size(); ++i) {
        for (const auto& edge : networks[i]) seen[edge.pair].emplace_back(i, edge.r);
    }
    std::vector<Hypothesis> out;
    for (const auto& [pair, hits] : seen) {
        if (hits.size() != networks.size()) continue;  // must appear in every dataset
        if (reference.contains(pair)) continue;
        Hypothesis h{pair, std::vector<double>(networks.size(), 0.0), 1.0};
        for (const auto& [i, r] : hits) {
            h.r_per_dataset[i] = r;
            h.min_abs_r = std::min(h.min_abs_r, std::abs(r));
        }
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Hypothesis& x, const Hypothesis& y) {
        if (x.min_abs_r != y.min_abs_r) return x.min_abs_r > y.min_abs_r;
        return x.pair < y.pair;
    });
    return out;
}

std::vector<CorrelationEdge> read_correlations(std::istream& in) {
    std::map<PairKey, double> first;  // keep-first across (a,b)/(b,a) duplicates
    std::vector<PairKey> order;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
            fields[0] == fields[1]) {
            throw std::runtime_error("correlation file: bad line: " + line);
        }
        PairKey key(fields[0], fields[1]);
        double r = std::stod(fields[2]);
        if (std::abs(r) > 1.0 + 1e-12) {
            throw std::runtime_error("correlation file: |r| > 1: " + line);
        }
        if (first.try_emplace(key, r).second) order.push_back(key);
    }
    std::vector<CorrelationEdge> out;
    out.reserve(order.size());
    for (const auto& key : order) out.push_back({key, first.at(key)});
    return out;
}

std::vector<CorrelationEdge> read_correlations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open correlation file: " + path);
    return read_correlations(in);
}

void write_correlations(const std::vector<CorrelationEdge>& edges,
                        std::ostream& out) {
    out << "#entity_a\tentity_b\tr\n";
    char buf[32];
    for (const auto& edge : edges) {
        std::snprintf(buf, sizeof buf, "%.6f", edge.r);
        out << edge.pair.a << '\t' << edge.pair.b << '\t' << buf << '\n';
    }
}

void write_correlations_file(const std::vector<CorrelationEdge>& edges,
                             const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write correlation file: " + path);
    write_correlations(edges, out);
}

void write_sweep_report(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "#threshold\tn_correlations\tn_in_reference\tpercentage\n";
    char tbuf[16], pbuf[16];
    for (const auto& row : rows) {
        std::snprintf(tbuf, sizeof tbuf, "%.2f", row.threshold);
        out << tbuf << '\t' << row.n_correlations << '\t' << row.n_in_reference
            << '\t';
        if (auto pct = row.percentage()) {
            std::snprintf(pbuf, sizeof pbuf, "%.3f", *pct);
            out << pbuf;
        }
        out << '\n';
    }
}

void write_sweep_report_file(const std::vector<SweepRow>& rows,
                             const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write sweep report: " + path);
    write_sweep_report(rows, out);
}

void write_sweep_curve(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "#threshold\tpercentage\n";
    char tbuf[16], pbuf[16];
    for (const auto& row : rows) {
        std::snprintf(tbuf, sizeof tbuf, "%.2f", row.threshold);
        out << tbuf << '\t';
        if (auto pct = row.percentage()) {
            std::snprintf(pbuf, sizeof pbuf, "%.3f", *pct);
            out << pbuf;
        }
        out << '\n';
    }
}

void write_sweep_curve_file(const std::vector<SweepRow>& rows,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write curve file: " + path);
    write_sweep_curve(rows, out);
}

}  // namespace litnet
