#include "litnet/interactions.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "litnet/strutil.hpp"

namespace litnet {

VerbMap default_verb_map() {
    return {
        {"binding", {"bind", "binds", "bound", "binding"}},
        {"activation", {"activate", "activates", "activated", "activating"}},
    };
}

SvoTable ingest_svo(std::istream& in) {
    SvoTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 3 || fields.size() > 4 || trim(fields[0]).empty() ||
            trim(fields[1]).empty() || trim(fields[2]).empty()) {
            ++table.skipped;
            continue;
        }
        table.triples.push_back({fields[0], fields[1], fields[2],
                                 fields.size() == 4 ? fields[3] : std::string()});
    }
    return table;
}

SvoTable ingest_svo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open SVO file: " + path);
    return ingest_svo(in);
}

std::vector<TypedInteraction> extract_typed_interactions(const SvoTable& svo,
                                                         const Lexicon& lexicon,
                                                         const VerbMap& verbs) {
    if (verbs.empty()) {
        throw std::invalid_argument("extract_typed_interactions: empty verb map");
    }
    std::map<std::pair<PairKey, std::string>, std::size_t> support;
    for (const auto& triple : svo.triples) {
        std::string verb = normalize_text(triple.verb);
        const std::string* kind = nullptr;
        for (const auto& [k, forms] : verbs) {
            if (forms.count(verb)) {
                kind = &k;
                break;
            }
        }
        if (!kind) continue;
        std::string subj = lexicon.match_field(triple.subject);
        std::string obj = lexicon.match_field(triple.object);
        if (subj.empty() || obj.empty() || subj == obj) continue;
        ++support[{PairKey(subj, obj), *kind}];
    }
    std::vector<TypedInteraction> out;
    out.reserve(support.size());
    for (const auto& [key, count] : support) {
        out.push_back({key.first, key.second, count});
    }
    return out;
}

double ConcordanceStats::coverage_pct() const {
    return 100.0 * static_cast<double>(annotated_edges) /
           static_cast<double>(total_edges);
}

AnnotatedNetwork annotate_network(const EdgeSet& edges,
                                  const std::vector<TypedInteraction>& interactions) {
    std::map<PairKey, std::vector<std::string>> kinds_by_pair;
    AnnotatedNetwork net;
    net.stats.total_edges = edges.size();
    for (const auto& interaction : interactions) {
        auto& counter = net.stats.per_kind[interaction.kind];
        ++counter.second;
        if (edges.contains(interaction.pair)) {
            ++counter.first;
            kinds_by_pair[interaction.pair].push_back(interaction.kind);
        }
    }
    for (const auto& pair : edges.edges()) {
        AnnotatedEdge edge{pair, {}};
        auto it = kinds_by_pair.find(pair);
        if (it != kinds_by_pair.end()) {
            edge.kinds = it->second;
            std::sort(edge.kinds.begin(), edge.kinds.end());
            ++net.stats.annotated_edges;
        }
        net.edges.push_back(std::move(edge));
    }
    return net;
}

void write_annotated_sif(const AnnotatedNetwork& network, std::ostream& out) {
    for (const auto& edge : network.edges) {
        out << edge.pair.a << "\tpp\t" << edge.pair.b << '\t';
        for (std::size_t i = 0; i < edge.kinds.size(); ++i) {
            if (i) out << ',';
            out << edge.kinds[i];
        }
        out << '\n';
    }
}

void write_annotated_sif_file(const AnnotatedNetwork& network,
                              const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write annotated SIF: " + path);
    write_annotated_sif(network, out);
}

void write_concordance_report(const ConcordanceStats& stats, std::ostream& out) {
    out << "#row\tkind\tfound\ttotal\tpercentage\n";
    char buf[32];
    for (const auto& [kind, counts] : stats.per_kind) {
        out << "concordance\t" << kind << '\t' << counts.first << '\t'
            << counts.second << '\t';
        if (counts.second > 0) {
            std::snprintf(buf, sizeof buf, "%.2f",
                          100.0 * static_cast<double>(counts.first) /
                              static_cast<double>(counts.second));
            out << buf;
        } else {
            out << "n/a";
        }
        out << '\n';
    }
    out << "coverage\tall\t" << stats.annotated_edges << '\t' << stats.total_edges
        << '\t';
    if (stats.total_edges > 0) {
        std::snprintf(buf, sizeof buf, "%.2f", stats.coverage_pct());
        out << buf;
    } else {
        out << "n/a";
    }
    out << '\n';
}

void write_concordance_report_file(const ConcordanceStats& stats,
                                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write concordance report: " + path);
    write_concordance_report(stats, out);
}

}  // namespace litnet
