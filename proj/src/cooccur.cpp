#include "litnet/cooccur.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "litnet/strutil.hpp"

namespace litnet {

std::uint64_t cooccurrence_count(const OccurrenceIndex& index,
                                 const std::string& a, const std::string& b) {
    const auto& pa = index.posting(a);
    const auto& pb = index.posting(b);
    std::uint64_t count = 0;
    auto ia = pa.begin();
    auto ib = pb.begin();
    while (ia != pa.end() && ib != pb.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

double poisson_lambda(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t big_n) {
    if (big_n == 0) throw std::invalid_argument("poisson_lambda: N must be >= 1");
    if (n_a > big_n || n_b > big_n) {
        throw std::invalid_argument("poisson_lambda: marginal exceeds N");
    }
    return static_cast<double>(n_a) * static_cast<double>(n_b) /
           static_cast<double>(big_n);
}

double poisson_pmf(double lambda, int x) {
    if (lambda < 0.0) throw std::invalid_argument("poisson_pmf: lambda < 0");
    if (x < 0) throw std::invalid_argument("poisson_pmf: x < 0");
    if (lambda == 0.0) return x == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + x * std::log(lambda) - std::lgamma(x + 1.0));
}

int poisson_threshold(double lambda, double prob) {
    if (lambda < 0.0) throw std::invalid_argument("poisson_threshold: lambda < 0");
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::invalid_argument("poisson_threshold: prob must be in (0,1)");
    }
    double cumulative = 0.0;
    int x = 0;
    // well past the mass for any prob < 1
    int limit = static_cast<int>(std::ceil(lambda + 40.0 * std::sqrt(lambda + 1.0))) + 2;
    while (x < limit) {
        cumulative += poisson_pmf(lambda, x);
        ++x;
        if (cumulative >= prob) return x;
    }
    return x;
}

namespace {

// Doc-wise pair counting over a range of documents.
void count_range(const std::vector<std::vector<std::uint32_t>>& doc_entities,
                 std::size_t begin, std::size_t end,
                 std::unordered_map<std::uint64_t, std::uint64_t>& counts) {
    for (std::size_t d = begin; d < end; ++d) {
        const auto& ents = doc_entities[d];
        for (std::size_t i = 0; i + 1 < ents.size(); ++i) {
            for (std::size_t j = i + 1; j < ents.size(); ++j) {
                std::uint64_t key =
                    (static_cast<std::uint64_t>(ents[i]) << 32) | ents[j];
                ++counts[key];
            }
        }
    }
}

}  // namespace

CooccurrenceTable build_cooccurrence_table(const OccurrenceIndex& index,
                                           unsigned threads) {
    // Entity ids in canonical (sorted) order; postings() is an ordered map.
    std::vector<const std::string*> entity_ids;
    std::vector<const std::vector<std::string>*> postings;
    entity_ids.reserve(index.entity_count());
    for (const auto& [entity, docs] : index.postings()) {
        entity_ids.push_back(&entity);
        postings.push_back(&docs);
    }

    // Invert postings into per-document sorted entity index lists.
    std::unordered_map<std::string, std::uint32_t> doc_slot;
    std::vector<std::vector<std::uint32_t>> doc_entities;
    for (std::uint32_t e = 0; e < entity_ids.size(); ++e) {
        for (const auto& doc : *postings[e]) {
            auto [it, inserted] = doc_slot.try_emplace(doc, doc_entities.size());
            if (inserted) doc_entities.emplace_back();
            doc_entities[it->second].push_back(e);
        }
    }

    unsigned n_threads = std::max(1u, threads);
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(1, doc_entities.size())));
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(n_threads);
    if (n_threads == 1) {
        count_range(doc_entities, 0, doc_entities.size(), partial[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (doc_entities.size() + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(doc_entities.size(), begin + chunk);
            pool.emplace_back(count_range, std::cref(doc_entities), begin, end,
                              std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
    }

    std::unordered_map<std::uint64_t, std::uint64_t> counts = std::move(partial[0]);
    for (unsigned t = 1; t < n_threads; ++t) {
        for (const auto& [key, c] : partial[t]) counts[key] += c;
    }

    CooccurrenceTable table;
    table.universe = index.entity_count();
    table.total_abstracts = index.total_abstracts();
    table.records.reserve(counts.size());
    for (const auto& [key, c] : counts) {
        std::uint32_t i = static_cast<std::uint32_t>(key >> 32);
        std::uint32_t j = static_cast<std::uint32_t>(key & 0xffffffffu);
        std::uint64_t n_a = postings[i]->size();
        std::uint64_t n_b = postings[j]->size();
        table.records.push_back({PairKey(*entity_ids[i], *entity_ids[j]), c, n_a,
                                 n_b, table.total_abstracts,
                                 poisson_lambda(n_a, n_b, table.total_abstracts)});
    }
    std::sort(table.records.begin(), table.records.end(),
              [](const CooccurrenceRecord& x, const CooccurrenceRecord& y) {
                  return x.pair < y.pair;
              });
    return table;
}

EdgeSet k_mention_network(const CooccurrenceTable& table, int k) {
    if (k < 1) throw std::invalid_argument("k_mention_network: k must be >= 1");
    EdgeSet edges(table.universe);
    for (const auto& rec : table.records) {
        if (rec.c_ab >= static_cast<std::uint64_t>(k)) edges.insert(rec.pair);
    }
    return edges;
}

EdgeSet poisson_network(const CooccurrenceTable& table, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::invalid_argument("poisson_network: prob must be in (0,1)");
    }
    EdgeSet edges(table.universe);
    for (const auto& rec : table.records) {
        int threshold = poisson_threshold(rec.lambda, prob);
        if (rec.c_ab >= static_cast<std::uint64_t>(threshold)) edges.insert(rec.pair);
    }
    return edges;
}

void write_cooccurrence_table(const CooccurrenceTable& table, std::ostream& out) {
    out << "# cooccurrence-table total_abstracts=" << table.total_abstracts
        << " entities=" << table.universe << '\n';
    char lambda_buf[32];
    for (const auto& rec : table.records) {
        std::snprintf(lambda_buf, sizeof lambda_buf, "%.6f", rec.lambda);
        out << rec.pair.a << '\t' << rec.pair.b << '\t' << rec.c_ab << '\t'
            << rec.n_a << '\t' << rec.n_b << '\t' << lambda_buf << '\n';
    }
}

void write_cooccurrence_table_file(const CooccurrenceTable& table,
                                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table file: " + path);
    write_cooccurrence_table(table, out);
}

CooccurrenceTable read_cooccurrence_table(std::istream& in) {
    CooccurrenceTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t npos = line.find("total_abstracts=");
            std::size_t epos = line.find("entities=");
            if (npos != std::string::npos) {
                table.total_abstracts = std::stoull(line.substr(npos + 16));
            }
            if (epos != std::string::npos) {
                table.universe = std::stoull(line.substr(epos + 9));
            }
            header_seen = true;
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 6) {
            throw std::runtime_error("table file: bad line: " + line);
        }
        std::uint64_t c = std::stoull(fields[2]);
        std::uint64_t n_a = std::stoull(fields[3]);
        std::uint64_t n_b = std::stoull(fields[4]);
        // lambda recomputed from the marginals; the file's %.6f is lossy
        std::uint64_t big_n = table.total_abstracts;
        double lambda = big_n > 0 ? poisson_lambda(n_a, n_b, big_n)
                                  : std::stod(fields[5]);
        table.records.push_back(
            {PairKey(fields[0], fields[1]), c, n_a, n_b, big_n, lambda});
    }
    if (!header_seen) throw std::runtime_error("table file: missing header");
    return table;
}

CooccurrenceTable read_cooccurrence_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return read_cooccurrence_table(in);
}

}  // namespace litnet
