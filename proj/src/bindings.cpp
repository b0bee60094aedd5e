#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "litnet/coexpress.hpp"
#include "litnet/cooccur.hpp"
#include "litnet/corpus.hpp"
#include "litnet/interactions.hpp"
#include "litnet/netops.hpp"

namespace py = pybind11;
using namespace litnet;

namespace {

std::vector<CorrelationEdge> edges_from_tuples(
    const std::vector<std::tuple<std::string, std::string, double>>& rows) {
    std::vector<CorrelationEdge> out;
    out.reserve(rows.size());
    for (const auto& [a, b, r] : rows) out.push_back({PairKey(a, b), r});
    return out;
}

std::vector<std::tuple<std::string, std::string, double>> edges_to_tuples(
    const std::vector<CorrelationEdge>& edges) {
    std::vector<std::tuple<std::string, std::string, double>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.pair.a, e.pair.b, e.r);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "literature co-occurrence and co-expression network toolkit";

    py::class_<EdgeSet>(m, "EdgeSet")
        .def(py::init<std::size_t>(), py::arg("universe") = 0)
        .def_property_readonly("universe", &EdgeSet::universe)
        .def("__len__", &EdgeSet::size)
        .def("insert",
             [](EdgeSet& self, const std::string& a, const std::string& b) {
                 return self.insert(PairKey(a, b));
             })
        .def("contains",
             [](const EdgeSet& self, const std::string& a, const std::string& b) {
                 return self.contains(PairKey(a, b));
             })
        .def("edges",
             [](const EdgeSet& self) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& e : self.edges()) out.emplace_back(e.a, e.b);
                 return out;
             })
        .def("__eq__", [](const EdgeSet& a, const EdgeSet& b) { return a == b; });

    py::class_<OccurrenceIndex>(m, "OccurrenceIndex")
        .def_property_readonly("total_abstracts", &OccurrenceIndex::total_abstracts)
        .def_property_readonly("entity_count", &OccurrenceIndex::entity_count)
        .def("occurrence_count", &OccurrenceIndex::occurrence_count)
        .def("posting", &OccurrenceIndex::posting)
        .def("save", &OccurrenceIndex::save_file, py::arg("path"))
        .def_static("load", &OccurrenceIndex::load_file, py::arg("path"));

    py::class_<CooccurrenceRecord>(m, "CooccurrenceRecord")
        .def_property_readonly("a", [](const CooccurrenceRecord& r) { return r.pair.a; })
        .def_property_readonly("b", [](const CooccurrenceRecord& r) { return r.pair.b; })
        .def_readonly("c_ab", &CooccurrenceRecord::c_ab)
        .def_readonly("n_a", &CooccurrenceRecord::n_a)
        .def_readonly("n_b", &CooccurrenceRecord::n_b)
        .def_readonly("big_n", &CooccurrenceRecord::big_n)
        .def_readonly("lambda_", &CooccurrenceRecord::lambda);

    py::class_<CooccurrenceTable>(m, "CooccurrenceTable")
        .def_readonly("records", &CooccurrenceTable::records)
        .def_readonly("universe", &CooccurrenceTable::universe)
        .def_readonly("total_abstracts", &CooccurrenceTable::total_abstracts)
        .def("save", &write_cooccurrence_table_file, py::arg("path"))
        .def_static("load", &read_cooccurrence_table_file, py::arg("path"));

    m.def(
        "build_index",
        [](const std::string& corpus_path, const std::string& lexicon_path,
           unsigned threads) {
            Corpus corpus = ingest_corpus_file(corpus_path);
            Lexicon lexicon = ingest_lexicon_file(lexicon_path);
            return build_index(corpus, lexicon, threads);
        },
        py::arg("corpus_path"), py::arg("lexicon_path"), py::arg("threads") = 1,
        "Build an occurrence index from corpus and lexicon TSV files.");

    m.def(
        "build_index_from_records",
        [](const std::vector<std::pair<std::string, std::string>>& abstracts,
           const std::vector<std::pair<std::string, std::vector<std::string>>>& lexicon,
           unsigned threads) {
            Corpus corpus;
            for (const auto& [doc_id, text] : abstracts) corpus.add({doc_id, text});
            Lexicon lex;
            for (const auto& [entity, patterns] : lexicon) lex.add(entity, patterns);
            return build_index(corpus, lex, threads);
        },
        py::arg("abstracts"), py::arg("lexicon"), py::arg("threads") = 1,
        "Build an index from in-memory (doc_id, text) and (entity, patterns) lists.");

    m.def("cooccurrence_count", &cooccurrence_count, py::arg("index"), py::arg("a"),
          py::arg("b"));
    m.def("build_cooccurrence_table", &build_cooccurrence_table, py::arg("index"),
          py::arg("threads") = 1);

    m.def("poisson_lambda", &poisson_lambda, py::arg("n_a"), py::arg("n_b"),
          py::arg("big_n"));
    m.def("poisson_pmf", &poisson_pmf, py::arg("lambda_"), py::arg("x"));
    m.def("poisson_threshold", &poisson_threshold, py::arg("lambda_"), py::arg("prob"));

    m.def("k_mention_network", &k_mention_network, py::arg("table"), py::arg("k"));
    m.def("poisson_network", &poisson_network, py::arg("table"), py::arg("prob"));

    m.def("edge_universe_size", &edge_universe_size, py::arg("n"));
    m.def("read_sif", [](const std::string& path) { return read_sif_file(path).edges; },
          py::arg("path"));
    m.def("write_sif", &write_sif_file, py::arg("edges"), py::arg("path"));

    m.def(
        "pearson",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return pearson(x, y);
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "threshold_sweep",
        [](const std::vector<std::tuple<std::string, std::string, double>>& edges,
           const EdgeSet& reference, double start, double stop, double step) {
            auto rows = threshold_sweep(edges_from_tuples(edges), reference, start,
                                        stop, step);
            std::vector<std::tuple<double, std::size_t, std::size_t,
                                   std::optional<double>>>
                out;
            for (const auto& row : rows) {
                out.emplace_back(row.threshold, row.n_correlations,
                                 row.n_in_reference, row.percentage());
            }
            return out;
        },
        py::arg("edges"), py::arg("reference"), py::arg("start") = 0.75,
        py::arg("stop") = 1.00, py::arg("step") = 0.01);

    m.def(
        "hypothesis_set",
        [](const std::vector<std::tuple<std::string, std::string, double>>& edges,
           const EdgeSet& reference) {
            return edges_to_tuples(hypothesis_set(edges_from_tuples(edges), reference));
        },
        py::arg("edges"), py::arg("reference"));

    m.def(
        "intersect_networks",
        [](const std::vector<std::vector<std::tuple<std::string, std::string, double>>>&
               networks) {
            std::vector<std::vector<CorrelationEdge>> nets;
            nets.reserve(networks.size());
            for (const auto& n : networks) nets.push_back(edges_from_tuples(n));
            return intersect_networks(nets);
        },
        py::arg("networks"));

    m.def("read_correlations",
          [](const std::string& path) {
              return edges_to_tuples(read_correlations_file(path));
          },
          py::arg("path"));
}
