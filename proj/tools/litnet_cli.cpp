// litnet command-line front end: ingestion -> indexing -> networks ->
// annotation -> co-expression filtering -> reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "litnet/coexpress.hpp"
#include "litnet/cooccur.hpp"
#include "litnet/corpus.hpp"
#include "litnet/interactions.hpp"
#include "litnet/netops.hpp"
#include "litnet/strutil.hpp"

namespace fs = std::filesystem;
using namespace litnet;

namespace {

std::string resolve(const std::string& out_dir, const std::string& explicit_path,
                    const std::string& default_name) {
    if (!explicit_path.empty()) return explicit_path;
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / default_name).string();
}

void write_kv_report(const std::string& path,
                     const std::vector<std::pair<std::string, std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << "#key\tvalue\n";
    for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
}

VerbMap load_verb_map(const std::string& path) {
    if (path.empty()) return default_verb_map();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open verb map: " + path);
    VerbMap verbs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 2) throw std::runtime_error("verb map: bad line: " + line);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            verbs[fields[0]].insert(normalize_text(fields[i]));
        }
    }
    if (verbs.empty()) throw std::runtime_error("verb map: no entries");
    return verbs;
}

struct Options {
    std::string out_dir = ".";
    unsigned threads = 1;
    unsigned long seed = 1;
};

void add_index(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("index", "build the occurrence index");
    auto corpus = std::make_shared<std::string>();
    auto lexicon = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto summary = std::make_shared<std::string>();
    cmd->add_option("--corpus", *corpus, "corpus TSV (doc_id TAB text)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--lexicon", *lexicon, "lexicon TSV (entity_id TAB patterns...)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", *out, "index file (default <out-dir>/index.tsv)");
    cmd->add_option("--summary", *summary, "summary TSV");
    cmd->callback([&opts, corpus, lexicon, out, summary] {
        Corpus c = ingest_corpus_file(*corpus, &std::cerr);
        Lexicon lex = ingest_lexicon_file(*lexicon);
        OccurrenceIndex index = build_index(c, lex, opts.threads);
        index.save_file(resolve(opts.out_dir, *out, "index.tsv"));
        std::size_t matched = 0, total_postings = 0;
        for (const auto& [entity, docs] : index.postings()) {
            if (!docs.empty()) ++matched;
            total_postings += docs.size();
        }
        write_kv_report(resolve(opts.out_dir, *summary, "index_summary.tsv"),
                        {{"total_abstracts", std::to_string(index.total_abstracts())},
                         {"entities", std::to_string(index.entity_count())},
                         {"entities_with_occurrences", std::to_string(matched)},
                         {"total_postings", std::to_string(total_postings)},
                         {"duplicate_doc_ids", std::to_string(c.duplicates_skipped())}});
    });
}

void add_cooccur(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("cooccur", "materialize the co-occurrence table");
    auto index_path = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--index", *index_path, "index file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", *out, "table TSV (default <out-dir>/cooccur.tsv)");
    cmd->callback([&opts, index_path, out] {
        OccurrenceIndex index = OccurrenceIndex::load_file(*index_path);
        CooccurrenceTable table = build_cooccurrence_table(index, opts.threads);
        write_cooccurrence_table_file(table, resolve(opts.out_dir, *out, "cooccur.tsv"));
    });
}

void add_network(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("network", "classify pairs into a network");
    auto table_path = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto prob = std::make_shared<double>(0.95);
    auto out = std::make_shared<std::string>();
    auto summary = std::make_shared<std::string>();
    cmd->add_option("--table", *table_path, "co-occurrence table TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--method", *method, "k-mention or poisson")
        ->required()
        ->check(CLI::IsMember({"k-mention", "poisson"}));
    cmd->add_option("--k", *k, "mention threshold (k-mention)");
    cmd->add_option("--prob", *prob, "percentile probability (poisson)");
    cmd->add_option("--out", *out, "network SIF (default <out-dir>/network.sif)");
    cmd->add_option("--summary", *summary, "summary TSV");
    cmd->callback([&opts, table_path, method, k, prob, out, summary] {
        CooccurrenceTable table = read_cooccurrence_table_file(*table_path);
        EdgeSet edges;
        std::string label;
        if (*method == "k-mention") {
            edges = k_mention_network(table, *k);
            label = "k-mention:" + std::to_string(*k);
        } else {
            edges = poisson_network(table, *prob);
            char buf[16];
            std::snprintf(buf, sizeof buf, "%.2f", *prob);
            label = std::string("poisson:") + buf;
        }
        write_sif_file(edges, resolve(opts.out_dir, *out, "network.sif"));
        std::ofstream rep(resolve(opts.out_dir, *summary, "network_summary.tsv"));
        if (!rep) throw std::runtime_error("cannot write network summary");
        rep << "#method\tedges\tpct_of_full\n";
        char pct[16];
        std::snprintf(pct, sizeof pct, "%.2f",
                      100.0 * static_cast<double>(edges.size()) /
                          static_cast<double>(edge_universe_size(table.universe)));
        rep << label << '\t' << edges.size() << '\t' << pct << '\n';
    });
}

void add_annotate(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("annotate", "type network edges from SVO triples");
    auto network = std::make_shared<std::string>();
    auto svo = std::make_shared<std::string>();
    auto lexicon = std::make_shared<std::string>();
    auto verbs = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    cmd->add_option("--network", *network, "network SIF")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--svo", *svo, "SVO TSV (subject TAB verb TAB object [TAB doc_id])")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--lexicon", *lexicon, "lexicon TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--verbs", *verbs, "verb map TSV (kind TAB verb...)");
    cmd->add_option("--out", *out, "annotated SIF (default <out-dir>/annotated.sif)");
    cmd->add_option("--report", *report, "concordance report TSV");
    cmd->callback([&opts, network, svo, lexicon, verbs, out, report] {
        SifReadResult sif = read_sif_file(*network);
        SvoTable table = ingest_svo_file(*svo);
        if (table.skipped > 0) {
            std::cerr << "warning: skipped " << table.skipped << " malformed SVO rows\n";
        }
        Lexicon lex = ingest_lexicon_file(*lexicon);
        auto interactions = extract_typed_interactions(table, lex, load_verb_map(*verbs));
        AnnotatedNetwork annotated = annotate_network(sif.edges, interactions);
        write_annotated_sif_file(annotated, resolve(opts.out_dir, *out, "annotated.sif"));
        write_concordance_report_file(
            annotated.stats, resolve(opts.out_dir, *report, "concordance.tsv"));
    });
}

void add_coexpress(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("coexpress", "Pearson co-expression network");
    auto expression = std::make_shared<std::string>();
    auto threshold = std::make_shared<double>(0.75);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--expression", *expression, "expression TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--threshold", *threshold, "minimum |r| (default 0.75)")
        ->check(CLI::Range(1e-9, 1.0));
    cmd->add_option("--out", *out, "correlation TSV (default <out-dir>/correlations.tsv)");
    cmd->callback([&opts, expression, threshold, out] {
        ExpressionMatrix matrix = ingest_expression_file(*expression);
        if (matrix.dropped_rows > 0) {
            std::cerr << "warning: dropped " << matrix.dropped_rows
                      << " expression rows with missing/non-numeric cells\n";
        }
        CoexpressionResult result = coexpression_network(matrix, *threshold);
        if (result.skipped_zero_variance > 0) {
            std::cerr << "warning: skipped " << result.skipped_zero_variance
                      << " zero-variance probe pairs\n";
        }
        write_correlations_file(result.edges,
                                resolve(opts.out_dir, *out, "correlations.tsv"));
    });
}

void add_sweep(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("sweep", "threshold sweep against a reference network");
    auto correlations = std::make_shared<std::string>();
    auto reference = std::make_shared<std::string>();
    auto start = std::make_shared<double>(0.75);
    auto stop = std::make_shared<double>(1.00);
    auto step = std::make_shared<double>(0.01);
    auto out = std::make_shared<std::string>();
    auto curve = std::make_shared<std::string>();
    cmd->add_option("--correlations", *correlations, "correlation TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--reference", *reference, "reference network SIF")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--start", *start, "first threshold (default 0.75)");
    cmd->add_option("--stop", *stop, "last threshold (default 1.00)");
    cmd->add_option("--step", *step, "grid step (default 0.01)");
    cmd->add_option("--out", *out, "sweep TSV (default <out-dir>/sweep.tsv)");
    cmd->add_option("--curve", *curve, "threshold/percentage curve TSV");
    cmd->callback([&opts, correlations, reference, start, stop, step, out, curve] {
        auto edges = read_correlations_file(*correlations);
        SifReadResult ref = read_sif_file(*reference);
        auto rows = threshold_sweep(edges, ref.edges, *start, *stop, *step);
        write_sweep_report_file(rows, resolve(opts.out_dir, *out, "sweep.tsv"));
        write_sweep_curve_file(rows, resolve(opts.out_dir, *curve, "curve.tsv"));
    });
}

void add_intersect(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("intersect", "intersect correlation networks");
    auto inputs = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--in", *inputs, "correlation TSV files (>= 2)")
        ->required()
        ->expected(2, -1)
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", *out, "intersection SIF (default <out-dir>/intersect.sif)");
    cmd->callback([&opts, inputs, out] {
        std::vector<std::vector<CorrelationEdge>> networks;
        for (const auto& path : *inputs) networks.push_back(read_correlations_file(path));
        EdgeSet edges = intersect_networks(networks);
        write_sif_file(edges, resolve(opts.out_dir, *out, "intersect.sif"));
    });
}

void add_hypotheses(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand(
        "hypotheses", "co-expressed pairs absent from the literature network");
    auto inputs = std::make_shared<std::vector<std::string>>();
    auto reference = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--correlations", *inputs, "correlation TSV files (one per dataset)")
        ->required()
        ->expected(1, -1)
        ->check(CLI::ExistingFile);
    cmd->add_option("--reference", *reference, "literature network SIF")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", *out, "hypotheses TSV (default <out-dir>/hypotheses.tsv)");
    cmd->callback([&opts, inputs, reference, out] {
        std::vector<std::vector<CorrelationEdge>> networks;
        for (const auto& path : *inputs) networks.push_back(read_correlations_file(path));
        SifReadResult ref = read_sif_file(*reference);
        auto ranked = ranked_hypotheses(networks, ref.edges);
        std::ofstream os(resolve(opts.out_dir, *out, "hypotheses.tsv"));
        if (!os) throw std::runtime_error("cannot write hypotheses file");
        os << "#entity_a\tentity_b\tmin_abs_r";
        for (std::size_t i = 0; i < networks.size(); ++i) os << "\tr_dataset" << i + 1;
        os << "\tin_literature\n";
        if (ranked.empty()) {
            os << "# no hypotheses: every co-expressed pair is in the literature network\n";
        }
        char buf[32];
        for (const auto& h : ranked) {
            std::snprintf(buf, sizeof buf, "%.6f", h.min_abs_r);
            os << h.pair.a << '\t' << h.pair.b << '\t' << buf;
            for (double r : h.r_per_dataset) {
                std::snprintf(buf, sizeof buf, "%.6f", r);
                os << '\t' << buf;
            }
            os << "\tno\n";
        }
    });
}

// Deterministic synthetic corpus/lexicon/expression fixtures for demos and
// performance runs.
void add_fixture(CLI::App& app, Options& opts) {
    auto* cmd = app.add_subcommand("fixture", "generate a synthetic fixture");
    auto abstracts = std::make_shared<std::size_t>(200);
    auto entities = std::make_shared<std::size_t>(20);
    cmd->add_option("--abstracts", *abstracts, "number of abstracts");
    cmd->add_option("--entities", *entities, "number of entities");
    cmd->callback([&opts, abstracts, entities] {
        std::mt19937 rng(static_cast<std::mt19937::result_type>(opts.seed));
        fs::create_directories(opts.out_dir);
        std::ofstream lex((fs::path(opts.out_dir) / "lexicon.tsv").string());
        for (std::size_t e = 0; e < *entities; ++e) {
            lex << "gene" << e << "\tgene" << e << '\n';
        }
        std::ofstream corpus((fs::path(opts.out_dir) / "corpus.tsv").string());
        std::uniform_int_distribution<std::size_t> n_mentions(1, 4);
        std::uniform_int_distribution<std::size_t> pick(0, *entities - 1);
        for (std::size_t d = 0; d < *abstracts; ++d) {
            corpus << 'd' << d << '\t';
            std::size_t m = n_mentions(rng);
            for (std::size_t i = 0; i < m; ++i) {
                corpus << "gene" << pick(rng) << " interacts in pathway. ";
            }
            corpus << '\n';
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"literature co-occurrence and co-expression network toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "key = value config file; flags win");

    Options opts;
    app.add_option("--out-dir", opts.out_dir, "output directory (default .)");
    app.add_option("--threads", opts.threads, "worker threads (default 1)");
    app.add_option("--seed", opts.seed, "RNG seed (fixture generation only)");

    add_index(app, opts);
    add_cooccur(app, opts);
    add_network(app, opts);
    add_annotate(app, opts);
    add_coexpress(app, opts);
    add_sweep(app, opts);
    add_intersect(app, opts);
    add_hypotheses(app, opts);
    add_fixture(app, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
