#include "litnet/netops.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "litnet/strutil.hpp"

namespace litnet {

PairKey::PairKey(std::string x, std::string y) {
    if (x == y) throw std::invalid_argument("PairKey: self-loop '" + x + "'");
    if (x < y) {
        a = std::move(x);
        b = std::move(y);
    } else {
        a = std::move(y);
        b = std::move(x);
    }
}

std::size_t edge_universe_size(std::size_t n) {
    if (n < 1) throw std::invalid_argument("edge_universe_size: n must be >= 1");
    return n * (n - 1) / 2;
}

bool EdgeSet::insert(const PairKey& edge) {
    if (universe_ > 0 && edges_.size() >= edge_universe_size(universe_) &&
        edges_.count(edge) == 0) {
        throw std::runtime_error("EdgeSet: edge count would exceed universe bound");
    }
    return edges_.insert(edge).second;
}

namespace {
void require_same_universe(const EdgeSet& a, const EdgeSet& b) {
    if (a.universe() != b.universe()) {
        throw std::invalid_argument("EdgeSet: universe mismatch (" +
                                    std::to_string(a.universe()) + " vs " +
                                    std::to_string(b.universe()) + ")");
    }
}
}  // namespace

EdgeSet intersect(const EdgeSet& a, const EdgeSet& b) {
    require_same_universe(a, b);
    EdgeSet out(a.universe());
    const EdgeSet& small = a.size() <= b.size() ? a : b;
    const EdgeSet& large = a.size() <= b.size() ? b : a;
    for (const auto& e : small.edges())
        if (large.contains(e)) out.insert(e);
    return out;
}

EdgeSet difference(const EdgeSet& a, const EdgeSet& b) {
    require_same_universe(a, b);
    EdgeSet out(a.universe());
    for (const auto& e : a.edges())
        if (!b.contains(e)) out.insert(e);
    return out;
}

OverlapStats overlap_stats(const EdgeSet& a, const EdgeSet& b) {
    require_same_universe(a, b);
    OverlapStats s;
    for (const auto& e : a.edges())
        if (b.contains(e)) ++s.common;
    s.only_a = a.size() - s.common;
    s.only_b = b.size() - s.common;
    if (a.size() > 0) {
        s.pct_of_a = 100.0 * static_cast<double>(s.common) / static_cast<double>(a.size());
        s.pct_of_a_defined = true;
    }
    if (b.size() > 0) {
        s.pct_of_b = 100.0 * static_cast<double>(s.common) / static_cast<double>(b.size());
        s.pct_of_b_defined = true;
    }
    return s;
}

SifReadResult read_sif(std::istream& in, std::size_t universe) {
    SifReadResult result;
    std::set<PairKey> seen;
    std::unordered_set<std::string> nodes;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3 || fields[1] != "pp" || fields[0].empty() ||
            fields[2].empty() || fields[0] == fields[2]) {
            ++result.skipped;
            continue;
        }
        PairKey key(fields[0], fields[2]);
        if (!seen.insert(key).second) {
            ++result.skipped;
            continue;
        }
        nodes.insert(fields[0]);
        nodes.insert(fields[2]);
    }
    result.edges = EdgeSet(universe > 0 ? universe : nodes.size());
    for (const auto& e : seen) result.edges.insert(e);
    return result;
}

void write_sif(const EdgeSet& edges, std::ostream& out) {
    for (const auto& e : edges.edges()) out << e.a << "\tpp\t" << e.b << '\n';
}

SifReadResult read_sif_file(const std::string& path, std::size_t universe) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open SIF file: " + path);
    return read_sif(in, universe);
}

void write_sif_file(const EdgeSet& edges, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SIF file: " + path);
    write_sif(edges, out);
}

}  // namespace litnet
