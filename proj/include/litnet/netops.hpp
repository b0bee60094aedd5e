#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>

namespace litnet {

/// Canonically ordered undirected entity pair: a < b, never a == b.
struct PairKey {
    std::string a;
    std::string b;

    PairKey(std::string x, std::string y);
    auto operator<=>(const PairKey&) const = default;
};

/// Undirected, loop-free edge set over a fixed node universe of n entities.
/// The universe is a count (taken from the lexicon), so entities with zero
/// occurrences still bound the edge space.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t universe) : universe_(universe) {}

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    /// Returns false if the edge was already present. Throws when the
    /// universe bound n(n-1)/2 would be exceeded.
    bool insert(const PairKey& edge);
    bool contains(const PairKey& edge) const { return edges_.count(edge) != 0; }

    const std::set<PairKey>& edges() const { return edges_; }

    bool operator==(const EdgeSet& other) const { return edges_ == other.edges_; }

private:
    std::size_t universe_ = 0;
    std::set<PairKey> edges_;
};

/// n(n-1)/2 possible undirected loop-free pairs over n nodes.
std::size_t edge_universe_size(std::size_t n);

/// Set algebra. Both operands must share the same universe.
EdgeSet intersect(const EdgeSet& a, const EdgeSet& b);
EdgeSet difference(const EdgeSet& a, const EdgeSet& b);

struct OverlapStats {
    std::size_t common = 0;
    std::size_t only_a = 0;
    std::size_t only_b = 0;
    double pct_of_a = 0.0;  // 100*common/|a|; valid only when |a| > 0
    double pct_of_b = 0.0;
    bool pct_of_a_defined = false;
    bool pct_of_b_defined = false;
};

OverlapStats overlap_stats(const EdgeSet& a, const EdgeSet& b);

struct SifReadResult {
    EdgeSet edges;
    std::size_t skipped = 0;  // malformed, self-loop or duplicate lines
};

/// Reads SIF lines "a TAB pp TAB b". Order is canonicalized; duplicate and
/// self-loop lines are dropped and counted. When universe == 0 it is
/// inferred as the number of distinct node names seen.
SifReadResult read_sif(std::istream& in, std::size_t universe = 0);

/// Canonical SIF: edges sorted by (a, b), relation "pp", newline-terminated.
void write_sif(const EdgeSet& edges, std::ostream& out);

SifReadResult read_sif_file(const std::string& path, std::size_t universe = 0);
void write_sif_file(const EdgeSet& edges, const std::string& path);

}  // namespace litnet
