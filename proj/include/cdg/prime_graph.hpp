#ifndef CDG_PRIME_GRAPH_HPP
#define CDG_PRIME_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdg/numbers.hpp"

namespace cdg {

/// Simple undirected graph on prime-number vertices. Vertices are validated
/// as primes on insertion; no self-loops. Build once, then query.
class PrimeGraph {
public:
    PrimeGraph() = default;

    void add_vertex(u64 p);
    void add_edge(u64 p, u64 q);  // inserts missing endpoints

    const std::set<u64>& vertices() const { return vertices_; }
    const std::set<std::pair<u64, u64>>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(u64 p) const { return vertices_.count(p) != 0; }
    bool adjacent(u64 p, u64 q) const;
    std::vector<u64> neighbors(u64 p) const;

    /// Maximal connected subsets, each sorted ascending; classes ordered by
    /// their smallest vertex. Empty graph yields an empty partition.
    std::vector<std::vector<u64>> components() const;

    /// Vertices whose deletion strictly increases the number of connected
    /// components (computed per component, so vertices of a disconnected
    /// graph are reported too).
    std::set<u64> cut_vertices() const;

    /// Largest k such that |V| > k and removal of every size-k vertex subset
    /// leaves a connected graph; brute force over subsets.
    unsigned connectivity_degree() const;

    std::set<u64> complete_vertices() const;
    bool is_complete_vertex(u64 p) const;
    bool is_clique(const std::set<u64>& s) const;

    PrimeGraph induced(const std::set<u64>& s) const;
    PrimeGraph without(u64 p) const;  // induced(V - {p})

    bool operator==(const PrimeGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

    /// Canonical machine-readable form: sorted vertex list on the first
    /// line, then one sorted edge pair per line.
    std::string canonical_text() const;
    std::string to_dot(const std::string& name = "degree_graph") const;

private:
    std::set<u64> vertices_;
    std::set<std::pair<u64, u64>> edges_;  // stored with first < second
};

/// Graph join: union of two vertex-disjoint graphs plus every cross edge.
/// Throws std::invalid_argument if the vertex sets overlap.
PrimeGraph join(const PrimeGraph& g1, const PrimeGraph& g2);

/// Adds every edge between distinct members of s (vertices inserted).
void add_clique(PrimeGraph& g, const std::set<u64>& s);

struct ConnectivityReport {
    std::vector<std::vector<u64>> components;
    std::set<u64> cut_vertices;
    unsigned connectivity_degree = 0;
    std::set<u64> complete_vertices;
};

ConnectivityReport analyze(const PrimeGraph& g);

}  // namespace cdg

#endif
