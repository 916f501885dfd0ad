#ifndef CDG_DEGREE_GRAPHS_HPP
#define CDG_DEGREE_GRAPHS_HPP

#include <set>
#include <string>

#include "cdg/prime_graph.hpp"

namespace cdg {

/// Set of irreducible character degrees; always contains 1.
struct DegreeSet {
    std::set<u64> degrees;

    void validate() const;  // throws if empty or missing 1
};

/// Vertices are the primes dividing some degree; p and q are adjacent iff
/// pq divides some degree.
PrimeGraph graph_from_degrees(const DegreeSet& d);

enum class PSL2Variant { PSL2, SL2 };

/// Degree graph of PSL2(t^a) / SL2(t^a), t^a >= 4, built structurally:
/// for t = 2 three complete components {2}, pi(2^a-1), pi(2^a+1); for t odd
/// with t^a > 5 an isolated {t} plus cliques on pi(t^a-1) and pi(t^a+1)
/// glued along the complete vertex 2; t^a in {4, 5} gives {2,3,5} edgeless.
PrimeGraph psl2_graph(u64 t, unsigned a, PSL2Variant variant = PSL2Variant::PSL2);

/// Degree graph of Sz(2^a), a odd >= 3: vertices {2} plus
/// pi((2^a-1)(2^2a+1)); that set is a clique and 2 is adjacent exactly to
/// the primes in pi(2^a-1).
PrimeGraph sz_graph(unsigned a);

enum class Sporadic { M11, J1, PSL3_4 };

/// Fixed degree graphs of M11, J1 and PSL3(4).
PrimeGraph sporadic_graph(Sporadic name);

/// Degree-list fixture file: line 1 "# source: <citation>", line 2 the group
/// label, line 3 space-separated degrees.
struct DegreeFixture {
    std::string source;
    std::string label;
    DegreeSet degrees;
};

DegreeFixture load_degree_fixture(const std::string& path);

}  // namespace cdg

#endif
