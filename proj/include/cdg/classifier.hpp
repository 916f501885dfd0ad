#ifndef CDG_CLASSIFIER_HPP
#define CDG_CLASSIFIER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdg/degree_graphs.hpp"
#include "cdg/prime_graph.hpp"

namespace cdg {

enum class SocleTag { PSL2, SL2, Sz, PSL3_4, M11, J1 };

/// The simple group sitting as the socle of G/R.
struct SimpleFamily {
    SocleTag tag;
    u64 t = 0;      // defining characteristic for PSL2/SL2 (2 for Sz)
    unsigned a = 0; // field degree

    u64 prime_power() const;  // t^a for the parametrized families
    void validate() const;
    std::string name() const;
};

enum class ResidualShape {
    simple,            // K isomorphic to the socle S
    sl2_cover,         // K isomorphic to SL2(t^a), the cover of PSL2(t^a)
    extension_natural, // K has a minimal normal L = natural module for K/L
    extension_special, // the exceptional modules (3^6 for SL2(13),
                       // Omega4-(2)-restriction 2^4, SL4(3)-restriction for SL2(5))
};

/// Declared structural data for a non-solvable group, mirroring the
/// hypotheses of the clause tables. Facts such as "G/K abelian"
/// are encoded through the vertex-set fields (V(G/K) empty iff G/K abelian,
/// by Ito-Michler), not re-derived.
struct GroupDescriptor {
    SimpleFamily socle;
    ResidualShape residual_shape = ResidualShape::simple;
    std::set<u64> radical_vertices;   // V(R), at most one prime
    std::set<u64> quotient_vertices;  // V(G/K), at most one prime
    u64 outer_index = 1;              // |G : KR|
    bool outer_part_odd = false;      // |G/KR| has odd order
    bool sylow2_condition = false;    // T' = (T cap K)' for T in Syl_2(G)
    bool direct_product_with_R = false;  // G = K x R
    u64 candidate_p = 2;

    void validate() const;  // throws std::invalid_argument with a field message
};

enum class Outcome {
    connected_cut_vertex,
    disconnected_cut_vertex,
    disconnected_no_cut_vertex,
    two_connected,
    not_covered,
};

const char* outcome_name(Outcome o);

struct Violation {
    std::string clause;     // e.g. "C(a)"
    std::string condition;  // the failed side condition, human readable
};

struct Verdict {
    Outcome outcome = Outcome::not_covered;
    std::string matched_clause;  // e.g. "A(e)(ii)"; empty if no match
    std::optional<u64> cut_vertex;
    std::optional<PrimeGraph> predicted_graph;
    std::vector<Violation> violations;  // near-miss ledger for unmatched clauses
    std::vector<std::string> notes;
};

/// Decision procedure for the classification: evaluates the disconnected
/// case first, then the two connected cases, with first-match semantics.
Verdict classify(const GroupDescriptor& d);

/// The exact degree graph the matched clause prescribes.
PrimeGraph predict_graph(const GroupDescriptor& d, const std::string& matched_clause);

/// pi(G/R): primes dividing the socle order or |G:KR|.
std::set<u64> almost_simple_primes(const GroupDescriptor& d);

/// Prime divisors of the socle's group order.
std::set<u64> socle_primes(const SimpleFamily& s);

}  // namespace cdg

#endif
