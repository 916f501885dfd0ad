#include "cdg/degree_graphs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cdg {

void DegreeSet::validate() const {
    if (degrees.empty()) throw std::invalid_argument("DegreeSet: empty");
    if (!degrees.count(1)) {
        throw std::invalid_argument("DegreeSet: must contain the principal degree 1");
    }
}

PrimeGraph graph_from_degrees(const DegreeSet& d) {
    d.validate();
    PrimeGraph g;
    for (u64 deg : d.degrees) {
        std::set<u64> primes = pi_set(deg);
        for (u64 p : primes) g.add_vertex(p);
        for (auto it = primes.begin(); it != primes.end(); ++it) {
            for (auto jt = std::next(it); jt != primes.end(); ++jt) {
                g.add_edge(*it, *jt);
            }
        }
    }
    return g;
}

namespace {

u64 checked_power(u64 t, unsigned a) {
    u128 v = 1;
    for (unsigned i = 0; i < a; ++i) {
        v *= t;
        if (v > UINT64_MAX) throw std::overflow_error("prime power exceeds 64 bits");
    }
    return static_cast<u64>(v);
}

}  // namespace

PrimeGraph psl2_graph(u64 t, unsigned a, PSL2Variant) {
    if (!is_prime(t) || a == 0) throw std::invalid_argument("psl2_graph: t must be prime, a >= 1");
    u64 q = checked_power(t, a);
    if (q < 4) throw std::invalid_argument("psl2_graph: requires t^a >= 4");
    PrimeGraph g;
    if (q == 4 || q == 5) {
        // PSL2(4) = PSL2(5) = A5: three isolated vertices.
        for (u64 v : {2, 3, 5}) g.add_vertex(v);
        return g;
    }
    std::set<u64> minus = pi_set(q - 1);
    std::set<u64> plus = pi_set(q + 1);
    // For t odd both q-1 and q+1 are even, so the cliques share exactly the
    // vertex 2, which is then a complete vertex of the big component; for
    // t = 2 they are disjoint and the graph has three components.
    g.add_vertex(t);
    add_clique(g, minus);
    add_clique(g, plus);
    return g;
}

PrimeGraph sz_graph(unsigned a) {
    if (a < 3 || a % 2 == 0) throw std::invalid_argument("sz_graph: a must be odd and >= 3");
    u64 q = checked_power(2, a);
    std::set<u64> pi1 = pi_set(q - 1);
    std::set<u64> pi0 = pi_set(static_cast<u128>(q - 1) * (static_cast<u128>(q) * q + 1));
    PrimeGraph g;
    g.add_vertex(2);
    add_clique(g, pi0);
    for (u64 v : pi1) g.add_edge(2, v);
    return g;
}

PrimeGraph sporadic_graph(Sporadic name) {
    PrimeGraph g;
    switch (name) {
        case Sporadic::M11:
            for (u64 v : {2, 3, 5, 11}) g.add_vertex(v);
            g.add_edge(3, 5);
            g.add_edge(2, 5);
            g.add_edge(2, 11);
            g.add_edge(5, 11);
            return g;
        case Sporadic::J1:
            for (u64 v : {2, 3, 5, 7, 11, 19}) g.add_vertex(v);
            g.add_edge(2, 3);
            g.add_edge(3, 5);
            g.add_edge(2, 5);
            g.add_edge(2, 7);
            g.add_edge(2, 19);
            g.add_edge(7, 11);
            g.add_edge(7, 19);
            g.add_edge(11, 19);
            return g;
        case Sporadic::PSL3_4:
            for (u64 v : {2, 3, 5, 7}) g.add_vertex(v);
            g.add_edge(2, 5);
            g.add_edge(3, 5);
            g.add_edge(5, 7);
            g.add_edge(3, 7);
            return g;
    }
    throw std::invalid_argument("sporadic_graph: unknown name");
}

DegreeFixture load_degree_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    DegreeFixture f;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# source:", 0) != 0) {
        throw std::runtime_error("fixture " + path + ": first line must be '# source: <citation>'");
    }
    f.source = line.substr(9);
    while (!f.source.empty() && f.source.front() == ' ') f.source.erase(f.source.begin());
    if (!std::getline(in, f.label) || f.label.empty()) {
        throw std::runtime_error("fixture " + path + ": missing group label");
    }
    if (!std::getline(in, line)) {
        throw std::runtime_error("fixture " + path + ": missing degree list");
    }
    std::istringstream ds(line);
    u64 deg;
    while (ds >> deg) f.degrees.degrees.insert(deg);
    f.degrees.validate();
    return f;
}

}  // namespace cdg
