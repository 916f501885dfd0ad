#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "cdg/prime_graph.hpp"

using namespace cdg;

namespace {

const std::vector<u64> kPrimes{2, 3, 5, 7, 11, 13, 17};

PrimeGraph graph_from_mask(unsigned n, unsigned long long edge_mask) {
    PrimeGraph g;
    for (unsigned i = 0; i < n; ++i) g.add_vertex(kPrimes[i]);
    unsigned bit = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j, ++bit) {
            if (edge_mask >> bit & 1) g.add_edge(kPrimes[i], kPrimes[j]);
        }
    }
    return g;
}

std::size_t component_count(const PrimeGraph& g) { return g.components().size(); }

// Oracle: v is a cut vertex iff deleting it increases the component count.
std::set<u64> cut_vertices_oracle(const PrimeGraph& g) {
    std::set<u64> cuts;
    std::size_t base = component_count(g);
    for (u64 v : g.vertices()) {
        if (component_count(g.without(v)) > base) cuts.insert(v);
    }
    return cuts;
}

// Oracle for connectivity degree: union-find over vertices surviving each
// deletion subset, checked straight from the definition.
unsigned connectivity_oracle(const PrimeGraph& g) {
    std::vector<u64> verts(g.vertices().begin(), g.vertices().end());
    unsigned n = static_cast<unsigned>(verts.size());
    auto connected_after = [&](unsigned long long removed) {
        std::vector<int> parent(n);
        for (unsigned i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        unsigned remaining = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (!(removed >> i & 1)) ++remaining;
        }
        if (remaining == 0) return true;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                if ((removed >> i & 1) || (removed >> j & 1)) continue;
                if (g.adjacent(verts[i], verts[j])) parent[find(i)] = find(j);
            }
        }
        int root = -1;
        unsigned classes = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (removed >> i & 1) continue;
            if (find(i) == static_cast<int>(i)) ++classes;
            (void)root;
        }
        return classes == 1;
    };
    unsigned best = 0;
    for (unsigned k = 0; k + 1 < n; ++k) {
        bool ok = true;
        for (unsigned long long mask = 0; mask < (1ull << n) && ok; ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
            if (!connected_after(mask)) ok = false;
        }
        if (!ok) break;
        best = k + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("vertex and edge validation") {
    PrimeGraph g;
    CHECK_THROWS_AS(g.add_vertex(4), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex(1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    g.add_edge(3, 5);
    CHECK(g.has_vertex(3));
    CHECK(g.adjacent(5, 3));
    CHECK_FALSE(g.adjacent(3, 3));
}

TEST_CASE("components and canonical text") {
    PrimeGraph g;
    g.add_edge(2, 3);
    g.add_vertex(7);
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<u64>{2, 3});
    CHECK(comps[1] == std::vector<u64>{7});
    CHECK(g.canonical_text() == "2 3 7\n2 3\n");
}

TEST_CASE("cut vertices match the delete-and-count oracle, exhaustive to 5 vertices") {
    for (unsigned n = 1; n <= 5; ++n) {
        unsigned bits = n * (n - 1) / 2;
        for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
            PrimeGraph g = graph_from_mask(n, mask);
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(g.cut_vertices() == cut_vertices_oracle(g));
        }
    }
}

TEST_CASE("cut vertices match the oracle on random graphs with 6-7 vertices") {
    std::mt19937_64 rng(987123);
    for (int trial = 0; trial < 400; ++trial) {
        unsigned n = 6 + (trial & 1);
        unsigned bits = n * (n - 1) / 2;
        PrimeGraph g = graph_from_mask(n, rng() & ((1ull << bits) - 1));
        CAPTURE(trial);
        REQUIRE(g.cut_vertices() == cut_vertices_oracle(g));
    }
}

TEST_CASE("connectivity degree matches the definition, exhaustive to 5 vertices") {
    for (unsigned n = 0; n <= 5; ++n) {
        unsigned bits = n * (n - 1) / 2;
        for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
            PrimeGraph g = graph_from_mask(n, mask);
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(g.connectivity_degree() == connectivity_oracle(g));
        }
    }
}

TEST_CASE("connectivity degree pinned values") {
    CHECK(PrimeGraph{}.connectivity_degree() == 0);
    PrimeGraph single;
    single.add_vertex(2);
    CHECK(single.connectivity_degree() == 0);
    PrimeGraph k4;
    add_clique(k4, {2, 3, 5, 7});
    CHECK(k4.connectivity_degree() == 3);
    PrimeGraph path;
    path.add_edge(2, 3);
    path.add_edge(3, 5);
    CHECK(path.connectivity_degree() == 1);
    CHECK(path.cut_vertices() == std::set<u64>{3});
}

TEST_CASE("complete vertices and cliques") {
    PrimeGraph g;
    add_clique(g, {2, 3, 5});
    g.add_edge(5, 7);
    CHECK(g.complete_vertices() == std::set<u64>{5});
    CHECK(g.is_clique({2, 3, 5}));
    CHECK_FALSE(g.is_clique({2, 3, 7}));
    CHECK_THROWS_AS(g.is_clique({2, 11}), std::invalid_argument);
}

TEST_CASE("join adds all cross edges and rejects overlap") {
    PrimeGraph a;
    a.add_edge(2, 3);
    PrimeGraph b;
    b.add_vertex(5);
    b.add_vertex(7);
    PrimeGraph j = join(a, b);
    CHECK(j.vertex_count() == 4);
    CHECK(j.adjacent(2, 5));
    CHECK(j.adjacent(3, 7));
    CHECK_FALSE(j.adjacent(5, 7));
    CHECK_THROWS_AS(join(a, j), std::invalid_argument);
}

TEST_CASE("induced subgraphs and deletion") {
    PrimeGraph g;
    add_clique(g, {2, 3, 5, 7});
    PrimeGraph h = g.induced({2, 3, 5});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);
    CHECK(g.without(7) == h);
    CHECK_THROWS_AS(g.induced({2, 11}), std::invalid_argument);
    CHECK_THROWS_AS(g.without(11), std::invalid_argument);
}

TEST_CASE("analyze report is consistent with individual queries") {
    PrimeGraph g;
    g.add_edge(2, 3);
    g.add_edge(3, 5);
    g.add_vertex(11);
    ConnectivityReport r = analyze(g);
    CHECK(r.components == g.components());
    CHECK(r.cut_vertices == g.cut_vertices());
    CHECK(r.connectivity_degree == g.connectivity_degree());
    CHECK(r.complete_vertices == g.complete_vertices());
    CHECK(r.connectivity_degree == 0);  // disconnected
    CHECK(r.cut_vertices == std::set<u64>{3});
}

TEST_CASE("dot export mentions every vertex and edge") {
    PrimeGraph g;
    g.add_edge(2, 3);
    std::string dot = g.to_dot("x");
    CHECK(dot.find("\"2\" -- \"3\"") != std::string::npos);
    CHECK(dot.find("graph x {") != std::string::npos);
}
