#include "cdg/prime_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cdg {

void PrimeGraph::add_vertex(u64 p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("PrimeGraph: vertex " + std::to_string(p) +
                                    " is not prime");
    }
    vertices_.insert(p);
}

void PrimeGraph::add_edge(u64 p, u64 q) {
    if (p == q) throw std::invalid_argument("PrimeGraph: self-loop rejected");
    add_vertex(p);
    add_vertex(q);
    edges_.insert({std::min(p, q), std::max(p, q)});
}

bool PrimeGraph::adjacent(u64 p, u64 q) const {
    if (p == q) return false;
    return edges_.count({std::min(p, q), std::max(p, q)}) != 0;
}

std::vector<u64> PrimeGraph::neighbors(u64 p) const {
    std::vector<u64> out;
    for (u64 v : vertices_) {
        if (adjacent(p, v)) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<u64>> PrimeGraph::components() const {
    std::vector<std::vector<u64>> result;
    std::set<u64> seen;
    for (u64 start : vertices_) {
        if (seen.count(start)) continue;
        std::vector<u64> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            u64 v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (u64 w : neighbors(v)) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

std::set<u64> PrimeGraph::cut_vertices() const {
    // Standard low-link depth-first articulation point search, run on every
    // component; matches the delete-and-count definition (cross-checked in
    // the test suite).
    std::vector<u64> verts(vertices_.begin(), vertices_.end());
    std::map<u64, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = -1;
    std::map<u64, int> low;
    std::set<u64> cuts;
    int counter = 0;

    std::function<void(u64, u64, bool)> dfs = [&](u64 v, u64 parent, bool is_root) {
        index[v] = low[v] = counter++;
        int children = 0;
        for (u64 w : neighbors(v)) {
            if (index[w] == -1) {
                ++children;
                dfs(w, v, false);
                low[v] = std::min(low[v], low[w]);
                if (!is_root && low[w] >= index[v]) cuts.insert(v);
            } else if (!is_root && w != parent) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (is_root && children > 1) cuts.insert(v);
    };

    for (u64 v : verts) {
        if (index[v] == -1) dfs(v, v, true);
    }
    return cuts;
}

unsigned PrimeGraph::connectivity_degree() const {
    std::vector<u64> verts(vertices_.begin(), vertices_.end());
    std::size_t n = verts.size();
    auto connected_without = [&](unsigned long long mask) {
        // BFS on the vertices not in mask.
        std::size_t first = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) {
                first = i;
                break;
            }
        }
        if (first == n) return true;  // no vertices left
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{first};
        seen[first] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if ((mask >> w & 1) || seen[w]) continue;
                if (adjacent(verts[v], verts[w])) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        std::size_t remaining = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) --remaining;
        }
        return reached == remaining;
    };

    // The graph is (k+1)-connected when it survives deletion of every
    // k-subset and more than k+1 vertices exist; the degree is the largest
    // such k+1 (0 for disconnected or single-vertex graphs).
    unsigned best = 0;
    for (unsigned k = 0; k + 1 < n; ++k) {
        bool k_connected = true;
        // All subsets of size k.
        std::vector<std::size_t> idx(k);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t start) {
            if (pos == k) {
                unsigned long long mask = 0;
                for (std::size_t i : idx) mask |= 1ull << i;
                return connected_without(mask);
            }
            for (std::size_t i = start; i < n; ++i) {
                idx[pos] = i;
                if (!rec(pos + 1, i + 1)) return false;
            }
            return true;
        };
        k_connected = rec(0, 0);
        if (!k_connected) break;
        best = k + 1;
    }
    return best;
}

bool PrimeGraph::is_complete_vertex(u64 p) const {
    if (!has_vertex(p)) throw std::invalid_argument("is_complete_vertex: unknown vertex");
    for (u64 v : vertices_) {
        if (v != p && !adjacent(p, v)) return false;
    }
    return true;
}

std::set<u64> PrimeGraph::complete_vertices() const {
    std::set<u64> out;
    if (vertices_.size() < 2) return out;
    for (u64 v : vertices_) {
        if (is_complete_vertex(v)) out.insert(v);
    }
    return out;
}

bool PrimeGraph::is_clique(const std::set<u64>& s) const {
    for (u64 p : s) {
        if (!has_vertex(p)) throw std::invalid_argument("is_clique: unknown vertex");
    }
    for (auto it = s.begin(); it != s.end(); ++it) {
        for (auto jt = std::next(it); jt != s.end(); ++jt) {
            if (!adjacent(*it, *jt)) return false;
        }
    }
    return true;
}

PrimeGraph PrimeGraph::induced(const std::set<u64>& s) const {
    for (u64 p : s) {
        if (!has_vertex(p)) throw std::invalid_argument("induced: vertex set is not a subset");
    }
    PrimeGraph g;
    for (u64 p : s) g.add_vertex(p);
    for (const auto& [p, q] : edges_) {
        if (s.count(p) && s.count(q)) g.add_edge(p, q);
    }
    return g;
}

PrimeGraph PrimeGraph::without(u64 p) const {
    if (!has_vertex(p)) throw std::invalid_argument("without: unknown vertex");
    std::set<u64> s = vertices_;
    s.erase(p);
    return induced(s);
}

std::string PrimeGraph::canonical_text() const {
    std::ostringstream os;
    bool first = true;
    for (u64 v : vertices_) {
        os << (first ? "" : " ") << v;
        first = false;
    }
    os << '\n';
    for (const auto& [p, q] : edges_) os << p << ' ' << q << '\n';
    return os.str();
}

std::string PrimeGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (u64 v : vertices_) os << "  \"" << v << "\";\n";
    for (const auto& [p, q] : edges_) os << "  \"" << p << "\" -- \"" << q << "\";\n";
    os << "}\n";
    return os.str();
}

PrimeGraph join(const PrimeGraph& g1, const PrimeGraph& g2) {
    for (u64 v : g1.vertices()) {
        if (g2.has_vertex(v)) {
            throw std::invalid_argument("join: vertex sets overlap at " + std::to_string(v));
        }
    }
    PrimeGraph g;
    for (u64 v : g1.vertices()) g.add_vertex(v);
    for (u64 v : g2.vertices()) g.add_vertex(v);
    for (const auto& [p, q] : g1.edges()) g.add_edge(p, q);
    for (const auto& [p, q] : g2.edges()) g.add_edge(p, q);
    for (u64 p : g1.vertices()) {
        for (u64 q : g2.vertices()) g.add_edge(p, q);
    }
    return g;
}

void add_clique(PrimeGraph& g, const std::set<u64>& s) {
    for (u64 p : s) g.add_vertex(p);
    for (auto it = s.begin(); it != s.end(); ++it) {
        for (auto jt = std::next(it); jt != s.end(); ++jt) g.add_edge(*it, *jt);
    }
}

ConnectivityReport analyze(const PrimeGraph& g) {
    ConnectivityReport r;
    r.components = g.components();
    r.cut_vertices = g.cut_vertices();
    r.connectivity_degree = g.connectivity_degree();
    r.complete_vertices = g.complete_vertices();
    return r;
}

}  // namespace cdg
