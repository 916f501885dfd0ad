#include "cdg/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdg {

namespace {

u64 checked_power(u64 t, unsigned a) {
    u128 v = 1;
    for (unsigned i = 0; i < a; ++i) {
        v *= t;
        if (v > UINT64_MAX) throw std::overflow_error("prime power exceeds 64 bits");
    }
    return static_cast<u64>(v);
}

bool subset_of(const std::set<u64>& s, u64 p) {
    return s.empty() || (s.size() == 1 && *s.begin() == p);
}

bool is_power_of(u64 n, u64 p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

u64 SimpleFamily::prime_power() const { return checked_power(t, a); }

void SimpleFamily::validate() const {
    switch (tag) {
        case SocleTag::PSL2:
        case SocleTag::SL2: {
            if (!is_prime(t)) throw std::invalid_argument("socle: t must be prime");
            if (a == 0) throw std::invalid_argument("socle: a must be >= 1");
            if (tag == SocleTag::SL2 && t != 2) {
                throw std::invalid_argument(
                    "socle: SL2(t^a) with t odd is not simple; describe the socle as "
                    "PSL2 and the cover through residual_shape");
            }
            if (prime_power() < 4) throw std::invalid_argument("socle: requires t^a >= 4");
            break;
        }
        case SocleTag::Sz:
            if (t != 2) throw std::invalid_argument("socle: Sz has characteristic 2");
            if (a < 3 || a % 2 == 0) {
                throw std::invalid_argument("socle: Sz(2^a) requires a odd, a >= 3");
            }
            checked_power(2, 2 * a);  // q^2 must stay representable
            break;
        case SocleTag::PSL3_4:
        case SocleTag::M11:
        case SocleTag::J1:
            break;
    }
}

std::string SimpleFamily::name() const {
    switch (tag) {
        case SocleTag::PSL2: return "PSL2(" + std::to_string(prime_power()) + ")";
        case SocleTag::SL2: return "SL2(" + std::to_string(prime_power()) + ")";
        case SocleTag::Sz: return "Sz(" + std::to_string(prime_power()) + ")";
        case SocleTag::PSL3_4: return "PSL3(4)";
        case SocleTag::M11: return "M11";
        case SocleTag::J1: return "J1";
    }
    return "?";
}

void GroupDescriptor::validate() const {
    socle.validate();
    if (radical_vertices.size() > 1) {
        throw std::invalid_argument("radical_vertices: at most one prime allowed");
    }
    if (quotient_vertices.size() > 1) {
        throw std::invalid_argument("quotient_vertices: at most one prime allowed");
    }
    for (u64 p : radical_vertices) {
        if (!is_prime(p)) throw std::invalid_argument("radical_vertices: entries must be prime");
    }
    for (u64 p : quotient_vertices) {
        if (!is_prime(p)) throw std::invalid_argument("quotient_vertices: entries must be prime");
    }
    if (outer_index == 0) throw std::invalid_argument("outer_index: must be >= 1");
    if (!is_prime(candidate_p)) throw std::invalid_argument("p: must be prime");
    if (direct_product_with_R && outer_index != 1) {
        throw std::invalid_argument("direct_product_with_R: G = K x R forces |G:KR| = 1");
    }
    if (outer_part_odd && outer_index % 2 == 0) {
        throw std::invalid_argument("outer_part_odd: contradicts an even outer_index");
    }
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::connected_cut_vertex: return "connected_cut_vertex";
        case Outcome::disconnected_cut_vertex: return "disconnected_cut_vertex";
        case Outcome::disconnected_no_cut_vertex: return "disconnected_no_cut_vertex";
        case Outcome::two_connected: return "two_connected";
        case Outcome::not_covered: return "not_covered";
    }
    return "?";
}

std::set<u64> socle_primes(const SimpleFamily& s) {
    switch (s.tag) {
        case SocleTag::PSL2:
        case SocleTag::SL2: {
            u64 q = s.prime_power();
            std::set<u64> out = pi_set(static_cast<u128>(q - 1) * (q + 1));
            out.insert(s.t);
            return out;
        }
        case SocleTag::Sz: {
            u64 q = s.prime_power();
            std::set<u64> out = pi_set(static_cast<u128>(q - 1) * (static_cast<u128>(q) * q + 1));
            out.insert(2);
            return out;
        }
        case SocleTag::PSL3_4: return {2, 3, 5, 7};
        case SocleTag::M11: return {2, 3, 5, 11};
        case SocleTag::J1: return {2, 3, 5, 7, 11, 19};
    }
    return {};
}

std::set<u64> almost_simple_primes(const GroupDescriptor& d) {
    std::set<u64> out = socle_primes(d.socle);
    for (u64 p : pi_set(d.outer_index)) out.insert(p);
    return out;
}

namespace {

bool is_psl2_family(const SimpleFamily& s) {
    return s.tag == SocleTag::PSL2 || s.tag == SocleTag::SL2;
}

// The socle is A5 = SL2(4) = PSL2(5); clause group B territory.
bool is_a5_socle(const SimpleFamily& s) {
    if (!is_psl2_family(s)) return false;
    u64 q = s.prime_power();
    return q == 4 || q == 5;
}

// Accumulates failed side conditions for one clause.
struct ClauseCheck {
    std::string clause;
    std::vector<Violation>* sink;
    bool ok = true;

    void require(bool cond, const std::string& text) {
        if (!cond) {
            ok = false;
            sink->push_back({clause, text});
        }
    }
};

PrimeGraph path_centered(u64 center, const std::set<u64>& verts) {
    PrimeGraph g;
    for (u64 v : verts) g.add_vertex(v);
    for (u64 v : verts) {
        if (v != center) g.add_edge(center, v);
    }
    return g;
}

// Shared by A(e)(i) and A(f)(i) with p != 2: the two-clique join picture of
// the radical-free quotient, then the cut vertex wired to everything.
PrimeGraph join_family_graph(const GroupDescriptor& d, bool gamma1_includes_2) {
    u64 t = d.socle.t;
    u64 q = d.socle.prime_power();
    std::set<u64> gamma1 = pi_set(d.outer_index);
    if (gamma1_includes_2) gamma1.insert(2);
    std::set<u64> minus = pi_set(q - 1);
    std::set<u64> plus = pi_set(q + 1);
    for (u64 v : gamma1) {
        minus.erase(v);
        plus.erase(v);
    }
    PrimeGraph g;
    add_clique(g, gamma1);
    add_clique(g, minus);
    add_clique(g, plus);
    for (u64 u : gamma1) {
        for (u64 v : minus) g.add_edge(u, v);
        for (u64 v : plus) g.add_edge(u, v);
    }
    g.add_vertex(t);
    u64 p = d.candidate_p;
    g.add_vertex(p);
    for (u64 v : g.vertices()) {
        if (v != p) g.add_edge(p, v);
    }
    return g;
}

// Vertex t adjacent only to p; everything else one clique containing p.
PrimeGraph pendant_characteristic_graph(const GroupDescriptor& d) {
    std::set<u64> verts = almost_simple_primes(d);
    verts.insert(d.candidate_p);
    u64 t = d.socle.t;
    std::set<u64> rest = verts;
    rest.erase(t);
    PrimeGraph g;
    g.add_vertex(t);
    add_clique(g, rest);
    g.add_edge(t, d.candidate_p);
    return g;
}

}  // namespace

PrimeGraph predict_graph(const GroupDescriptor& d, const std::string& clause) {
    const u64 p = d.candidate_p;
    if (clause == "A(a)") {
        return pendant_characteristic_graph(d);  // here t = 2
    }
    if (clause == "A(b)") return sporadic_graph(Sporadic::PSL3_4);
    if (clause == "A(c)") return sporadic_graph(Sporadic::M11);
    if (clause == "A(d)") {
        PrimeGraph g = sporadic_graph(Sporadic::J1);
        // The extra edge appears exactly when R is non-abelian, i.e. V(R) = {2}.
        if (d.radical_vertices == std::set<u64>{2}) g.add_edge(2, 11);
        return g;
    }
    if (clause == "A(e)(i)") return join_family_graph(d, true);
    if (clause == "A(e)(ii)" || clause == "A(f)(ii)") return pendant_characteristic_graph(d);
    if (clause == "A(e)(iii)") {
        PrimeGraph g;
        for (u64 v : {2, 3, 7, 13}) g.add_vertex(v);
        g.add_edge(2, 3);
        g.add_edge(2, 7);
        g.add_edge(2, 13);
        g.add_edge(7, 13);
        return g;
    }
    if (clause == "A(f)(i)") {
        if (p == 2) {
            u64 q = d.socle.prime_power();
            std::set<u64> minus = pi_set(q - 1);
            std::set<u64> plus = pi_set(q + 1);
            minus.insert(2);
            plus.insert(2);
            PrimeGraph g;
            add_clique(g, minus);
            add_clique(g, plus);
            return g;
        }
        return join_family_graph(d, false);
    }
    if (clause.rfind("B(", 0) == 0) {
        std::set<u64> verts{2, 3, 5, p};
        if (p == 2 || p == 3 || p == 5) return path_centered(p, verts);
        PrimeGraph g = path_centered(p, verts);  // p adjacent to 2, 3, 5
        if (clause == "B(a)") {
            bool plain_direct = d.residual_shape == ResidualShape::simple &&
                                d.direct_product_with_R;
            if (!plain_direct) g.add_edge(2, 3);
        } else if (clause == "B(b)(i)") {
            g.add_edge(3, 5);
        } else if (clause == "B(c)(i)") {
            g.add_edge(2, 3);
        }
        return g;
    }
    if (clause == "C(a)") {
        u64 q = d.socle.prime_power();
        PrimeGraph g;
        g.add_vertex(d.socle.t);
        add_clique(g, pi_set(q - 1));
        add_clique(g, pi_set(q + 1));
        return g;
    }
    if (clause == "C(b)") {
        u64 q = d.socle.prime_power();
        std::set<u64> minus = pi_set(q - 1);
        std::set<u64> plus = pi_set(q + 1);
        minus.insert(p);
        plus.insert(p);
        PrimeGraph g;
        g.add_vertex(2);
        add_clique(g, minus);
        add_clique(g, plus);
        return g;
    }
    throw std::invalid_argument("predict_graph: unknown clause " + clause);
}

namespace {

Verdict matched(const GroupDescriptor& d, Outcome outcome, const std::string& clause,
                std::vector<Violation> violations, std::vector<std::string> notes = {}) {
    Verdict v;
    v.outcome = outcome;
    v.matched_clause = clause;
    v.violations = std::move(violations);
    v.notes = std::move(notes);
    if (outcome == Outcome::connected_cut_vertex || outcome == Outcome::disconnected_cut_vertex) {
        v.cut_vertex = d.candidate_p;
        v.predicted_graph = predict_graph(d, clause);
    }
    return v;
}

// Clause group C shape: clauses (a)/(b); also the two no-cut-vertex
// boundary shapes resolved by design decision. Returns a verdict on match.
std::optional<Verdict> try_clause_group_C(const GroupDescriptor& d, std::vector<Violation>& viols) {
    const u64 p = d.candidate_p;
    const u64 t = d.socle.t;
    const u64 q = d.socle.prime_power();

    ClauseCheck shape{"C", &viols};
    shape.require(d.residual_shape == ResidualShape::simple ||
                      d.residual_shape == ResidualShape::sl2_cover,
                  "K isomorphic to PSL2(t^a) or SL2(t^a)");
    shape.require(d.quotient_vertices.empty(), "G/K abelian (V(G/K) = {})");
    shape.require(is_power_of(d.outer_index, p) || d.outer_index == 1, "|G:KR| = p^b");
    if (!shape.ok) return std::nullopt;

    if (q == 4 || q == 5) {
        // Excluded from both clauses: the graph lives on {2,3,5} and is
        // disconnected (three singletons, or {2,3} plus isolated 5), so a
        // cut-vertex cannot exist.
        Verdict v = matched(d, Outcome::disconnected_no_cut_vertex, "C(t^a<=5)", viols);
        v.notes.push_back(
            "V(G) = {2,3,5} and the graph is disconnected, so no cut-vertex exists");
        return v;
    }
    if (t == 2 && d.outer_index == 1) {
        Verdict v = matched(d, Outcome::disconnected_no_cut_vertex, "C(three-components)", viols);
        v.notes.push_back(
            "G = SL2(2^a) x abelian: three complete components, no cut-vertex possible");
        return v;
    }
    if (t != 2) {
        ClauseCheck c{"C(a)", &viols};
        c.require(p == 2, "p = 2");
        c.require(q != 9, "t^a != 9");
        if (q != 9) {
            PrimeFormReport form = prime_form(q);
            c.require(!form.mersenne, "t^a is a Mersenne prime");
            c.require(!form.fermat, "t^a is a Fermat prime");
        }
        if (c.ok) return matched(d, Outcome::disconnected_cut_vertex, "C(a)", viols);
    } else {
        ClauseCheck c{"C(b)", &viols};
        c.require(p != 2, "p != 2");
        c.require(d.outer_index > 1, "|G:KR| = p^b with b >= 1");
        // For p to separate the big component, both cliques must survive
        // the removal of p, i.e. neither 2^a - 1 nor 2^a + 1 is a power of p.
        std::set<u64> minus = pi_set(q - 1);
        std::set<u64> plus = pi_set(q + 1);
        minus.erase(p);
        plus.erase(p);
        c.require(!minus.empty(), "pi(2^a - 1) - {p} is non-empty");
        c.require(!plus.empty(), "pi(2^a + 1) - {p} is non-empty");
        if (c.ok) return matched(d, Outcome::disconnected_cut_vertex, "C(b)", viols);
    }
    return std::nullopt;
}

std::optional<Verdict> try_clause_group_A(const GroupDescriptor& d, std::vector<Violation>& viols) {
    const u64 p = d.candidate_p;
    switch (d.socle.tag) {
        case SocleTag::Sz: {
            const unsigned a = d.socle.a;
            const u64 mersenne = d.socle.prime_power() - 1;
            ClauseCheck c{"A(a)", &viols};
            c.require(d.residual_shape == ResidualShape::simple, "K isomorphic to Sz(2^a)");
            c.require(is_prime(a), "a is a prime");
            c.require(is_prime(mersenne), "2^a - 1 is prime");
            c.require(p == mersenne, "p = 2^a - 1");
            c.require(subset_of(d.quotient_vertices, p), "V(G/K) subset of {p}");
            if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(a)", viols);
            return std::nullopt;
        }
        case SocleTag::PSL3_4: {
            ClauseCheck c{"A(b)", &viols};
            c.require(d.residual_shape == ResidualShape::simple, "K isomorphic to PSL3(4)");
            c.require(d.outer_index == 1 || d.outer_index == 3, "|G:KR| in {1, 3}");
            c.require(p == 5, "p = 5");
            c.require(subset_of(d.quotient_vertices, 5), "V(G/K) subset of {5}");
            if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(b)", viols);
            return std::nullopt;
        }
        case SocleTag::M11: {
            ClauseCheck c{"A(c)", &viols};
            c.require(d.residual_shape == ResidualShape::simple, "K isomorphic to M11");
            c.require(d.direct_product_with_R, "G = K x R");
            c.require(p == 5, "p = 5");
            c.require(subset_of(d.radical_vertices, 5), "V(R) subset of {5}");
            if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(c)", viols);
            return std::nullopt;
        }
        case SocleTag::J1: {
            ClauseCheck c{"A(d)", &viols};
            c.require(d.residual_shape == ResidualShape::simple, "K isomorphic to J1");
            c.require(d.direct_product_with_R, "G = K x R");
            c.require(p == 2, "p = 2");
            c.require(subset_of(d.radical_vertices, 2), "V(R) subset of {2}");
            if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(d)", viols);
            return std::nullopt;
        }
        case SocleTag::PSL2:
        case SocleTag::SL2:
            break;
    }

    const u64 t = d.socle.t;
    const u64 q = d.socle.prime_power();
    if (t != 2 && q > 5) {
        // Case (e): S = PSL2(t^a), t odd, t^a > 5.
        ClauseCheck pre{"A(e)", &viols};
        pre.require(d.outer_index % t != 0, "t does not divide |G/KR|");
        pre.require(p != t, "p != t");
        if (!pre.ok) return std::nullopt;
        switch (d.residual_shape) {
            case ResidualShape::simple:
            case ResidualShape::sl2_cover: {
                ClauseCheck c{"A(e)(i)", &viols};
                c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
                if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(e)(i)", viols);
                return std::nullopt;
            }
            case ResidualShape::extension_natural: {
                ClauseCheck c{"A(e)(ii)", &viols};
                c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
                if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(e)(ii)", viols);
                return std::nullopt;
            }
            case ResidualShape::extension_special: {
                ClauseCheck c{"A(e)(iii)", &viols};
                c.require(q == 13, "t^a = 13");
                c.require(p == 2, "p = 2");
                c.require(subset_of(d.quotient_vertices, 2), "V(G/K) subset of {2}");
                if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(e)(iii)", viols);
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
    if (t == 2 && d.socle.a > 2) {
        // Case (f): S = SL2(2^a), a > 2.
        if (d.residual_shape == ResidualShape::simple) {
            ClauseCheck c{"A(f)(i)", &viols};
            std::set<u64> join_set = d.quotient_vertices;
            for (u64 v : pi_set(d.outer_index)) join_set.insert(v);
            bool alt1 = p == 2 && join_set == std::set<u64>{2};
            bool alt2 = d.outer_part_odd && p != 2 && d.quotient_vertices == std::set<u64>{p};
            c.require(alt1 || alt2,
                      "either V(G/K) u pi(G/KR) = {2} and p = 2, or G/KR odd, p != 2 "
                      "and V(G/K) = {p}");
            if (c.ok) {
                Verdict v = matched(d, Outcome::connected_cut_vertex, "A(f)(i)", viols);
                if (alt1 && d.quotient_vertices.empty()) {
                    v.notes.push_back(
                        "V(G/K) empty with pi(G/KR) = {2} accepted: the clause only pins "
                        "down the union V(G/K) u pi(G/KR) = {2}");
                }
                return v;
            }
            return std::nullopt;
        }
        if (d.residual_shape == ResidualShape::extension_natural) {
            ClauseCheck c{"A(f)(ii)", &viols};
            c.require(d.outer_part_odd, "G/KR has odd order");
            c.require(p != 2, "p != 2");
            c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
            c.require(d.sylow2_condition, "T' = (T cap K)' for a Sylow 2-subgroup T");
            if (c.ok) return matched(d, Outcome::connected_cut_vertex, "A(f)(ii)", viols);
            return std::nullopt;
        }
        viols.push_back({"A(f)", "residual shape must be K = S or the natural-module extension"});
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Verdict> try_clause_group_B(const GroupDescriptor& d, std::vector<Violation>& viols) {
    const u64 p = d.candidate_p;
    const u64 q = d.socle.prime_power();
    const bool k_is_sl2_4 = d.residual_shape == ResidualShape::simple;
    const bool k_is_sl2_5 = d.residual_shape == ResidualShape::sl2_cover && q == 5;

    if (k_is_sl2_4 || k_is_sl2_5) {
        ClauseCheck c{"B(a)", &viols};
        c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
        if (p == 5) {
            c.require(k_is_sl2_4 && d.direct_product_with_R,
                      "p = 5 forces K = SL2(4) and G = K x R");
        }
        if (c.ok) return matched(d, Outcome::connected_cut_vertex, "B(a)", viols);
        return std::nullopt;
    }
    if (d.residual_shape == ResidualShape::extension_natural && q == 4) {
        ClauseCheck c{"B(b)(i)", &viols};
        c.require(d.outer_index == 1, "G = KR");
        c.require(p != 2, "p != 2");
        c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
        if (c.ok) return matched(d, Outcome::connected_cut_vertex, "B(b)(i)", viols);
        return std::nullopt;
    }
    if (d.residual_shape == ResidualShape::extension_special && q == 4) {
        ClauseCheck c{"B(b)(ii)", &viols};
        c.require(d.outer_index == 1, "G = KR");
        c.require(p == 5, "p = 5");
        c.require(d.direct_product_with_R, "G = K x R0 with R0 = C_G(K)");
        c.require(subset_of(d.quotient_vertices, 5) && d.radical_vertices == d.quotient_vertices,
                  "V(R0) = V(G/K) subset of {5}");
        if (c.ok) return matched(d, Outcome::connected_cut_vertex, "B(b)(ii)", viols);
        return std::nullopt;
    }
    if (d.residual_shape == ResidualShape::extension_natural && q == 5) {
        ClauseCheck c{"B(c)(i)", &viols};
        c.require(p != 5, "p != 5");
        c.require(d.quotient_vertices == std::set<u64>{p}, "V(G/K) = {p}");
        if (c.ok) return matched(d, Outcome::connected_cut_vertex, "B(c)(i)", viols);
        return std::nullopt;
    }
    if (d.residual_shape == ResidualShape::extension_special && q == 5) {
        ClauseCheck c{"B(c)(ii)", &viols};
        c.require(p == 2, "p = 2");
        c.require(subset_of(d.quotient_vertices, 2), "V(G/K) subset of {2}");
        if (c.ok) return matched(d, Outcome::connected_cut_vertex, "B(c)(ii)", viols);
        return std::nullopt;
    }
    viols.push_back({"B", "residual shape does not match any clause for an A5 socle"});
    return std::nullopt;
}

// Descriptors that describe Delta(G) = Delta(S) directly: K = S, G = K x R
// with abelian R (or G = K = S). Used for the 2-connected fallback.
bool plain_simple_shape(const GroupDescriptor& d) {
    return d.residual_shape == ResidualShape::simple && d.outer_index == 1 &&
           d.radical_vertices.empty() && d.quotient_vertices.empty();
}

std::optional<PrimeGraph> plain_socle_graph(const SimpleFamily& s) {
    switch (s.tag) {
        case SocleTag::Sz: return sz_graph(s.a);
        case SocleTag::M11: return sporadic_graph(Sporadic::M11);
        case SocleTag::J1: return sporadic_graph(Sporadic::J1);
        case SocleTag::PSL3_4: return sporadic_graph(Sporadic::PSL3_4);
        case SocleTag::PSL2:
        case SocleTag::SL2: return psl2_graph(s.t, s.a);
    }
    return std::nullopt;
}

}  // namespace

Verdict classify(const GroupDescriptor& d) {
    d.validate();
    std::vector<Violation> viols;

    if (is_psl2_family(d.socle)) {
        if (auto v = try_clause_group_C(d, viols)) return *v;
    }
    if (!is_a5_socle(d.socle)) {
        if (auto v = try_clause_group_A(d, viols)) return *v;
    } else {
        if (auto v = try_clause_group_B(d, viols)) return *v;
    }

    // No clause matched. A plain simple-group descriptor may still pin down
    // the graph completely; report 2-connectivity when it holds.
    if (plain_simple_shape(d)) {
        if (auto g = plain_socle_graph(d.socle)) {
            if (g->connectivity_degree() >= 2) {
                Verdict v;
                v.outcome = Outcome::two_connected;
                v.predicted_graph = *g;
                v.violations = std::move(viols);
                v.notes.push_back("degree graph of " + d.socle.name() + " is 2-connected");
                return v;
            }
        }
    }

    Verdict v;
    v.outcome = Outcome::not_covered;
    v.violations = std::move(viols);
    return v;
}

}  // namespace cdg
