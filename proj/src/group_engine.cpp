#include "cdg/group_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace cdg {

namespace {

u64 powmod_small(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

u64 field_inverse(u64 x, u64 p) {
    if (x % p == 0) throw std::domain_error("field_inverse: zero");
    return powmod_small(x, p - 2, p);
}

u64 checked_power_u64(u64 t, unsigned a) {
    u128 v = 1;
    for (unsigned i = 0; i < a; ++i) {
        v *= t;
        if (v > UINT64_MAX) throw std::overflow_error("power exceeds 64 bits");
    }
    return static_cast<u64>(v);
}

}  // namespace

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (characteristic != o.characteristic || dimension != o.dimension) {
        throw std::invalid_argument("FqMatrix: mixed characteristic or dimension");
    }
    FqMatrix r{characteristic, dimension, std::vector<u64>(dimension * dimension, 0)};
    for (unsigned i = 0; i < dimension; ++i) {
        for (unsigned k = 0; k < dimension; ++k) {
            u64 a = at(i, k);
            if (!a) continue;
            for (unsigned j = 0; j < dimension; ++j) {
                r.at(i, j) = (r.at(i, j) + a * o.at(k, j)) % characteristic;
            }
        }
    }
    return r;
}

bool FqMatrix::operator<(const FqMatrix& o) const {
    if (characteristic != o.characteristic) return characteristic < o.characteristic;
    if (dimension != o.dimension) return dimension < o.dimension;
    return entries < o.entries;
}

u64 FqMatrix::determinant() const {
    const u64 p = characteristic;
    const unsigned n = dimension;
    std::vector<u64> m = entries;
    u64 det = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m[pivot * n + col] % p == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
            det = (p - det % p) % p;
        }
        u64 pv = m[col * n + col] % p;
        det = det * pv % p;
        u64 inv = field_inverse(pv, p);
        for (unsigned row = col + 1; row < n; ++row) {
            u64 f = m[row * n + col] % p * inv % p;
            if (!f) continue;
            for (unsigned j = col; j < n; ++j) {
                m[row * n + j] = (m[row * n + j] + (p - f) * m[col * n + j]) % p;
            }
        }
    }
    return det;
}

FqMatrix FqMatrix::inverse() const {
    const u64 p = characteristic;
    const unsigned n = dimension;
    std::vector<u64> m = entries;
    FqMatrix inv = identity_matrix(p, n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m[pivot * n + col] % p == 0) ++pivot;
        if (pivot == n) throw std::domain_error("FqMatrix::inverse: singular matrix");
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        u64 f = field_inverse(m[col * n + col] % p, p);
        for (unsigned j = 0; j < n; ++j) {
            m[col * n + j] = m[col * n + j] * f % p;
            inv.at(col, j) = inv.at(col, j) * f % p;
        }
        for (unsigned row = 0; row < n; ++row) {
            if (row == col) continue;
            u64 g = m[row * n + col] % p;
            if (!g) continue;
            for (unsigned j = 0; j < n; ++j) {
                m[row * n + j] = (m[row * n + j] + (p - g) * m[col * n + j]) % p;
                inv.at(row, j) = (inv.at(row, j) + (p - g) * inv.at(col, j)) % p;
            }
        }
    }
    return inv;
}

bool FqMatrix::is_identity() const {
    for (unsigned i = 0; i < dimension; ++i) {
        for (unsigned j = 0; j < dimension; ++j) {
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

u64 FqMatrix::order() const {
    FqMatrix m = *this;
    u64 ord = 1;
    while (!m.is_identity()) {
        m = m * *this;
        ++ord;
        if (ord > (1u << 24)) throw std::overflow_error("FqMatrix::order: runaway");
    }
    return ord;
}

u64 FqMatrix::apply(u64 vector_code) const {
    const u64 p = characteristic;
    const unsigned n = dimension;
    u64 digits[8];
    for (unsigned i = 0; i < n; ++i) {
        digits[i] = vector_code % p;
        vector_code /= p;
    }
    u64 out = 0, weight = 1;
    for (unsigned r = 0; r < n; ++r) {
        u64 s = 0;
        for (unsigned c = 0; c < n; ++c) s += at(r, c) * digits[c];
        out += s % p * weight;
        weight *= p;
    }
    return out;
}

FqMatrix identity_matrix(u64 t, unsigned n) {
    FqMatrix m{t, n, std::vector<u64>(n * n, 0)};
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

u64 group_cap() {
    if (const char* env = std::getenv("CDG_GROUP_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 20;
}

bool MatrixGroup::contains(const FqMatrix& m) const {
    return std::find(elements.begin(), elements.end(), m) != elements.end();
}

MatrixGroup generate(const std::vector<FqMatrix>& gens, u64 cap) {
    if (gens.empty()) throw std::invalid_argument("generate: no generators");
    const u64 t = gens[0].characteristic;
    const unsigned n = gens[0].dimension;
    for (const FqMatrix& g : gens) {
        if (g.characteristic != t || g.dimension != n) {
            throw std::invalid_argument("generate: generators disagree on field or dimension");
        }
        if (g.determinant() == 0) throw std::invalid_argument("generate: singular generator");
    }
    MatrixGroup out;
    out.generators = gens;
    std::set<FqMatrix> seen;
    std::vector<FqMatrix> queue{identity_matrix(t, n)};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        FqMatrix cur = queue[head];  // copy: queue may reallocate
        for (const FqMatrix& g : gens) {
            FqMatrix next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) {
                    throw std::overflow_error("generate: closure exceeds cap " +
                                              std::to_string(cap));
                }
                queue.push_back(std::move(next));
            }
        }
    }
    out.elements = std::move(queue);
    out.order = out.elements.size();
    return out;
}

MatrixGroup general_linear_group(u64 t, unsigned n, u64 cap) {
    std::vector<FqMatrix> gens;
    // Smallest primitive root mod t.
    u64 g = 1;
    if (t > 2) {
        for (u64 c = 2; c < t; ++c) {
            u64 x = c, ord = 1;
            while (x != 1) {
                x = x * c % t;
                ++ord;
            }
            if (ord == t - 1) {
                g = c;
                break;
            }
        }
        FqMatrix diag = identity_matrix(t, n);
        diag.at(0, 0) = g;
        gens.push_back(diag);
    }
    if (n > 1) {
        FqMatrix cycle{t, n, std::vector<u64>(n * n, 0)};
        for (unsigned i = 0; i < n; ++i) cycle.at((i + 1) % n, i) = 1;
        gens.push_back(cycle);
        FqMatrix transvection = identity_matrix(t, n);
        transvection.at(0, 1) = 1;
        gens.push_back(transvection);
    }
    if (gens.empty()) gens.push_back(identity_matrix(t, n));
    MatrixGroup gl = generate(gens, cap);
    u128 expected = 1;
    u64 tn = checked_power_u64(t, n);
    for (unsigned i = 0; i < n; ++i) expected *= tn - checked_power_u64(t, i);
    if (gl.order != expected) throw std::logic_error("general_linear_group: wrong order");
    return gl;
}

ModuleAction make_action(MatrixGroup g) {
    ModuleAction act;
    act.characteristic = g.elements[0].characteristic;
    act.dimension = g.elements[0].dimension;
    act.module_size = checked_power_u64(act.characteristic, act.dimension);
    for (const FqMatrix& m : g.elements) {
        bool trivial = true;
        for (u64 v = 0; v < act.module_size && trivial; ++v) {
            if (m.apply(v) != v) trivial = false;
        }
        if (trivial) act.kernel.push_back(m);
    }
    act.group = std::move(g);
    return act;
}

namespace {

// --- polynomial arithmetic over F_t (coefficient vectors, index = degree) ---

using Poly = std::vector<u64>;

Poly poly_mod(Poly a, const Poly& m, u64 t) {
    // m monic of degree deg(m)
    while (a.size() >= m.size()) {
        u64 lead = a.back() % t;
        if (lead) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                a[shift + i] = (a[shift + i] + (t - lead) * m[i] % t + t * t) % t;
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 t) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % t;
    }
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (u64 c : a) {
        if (c) return false;
    }
    return true;
}

// monic polynomial from an integer code: coefficients c_0..c_{a-1} are the
// base-t digits (c_{a-1} most significant), plus a leading 1.
Poly poly_from_code(u64 code, unsigned deg, u64 t) {
    Poly p(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        p[i] = code % t;
        code /= t;
    }
    p[deg] = 1;
    return p;
}

bool poly_irreducible(const Poly& p, u64 t) {
    unsigned deg = static_cast<unsigned>(p.size()) - 1;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        u64 count = checked_power_u64(t, d);
        for (u64 code = 0; code < count; ++code) {
            Poly div = poly_from_code(code, d, t);
            if (poly_is_zero(poly_mod(p, div, t))) return false;
        }
    }
    return true;
}

/// Lexicographically smallest irreducible monic polynomial of degree a,
/// comparing coefficient tuples (c_{a-1}, ..., c_0).
Poly smallest_irreducible(u64 t, unsigned a) {
    u64 count = checked_power_u64(t, a);
    for (u64 code = 0; code < count; ++code) {
        Poly p = poly_from_code(code, a, t);
        if (poly_irreducible(p, t)) return p;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

FqMatrix companion(const Poly& p, u64 t) {
    unsigned a = static_cast<unsigned>(p.size()) - 1;
    FqMatrix c{t, a, std::vector<u64>(a * a, 0)};
    for (unsigned i = 0; i + 1 < a; ++i) c.at(i + 1, i) = 1;
    for (unsigned i = 0; i < a; ++i) c.at(i, a - 1) = (t - p[i] % t) % t;
    return c;
}

// 2x2 matrix over F_{t^a} given by a x a blocks -> 2a x 2a matrix over F_t.
FqMatrix blowup2(const FqMatrix& b00, const FqMatrix& b01, const FqMatrix& b10,
                 const FqMatrix& b11) {
    u64 t = b00.characteristic;
    unsigned a = b00.dimension;
    FqMatrix m{t, 2 * a, std::vector<u64>(4u * a * a, 0)};
    for (unsigned i = 0; i < a; ++i) {
        for (unsigned j = 0; j < a; ++j) {
            m.at(i, j) = b00.at(i, j);
            m.at(i, a + j) = b01.at(i, j);
            m.at(a + i, j) = b10.at(i, j);
            m.at(a + i, a + j) = b11.at(i, j);
        }
    }
    return m;
}

FqMatrix zero_matrix(u64 t, unsigned n) { return {t, n, std::vector<u64>(n * n, 0)}; }

u64 q_part(u64 n, u64 q) {
    u64 part = 1;
    while (n % q == 0) {
        n /= q;
        part *= q;
    }
    return part;
}

bool is_power_of_prime(u64 n, u64 q) {
    while (n % q == 0) n /= q;
    return n == 1;
}

std::vector<FqMatrix> normalizer_elements(const MatrixGroup& g, const std::set<FqMatrix>& sub) {
    std::vector<FqMatrix> out;
    for (const FqMatrix& x : g.elements) {
        FqMatrix xinv = x.inverse();
        bool ok = true;
        for (const FqMatrix& s : sub) {
            if (!sub.count(x * s * xinv)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

}  // namespace

ModuleAction sl2_natural(u64 t, unsigned a) {
    if (!is_prime(t) || a == 0 || a > 3) {
        throw std::invalid_argument("sl2_natural: t must be prime, 1 <= a <= 3");
    }
    u64 q = checked_power_u64(t, a);
    if (q > 16) throw std::overflow_error("sl2_natural: t^a must be <= 16");
    Poly p = smallest_irreducible(t, a);
    FqMatrix x = companion(p, t);
    FqMatrix one = identity_matrix(t, a);
    FqMatrix zero = zero_matrix(t, a);
    std::vector<FqMatrix> gens;
    FqMatrix xi = one;
    for (unsigned i = 0; i < a; ++i) {
        gens.push_back(blowup2(one, xi, zero, one));
        gens.push_back(blowup2(one, zero, xi, one));
        xi = xi * x;
    }
    MatrixGroup g = generate(gens);
    if (g.order != static_cast<u64>(q) * (q - 1) * (q + 1)) {
        throw std::logic_error("sl2_natural: unexpected group order");
    }
    return make_action(std::move(g));
}

MatrixGroup sylow_subgroup(const MatrixGroup& g, u64 q) {
    if (!is_prime(q)) throw std::invalid_argument("sylow_subgroup: q must be prime");
    const u64 target = q_part(g.order, q);
    const u64 t = g.elements[0].characteristic;
    const unsigned n = g.elements[0].dimension;
    if (target == 1) return generate({identity_matrix(t, n)});

    // Seed with a q-element of maximal order.
    FqMatrix seed = identity_matrix(t, n);
    u64 best = 1;
    for (const FqMatrix& m : g.elements) {
        u64 ord = m.order();
        if (ord > best && is_power_of_prime(ord, q)) {
            best = ord;
            seed = m;
        }
    }
    if (best == 1) throw std::logic_error("sylow_subgroup: no q-element found");

    MatrixGroup p = generate({seed});
    while (p.order < target) {
        std::set<FqMatrix> sub(p.elements.begin(), p.elements.end());
        bool grew = false;
        for (const FqMatrix& x : normalizer_elements(g, sub)) {
            if (sub.count(x)) continue;
            u64 ord = x.order();
            if (ord == 1 || !is_power_of_prime(ord, q)) continue;
            std::vector<FqMatrix> gens = p.generators;
            gens.push_back(x);
            MatrixGroup bigger = generate(gens);
            if (!is_power_of_prime(bigger.order, q)) continue;  // defensive
            p = std::move(bigger);
            grew = true;
            break;
        }
        if (!grew) throw std::logic_error("sylow_subgroup: stuck below the q-part");
    }
    return p;
}

u64 sylow_count(const MatrixGroup& g, u64 q) {
    MatrixGroup p = sylow_subgroup(g, q);
    std::set<FqMatrix> sub(p.elements.begin(), p.elements.end());
    u64 norm = normalizer_elements(g, sub).size();
    return g.order / norm;
}

NqReport check_Nq(const ModuleAction& act, u64 q) {
    if (!is_prime(q)) throw std::invalid_argument("check_Nq: q must be prime");
    NqReport rep;
    rep.d_exponent = act.dimension;
    const u64 r = act.characteristic;
    const u64 index = act.group.order / act.kernel.size();  // |H : C_H(V)|
    if (index % q != 0) {
        rep.reason = "q does not divide |H : C_H(V)|";
        return rep;
    }

    MatrixGroup syl = sylow_subgroup(act.group, q);
    rep.sylow_count = sylow_count(act.group, q);
    u64 fixed = 0;
    for (u64 v = 0; v < act.module_size; ++v) {
        bool fix = true;
        for (const FqMatrix& m : syl.elements) {
            if (m.apply(v) != v) {
                fix = false;
                break;
            }
        }
        if (fix) ++fixed;
    }
    unsigned b = 0;
    for (u64 f = fixed; f > 1; f /= r) ++b;
    rep.b_exponent = b;

    const u64 qpart = q_part(act.group.order, q);
    for (u64 v = 1; v < act.module_size; ++v) {
        std::vector<FqMatrix> stab;
        for (const FqMatrix& m : act.group.elements) {
            if (m.apply(v) == v) stab.push_back(m);
        }
        if (stab.size() % qpart != 0) {
            rep.witnesses.push_back(v);
            continue;
        }
        MatrixGroup stab_group;
        stab_group.generators = stab;
        stab_group.elements = stab;
        stab_group.order = stab.size();
        MatrixGroup p = sylow_subgroup(stab_group, q);
        if (p.order != qpart) {
            rep.witnesses.push_back(v);
            continue;
        }
        // Q must be normal in the stabilizer.
        std::set<FqMatrix> sub(p.elements.begin(), p.elements.end());
        bool normal = true;
        for (const FqMatrix& s : stab) {
            FqMatrix sinv = s.inverse();
            for (const FqMatrix& e : p.elements) {
                if (!sub.count(s * e * sinv)) {
                    normal = false;
                    break;
                }
            }
            if (!normal) break;
        }
        if (!normal) rep.witnesses.push_back(v);
    }
    if (!rep.witnesses.empty()) {
        rep.reason = "some nonzero vector's stabilizer lacks a normal Sylow q-subgroup";
        return rep;
    }
    rep.holds = true;
    return rep;
}

bool counting_identity(const ModuleAction& act, u64 q) {
    NqReport rep = check_Nq(act, q);
    if (!rep.holds) {
        throw std::invalid_argument("counting_identity: condition N_q does not hold (" +
                                    rep.reason + ")");
    }
    const u64 r = act.characteristic;
    u64 rb = checked_power_u64(r, rep.b_exponent);
    u64 rd = checked_power_u64(r, rep.d_exponent);
    return rep.sylow_count * (rb - 1) == rd - 1;
}

std::vector<u64> orbits(const ModuleAction& act) {
    std::vector<char> seen(act.module_size, 0);
    std::vector<u64> sizes;
    for (u64 start = 0; start < act.module_size; ++start) {
        if (seen[start]) continue;
        std::vector<u64> stack{start};
        seen[start] = 1;
        u64 size = 0;
        while (!stack.empty()) {
            u64 v = stack.back();
            stack.pop_back();
            ++size;
            for (const FqMatrix& g : act.group.generators) {
                u64 w = g.apply(v);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace {

// All invertible n x n matrices over F_t commuting with every matrix in ms.
std::vector<FqMatrix> commuting_invertibles(u64 t, unsigned n, const std::vector<FqMatrix>& ms) {
    u64 total = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        u128 next = static_cast<u128>(total) * t;
        if (next > (1ull << 40)) throw std::overflow_error("centralizer scan too large");
        total = static_cast<u64>(next);
    }
    std::vector<FqMatrix> out;
    FqMatrix m{t, n, std::vector<u64>(n * n, 0)};
    for (u64 code = 0; code < total; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < n * n; ++i) {
            m.entries[i] = c % t;
            c /= t;
        }
        bool commutes = true;
        for (const FqMatrix& x : ms) {
            if (!(m * x == x * m)) {
                commutes = false;
                break;
            }
        }
        if (commutes && m.determinant() != 0) out.push_back(m);
    }
    return out;
}

bool cyclic_of_order(const std::vector<FqMatrix>& elems) {
    for (const FqMatrix& m : elems) {
        if (m.order() == elems.size()) return true;
    }
    return elems.size() == 1;
}

}  // namespace

SingerReport singer_check(u64 t, unsigned a) {
    if (!is_prime(t) || a < 2 || a > 4) {
        throw std::invalid_argument("singer_check: t must be prime, 2 <= a <= 4");
    }
    auto z = zsygmondy(t, a);
    if (!z) {
        std::string why = (a == 2) ? "n = 2 and a = 2^c - 1" : "n = 6 and a = 2";
        throw std::invalid_argument(
            "singer_check: no primitive prime divisor (exceptional case " + why + ")");
    }
    SingerReport rep;
    rep.p = static_cast<u64>(*z);
    u64 qm1 = checked_power_u64(t, a) - 1;

    // Find a primitive irreducible polynomial: its companion matrix
    // generates a full Singer cycle of order t^a - 1.
    FqMatrix singer = identity_matrix(t, a);
    u64 count = checked_power_u64(t, a);
    bool found = false;
    for (u64 code = 0; code < count && !found; ++code) {
        Poly p = poly_from_code(code, a, t);
        if (!poly_irreducible(p, t)) continue;
        FqMatrix c = companion(p, t);
        if (c.order() == qm1) {
            singer = c;
            found = true;
        }
    }
    if (!found) throw std::logic_error("singer_check: no primitive polynomial found");

    FqMatrix m = identity_matrix(t, a);
    for (u64 i = 0; i < qm1 / rep.p; ++i) m = m * singer;  // singer^{(t^a-1)/p}, order p
    std::vector<FqMatrix> cent = commuting_invertibles(t, a, {m});
    rep.centralizer_order = cent.size();
    rep.is_cyclic = cyclic_of_order(cent);
    return rep;
}

Sl2CentralizerReport sl2_centralizer_check(u64 t, unsigned a) {
    if (a < 1 || a > 2) throw std::invalid_argument("sl2_centralizer_check: 1 <= a <= 2");
    ModuleAction act = sl2_natural(t, a);
    std::vector<FqMatrix> cent =
        commuting_invertibles(t, 2 * a, act.group.generators);
    Sl2CentralizerReport rep;
    rep.centralizer_order = cent.size();
    rep.is_cyclic = cyclic_of_order(cent);

    // The center of the F_{t^a}-points of GL2 consists of the blow-ups of
    // scalar matrices: block-diagonal with equal blocks lying in F_t[x]
    // (x = the companion matrix of the field extension).
    Poly p = smallest_irreducible(t, a);
    FqMatrix x = companion(p, t);
    bool all_scalar = true;
    for (const FqMatrix& e : cent) {
        FqMatrix block{t, a, std::vector<u64>(a * a, 0)};
        for (unsigned i = 0; i < a; ++i) {
            for (unsigned j = 0; j < a; ++j) block.at(i, j) = e.at(i, j);
        }
        bool ok = block * x == x * block;
        for (unsigned i = 0; i < 2 * a && ok; ++i) {
            for (unsigned j = 0; j < 2 * a && ok; ++j) {
                bool same_block = (i < a) == (j < a);
                if (!same_block) {
                    ok = e.at(i, j) == 0;
                } else if (i >= a) {
                    ok = e.at(i, j) == block.at(i - a, j - a);
                }
            }
        }
        if (!ok) {
            all_scalar = false;
            break;
        }
    }
    rep.equals_center_of_GL2_extension = all_scalar;
    return rep;
}

bool nq_count_compatible(u64 n, u64 r) {
    if (n <= 1 || r < 2) return false;
    for (unsigned b = 1;; ++b) {
        u128 rb = 1;
        for (unsigned i = 0; i < b; ++i) rb *= r;
        if (rb >= n) return false;
        // 1 + r^b + r^{2b} + ... until the sum reaches n
        u128 sum = 1, term = 1;
        while (sum < n) {
            term *= rb;
            sum += term;
        }
        if (sum == n) return true;
    }
}

}  // namespace cdg
