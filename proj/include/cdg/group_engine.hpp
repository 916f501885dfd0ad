#ifndef CDG_GROUP_ENGINE_HPP
#define CDG_GROUP_ENGINE_HPP

#include <string>
#include <vector>

#include "cdg/numbers.hpp"

namespace cdg {

/// Invertible square matrix over a prime field, entries reduced mod the
/// characteristic. Small on purpose: dimension 1-6 is all the lemma checks
/// need.
struct FqMatrix {
    u64 characteristic = 2;
    unsigned dimension = 1;
    std::vector<u64> entries;  // row-major, dimension * dimension

    u64 at(unsigned r, unsigned c) const { return entries[r * dimension + c]; }
    u64& at(unsigned r, unsigned c) { return entries[r * dimension + c]; }

    FqMatrix operator*(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const = default;
    bool operator<(const FqMatrix& o) const;

    FqMatrix inverse() const;        // Gaussian elimination mod p
    u64 determinant() const;
    u64 order() const;               // multiplicative order (finite by invertibility)
    bool is_identity() const;

    /// Applies the matrix to a column vector encoded base-characteristic
    /// (digit i = coordinate i).
    u64 apply(u64 vector_code) const;
};

FqMatrix identity_matrix(u64 t, unsigned n);

/// Enumeration cap; CDG_GROUP_CAP overrides the default 2^20.
u64 group_cap();

struct MatrixGroup {
    std::vector<FqMatrix> generators;
    std::vector<FqMatrix> elements;  // breadth-first order, deterministic
    u64 order = 0;

    bool contains(const FqMatrix& m) const;
};

/// Breadth-first closure under multiplication. Throws std::overflow_error
/// when the closure would exceed the cap (never truncates silently).
MatrixGroup generate(const std::vector<FqMatrix>& gens, u64 cap = group_cap());

/// Full general linear group GL_n(t) from standard generators.
MatrixGroup general_linear_group(u64 t, unsigned n, u64 cap = group_cap());

/// A matrix group together with its action on all of F_t^n by left
/// multiplication; vectors are encoded as base-t integers.
struct ModuleAction {
    MatrixGroup group;
    std::vector<FqMatrix> kernel;  // elements fixing every vector
    u64 characteristic = 2;
    unsigned dimension = 1;
    u64 module_size = 0;  // t^n
};

ModuleAction make_action(MatrixGroup g);

/// SL2(t^a) in its natural 2-dimensional module over F_{t^a}, written as
/// 2a x 2a matrices over F_t through the regular representation of the
/// field extension (companion matrix of the lexicographically smallest
/// irreducible polynomial of degree a).
ModuleAction sl2_natural(u64 t, unsigned a);

/// One Sylow q-subgroup, grown from a q-element by repeatedly adjoining
/// q-elements of the normalizer until the full q-part is reached.
MatrixGroup sylow_subgroup(const MatrixGroup& g, u64 q);

/// Number of Sylow q-subgroups, |G : N_G(Q)|.
u64 sylow_count(const MatrixGroup& g, u64 q);

struct NqReport {
    bool holds = false;
    std::string reason;              // set when holds is false
    std::vector<u64> witnesses;      // encoded vectors failing the condition
    unsigned d_exponent = 0;         // |V| = r^d
    unsigned b_exponent = 0;         // |C_V(Q)| = r^b for one Sylow q-subgroup
    u64 sylow_count = 0;             // n_q(H)
};

/// Condition N_q: q divides |H : C_H(V)| and the stabilizer of every
/// nonzero vector contains a normal Sylow q-subgroup of H.
NqReport check_Nq(const ModuleAction& act, u64 q);

/// The partition identity n_q(H) * (r^b - 1) = r^d - 1. Requires
/// check_Nq(act, q) to hold; throws std::invalid_argument otherwise.
bool counting_identity(const ModuleAction& act, u64 q);

/// Orbit sizes of the module under the group, sorted ascending.
std::vector<u64> orbits(const ModuleAction& act);

struct SingerReport {
    u64 p = 0;                 // primitive prime divisor of t^a - 1
    u64 centralizer_order = 0;
    bool is_cyclic = false;
};

/// Centralizer in GL_a(t) of an order-p element of a Singer cycle, where
/// p is the primitive prime divisor of t^a - 1. Rejects the
/// Zsygmondy-exceptional pairs with an explanation.
SingerReport singer_check(u64 t, unsigned a);

struct Sl2CentralizerReport {
    u64 centralizer_order = 0;
    bool is_cyclic = false;
    bool equals_center_of_GL2_extension = false;  // all elements are scalar over F_{t^a}
};

/// Centralizer of SL2(t^a) (embedded via sl2_natural) in GL_{2a}(t).
Sl2CentralizerReport sl2_centralizer_check(u64 t, unsigned a);

/// Arithmetic pre-filter: can n be written as 1 + r^b + r^{2b} + ... +
/// r^{(k-1)b} with k >= 2, i.e. as (r^d - 1)/(r^b - 1)? A Sylow count
/// failing this for every prime r rules out the partition identity without
/// constructing the group.
bool nq_count_compatible(u64 n, u64 r);

}  // namespace cdg

#endif
