#ifndef CDG_NUMBERS_HPP
#define CDG_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cdg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string_u128(u128 v);

/// Deterministic primality test for n < 2^128 (trial division plus
/// Miller-Rabin with a fixed witness set and a Lucas step for large inputs).
bool is_prime(u128 n);

struct Factorization {
    u128 value = 1;
    // (prime, exponent), primes strictly increasing, exponents >= 1.
    std::vector<std::pair<u128, unsigned>> factors;

    u128 product() const;
};

/// Complete prime factorization of n >= 1. factor(1) has an empty factor list.
/// Throws std::invalid_argument for n = 0.
Factorization factor(u128 n);

/// Set of distinct primes dividing n (empty for n = 1).
std::set<u64> pi_set(u128 n);

/// Smallest prime dividing a^n - 1 but no a^b - 1 with 1 <= b < n.
/// Empty exactly when (n = 2 and a = 2^c - 1) or (n = 6 and a = 2).
/// Requires a >= 2, n >= 2 and a^n < 2^128.
std::optional<u128> zsygmondy(u128 a, unsigned n);

/// True when (a, n) is one of the two shapes with no primitive prime divisor.
bool zsygmondy_exceptional(u128 a, unsigned n);

enum class PrimeForm {
    mersenne_prime,
    fermat_prime,
    other_prime,
    prime_power_not_prime,
    composite_not_prime_power,
};

struct PrimeFormReport {
    PrimeForm tag;
    bool mersenne = false;  // n prime and n + 1 a power of 2
    bool fermat = false;    // n prime and n - 1 a power of 2
};

/// Classifies n >= 2. 3 = 2^2 - 1 = 2 + 1 is both Mersenne and Fermat; the
/// tag reports mersenne_prime in that case and both flags are set.
PrimeFormReport prime_form(u128 n);

const char* prime_form_name(PrimeForm f);

}  // namespace cdg

#endif
