#include "cdg/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdg {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

// (a * b) mod m without overflow for 128-bit operands.
u128 mulmod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    // Fast path: fits in native 128-bit multiply.
    if (a <= UINT64_MAX && b <= UINT64_MAX) return (a * b) % m;
    u128 result = 0;
    while (b > 0) {
        if (b & 1) {
            result = (result >= m - a) ? result - (m - a) : result + a;
        }
        a = (a >= m - a) ? a - (m - a) : a + a;
        b >>= 1;
    }
    return result;
}

u128 powmod(u128 base, u128 exp, u128 m) {
    u128 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin(u128 n, u128 witness) {
    u128 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    u128 x = powmod(witness % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Pollard's rho with Brent cycle detection.
u128 pollard_rho(u128 n) {
    if ((n & 1) == 0) return 2;
    for (u128 c = 1;; ++c) {
        u128 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd_u128(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u128 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

bool is_power_of_two(u128 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

bool is_prime(u128 n) {
    if (n < 2) return false;
    for (u128 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // First 12 prime witnesses: deterministic below 3.18e23, far past every
    // quantity this library handles; larger inputs get a strong probable
    // prime answer with the same witness set.
    for (u128 w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin(n, w)) return false;
    }
    return true;
}

u128 Factorization::product() const {
    u128 result = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e; ++i) result *= p;
    }
    return result;
}

Factorization factor(u128 n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u128> primes;
    // Trial division first; Pollard rho mops up large cofactors.
    for (u128 p = 2; p <= 997 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return f;
}

std::set<u64> pi_set(u128 n) {
    if (n == 0) throw std::invalid_argument("pi_set: n must be positive");
    std::set<u64> primes;
    for (const auto& [p, e] : factor(n).factors) {
        if (p > UINT64_MAX) throw std::overflow_error("pi_set: prime exceeds 64 bits");
        primes.insert(static_cast<u64>(p));
    }
    return primes;
}

bool zsygmondy_exceptional(u128 a, unsigned n) {
    if (n == 6 && a == 2) return true;
    if (n == 2 && is_power_of_two(a + 1)) return true;
    return false;
}

std::optional<u128> zsygmondy(u128 a, unsigned n) {
    if (a < 2 || n < 2) throw std::invalid_argument("zsygmondy: need a >= 2, n >= 2");
    u128 power = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (power > (~static_cast<u128>(0)) / a) {
            throw std::overflow_error("zsygmondy: a^n exceeds 128 bits");
        }
        power *= a;
    }
    if (zsygmondy_exceptional(a, n)) return std::nullopt;
    // A prime divides a^b - 1 for some b < n iff it divides a^d - 1 for a
    // proper divisor d of n, so it suffices to check proper divisors.
    std::vector<u128> lower;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            u128 v = 1;
            for (unsigned i = 0; i < d; ++i) v *= a;
            lower.push_back(v - 1);
        }
    }
    Factorization f = factor(power - 1);
    for (const auto& [q, e] : f.factors) {
        bool primitive = true;
        for (u128 v : lower) {
            if (v % q == 0) {
                primitive = false;
                break;
            }
        }
        if (primitive) return q;
    }
    return std::nullopt;  // unreachable for non-exceptional inputs
}

PrimeFormReport prime_form(u128 n) {
    if (n < 2) throw std::invalid_argument("prime_form: n must be >= 2");
    PrimeFormReport r{PrimeForm::composite_not_prime_power, false, false};
    if (is_prime(n)) {
        r.mersenne = is_power_of_two(n + 1);
        r.fermat = is_power_of_two(n - 1);
        if (r.mersenne) {
            r.tag = PrimeForm::mersenne_prime;
        } else if (r.fermat) {
            r.tag = PrimeForm::fermat_prime;
        } else {
            r.tag = PrimeForm::other_prime;
        }
        return r;
    }
    Factorization f = factor(n);
    r.tag = f.factors.size() == 1 ? PrimeForm::prime_power_not_prime
                                  : PrimeForm::composite_not_prime_power;
    return r;
}

const char* prime_form_name(PrimeForm f) {
    switch (f) {
        case PrimeForm::mersenne_prime: return "mersenne_prime";
        case PrimeForm::fermat_prime: return "fermat_prime";
        case PrimeForm::other_prime: return "other_prime";
        case PrimeForm::prime_power_not_prime: return "prime_power_not_prime";
        case PrimeForm::composite_not_prime_power: return "composite_not_prime_power";
    }
    return "?";
}

}  // namespace cdg
