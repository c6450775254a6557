#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quadprinc {

// All element coordinates, norms and lattice entries are exact unbounded
// integers; nothing in the library ever goes through floating point.
using Int = mpz_class;

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool divisible(const Int& n, const Int& m) {
    return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline Int divexact(const Int& n, const Int& m) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return q;
}

// Floor remainder, always in [0, m) for m > 0.
inline Int mod_floor(const Int& n, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_squarefree(long n);

// Rational primes up to and including `bound`, ascending.
std::vector<long> primes_up_to(long bound);

// Prime factorization by trial division, factors ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

}  // namespace quadprinc
