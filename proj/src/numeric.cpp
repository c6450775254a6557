#include "quadprinc/numeric.hpp"

namespace quadprinc {

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (long q = p * p; q <= bound; q += p) sieve[static_cast<size_t>(q)] = false;
    }
    return out;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    Int p = 2;
    while (p * p <= n) {
        if (divisible(n, p)) {
            int e = 0;
            do {
                n = divexact(n, p);
                ++e;
            } while (divisible(n, p));
            out.emplace_back(p, e);
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace quadprinc
