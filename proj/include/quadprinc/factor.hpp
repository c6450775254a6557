#pragma once

#include <optional>
#include <vector>

#include "quadprinc/ideal.hpp"

namespace quadprinc {

/*
 * Conductor of the maximal order into Z[√−d], as an ideal of the given
 * ring: ⟨2, 1+η⟩ in the order and 2D in the maximal ring when d ≡ 3
 * (mod 4); the whole ring otherwise.
 */
IdealLat conductor(const RingDesc& ring);

// Comaximal with the conductor.
bool is_regular(const IdealLat& I);

// All prime ideals containing p: the θ-closed index-p sublattices (one or
// two), or [pO] when p is inert.  Sorted by b.
std::vector<IdealLat> primes_above(const RingDesc& ring, const Int& p);

// Primes containing a proper ideal I, collected over the prime divisors of
// its norm.  Sorted by (norm, a, b).
std::vector<IdealLat> primes_containing(const IdealLat& I);

bool is_prime_ideal(const IdealLat& I);    // I maximal
bool is_primary(const IdealLat& I);        // exactly one prime contains I
IdealLat radical(const IdealLat& I);

struct PrimaryComponent {
    IdealLat Q;                    // primary ideal
    IdealLat P;                    // its radical, a maximal ideal
    bool regular;
    std::optional<long> exponent;  // e with Q = P^e, present iff regular
};

// Pairwise-comaximal components whose product equals I; the product is
// re-verified before returning.
std::vector<PrimaryComponent> primary_decomposition(const IdealLat& I);

// Stable limit of iterated colon(·, sO); exposed so decompositions can be
// cross-checked with different saturation elements.
IdealLat saturate(const IdealLat& I, const QuadElem& s);

struct ChainReport {
    IdealLat P;
    Int norm_bound;
    bool prime_regular;
    std::vector<IdealLat> primary_ideals;           // sorted by (norm, a, b)
    bool is_chain;
    std::optional<std::pair<IdealLat, IdealLat>> incomparable;  // first witness pair
    std::vector<long> power_exponents;              // per ideal, when regular
    bool powers_ok;                                 // each ideal = P^e, when regular
    bool invariant_ok;                              // is_chain == prime_regular
};

// Enumerates the P-primary ideals of norm ≤ norm_bound and reports whether
// they form a containment chain, and (for regular P) whether each is a
// power of P.
ChainReport primary_chain_check(const IdealLat& P, const Int& norm_bound);

struct PidEvidence {
    Int p;
    IdealLat prime;
    QuadElem generator;
};

long minkowski_bound(const RingDesc& maximal_ring);

// The maximal order Z[ω]/Z[η] is a PID iff every prime above a rational
// prime up to the Minkowski bound is principal.
bool is_pid_maximal(long d);
bool is_pid_maximal(long d, std::vector<PidEvidence>& evidence);

}  // namespace quadprinc
