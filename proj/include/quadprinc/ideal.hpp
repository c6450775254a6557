#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadprinc/lattice.hpp"
#include "quadprinc/ring.hpp"

namespace quadprinc {

/*
 * A nonzero ideal as a rank-2 lattice in Hermite normal form, with Z-basis
 * {a·1, b + c·θ}.  Invariants: a, c > 0, 0 ≤ b < a, c | a, c | b, and the
 * lattice is closed under multiplication by θ.  Equal ideals have equal
 * triples, so equality is structural.  The zero ideal is unrepresentable.
 */
struct IdealLat {
    RingDesc ring;
    Int a, b, c;

    static IdealLat from_generators(const RingDesc& ring, const std::vector<QuadElem>& gens);
    static IdealLat from_hnf(const RingDesc& ring, Int a, Int b, Int c);  // validates closure
    static IdealLat whole_ring(const RingDesc& ring);
    static IdealLat principal(const QuadElem& g);

    Int norm() const { return a * c; }  // index [ring : L]
    bool is_whole_ring() const { return a == 1 && c == 1; }

    QuadElem gen1() const { return QuadElem(ring, a, 0); }
    QuadElem gen2() const { return QuadElem(ring, b, c); }

    // Canonical text form "[a, b+c·t]", t ∈ {η, ω}.
    std::string str() const;

    friend bool operator==(const IdealLat&, const IdealLat&) = default;
};

// True iff the HNF triple (a, b, c) spans an ideal (θ-closed lattice).
bool is_theta_closed(const RingDesc& ring, const Int& a, const Int& b, const Int& c);

bool contains(const IdealLat& I, const QuadElem& z);
bool contains_ideal(const IdealLat& I, const IdealLat& J);  // J ⊆ I

IdealLat ideal_sum(const IdealLat& I, const IdealLat& J);
IdealLat ideal_mul(const IdealLat& I, const IdealLat& J);
IdealLat ideal_pow(const IdealLat& I, long e);
IdealLat intersect(const IdealLat& I, const IdealLat& J);
IdealLat scale(const IdealLat& I, const Int& n);  // n·I

// {x ∈ ring : x·J ⊆ I}
IdealLat colon(const IdealLat& I, const IdealLat& J);

// Fractional ideal num/den, normalized so that no integer > 1 divides den
// together with every entry of num.  den = 1 iff integral.
struct FracIdeal {
    IdealLat num;
    Int den;

    bool is_integral() const { return den == 1; }
    friend bool operator==(const FracIdeal&, const FracIdeal&) = default;
};

// (ring : I) inside the fraction field; may be non-integral.
FracIdeal colon_ring_over(const IdealLat& I);

// I is invertible iff I·(ring : I) = ring.
bool is_invertible(const IdealLat& I);

// Extension O → D and contraction D → O for d ≡ 3 (mod 4); identity maps
// otherwise.  Contraction goes through η-coordinates with denominator 2.
IdealLat extend(const IdealLat& I);
IdealLat contract(const IdealLat& J);

// All ideals of norm ≤ bound, sorted by (norm, a, b).
std::vector<IdealLat> enumerate_ideals(const RingDesc& ring, const Int& bound);

// All ideals whose norm is a power p, p², ... ≤ bound of the given prime.
std::vector<IdealLat> enumerate_ideals_prime_power(const RingDesc& ring, const Int& p,
                                                   const Int& bound);

// Elements of I with norm in [1, norm_cap], sorted by (norm, y, x).
std::vector<QuadElem> elements_of(const IdealLat& I, const Int& norm_cap);

}  // namespace quadprinc
