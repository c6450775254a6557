#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadprinc/factor.hpp"
#include "quadprinc/ideal.hpp"

namespace quadprinc {

enum class PairSide { Left, Right };

/*
 * Witness that (a, b) is an idempotent pair: Left means a(1−a) = cofactor·b,
 * Right means b(1−b) = cofactor·a.  The identity is exact and re-verifiable
 * from the stored elements alone.
 */
struct PairWitness {
    QuadElem a, b, cofactor;
    PairSide side;

    bool identity_holds() const;
};

// Left preferred when both sides hold; nullopt when neither divisibility
// holds.  Errors when both elements are zero.
std::optional<PairWitness> is_idempotent_pair(const QuadElem& a, const QuadElem& b);

// A generator of I when one exists: the first element of the norm(I) fiber
// lying in I, in canonical (y, x) order.  Such an element generates because
// [ring : zO] = N(z) = [ring : I] forces zO = I.
std::optional<QuadElem> is_principal(const IdealLat& I);

// No element of norm properly dividing N(z) divides z.
bool is_irreducible(const QuadElem& z);

// For comaximal I, J: an element a ∈ I with a − 1 ∈ J, from the unimodular
// transform expressing 1 over the four stacked basis vectors.
QuadElem split_comaximal(const IdealLat& I, const IdealLat& J);

struct IdealPair {
    PairWitness witness;
    IdealLat generated;  // re-verified equal to the input ideal
};

inline constexpr long kDefaultSearchCap = 10000;

// Idempotent pair generating I when I is invertible (absent otherwise —
// pair-generated ideals are always invertible).  search_cap bounds the
// second-generator search; exhaustion throws, it never mis-answers.
std::optional<IdealPair> pair_for_ideal(const IdealLat& I, long search_cap = kDefaultSearchCap);

struct RegularPrimePair {
    PairWitness witness;  // generates P
    QuadElem b_choice;    // the chosen b ∈ P \ P² with bO regular
};

// Constructive form for a regular prime P: choose b ∈ P \ P² with bO
// regular, split bO = P·J, and take a from split_comaximal(P, J).
RegularPrimePair pair_for_regular_prime(const IdealLat& P);

// d = 3 only: the first unit u (in the fixed order 1, −1, ω, −ω, ω̄, −ω̄)
// with z·u ∈ Z[√−3].  Returns (u, zu-as-order-element).
std::pair<QuadElem, QuadElem> unit_normalize(const QuadElem& z);

struct NonPrincWitness {
    long d;
    Int p;                 // odd prime properly dividing 1+d
    IdealLat P;            // ⟨p, 1+η⟩, prime of norm p
    bool prime_checked;
    bool regular_checked;
    bool fiber_empty;      // no element of norm p lies in P
    PairWitness pair;      // generates P
    QuadElem b_choice;
};

// Certificate data for "this order is not PRINC": a regular prime generated
// by an idempotent pair yet principal generator fiber empty.  Every claim is
// re-verified before returning.
NonPrincWitness nonprincipal_witness(long d);

enum class Splitting { Split, Inert, Ramified };

struct ScanRow {
    Int p;
    Splitting splitting;
    std::vector<IdealLat> primes;        // primes of O above p
    std::vector<QuadElem> generators;    // canonical generator of each, in O
};

struct ScanReport {
    long d;
    long p_max;
    std::vector<ScanRow> rows;
    bool all_principal;
    bool parity_ok;  // d=7: every maximal-order element of odd prime norm lies in O
};

// For every odd prime p ≤ p_max, every prime of O = Z[√−d] above p must be
// principal with a generator in O (d ∈ {3, 7}); a failure throws
// ConsistencyError.  For d = 7 additionally checks the parity argument:
// elements of D of odd prime norm have even η-halves, i.e. lie in O.
ScanReport odd_prime_principality_scan(long d, long p_max);

enum class PrincStatus { PID, PrincProperOrder, NotPrinc, Undetermined };

std::string to_string(PrincStatus s);

struct NonPrincipalityWitness {
    PairWitness pair;      // idempotent pair generating `ideal`
    IdealLat ideal;        // non-principal: the norm(ideal) fiber misses it
    std::optional<Int> p;  // residue prime when the ideal is prime
    bool regular;
    std::string kind;      // mechanism: odd-prime-divisor | pair-grid |
                           // regular-ideal | invertible-ideal | maximal-prime
};

struct SweepCounts {
    unsigned long pairs_scanned = 0;
    unsigned long idempotent_pairs_found = 0;
    unsigned long ideals_scanned = 0;
    unsigned long regular_ideals = 0;
    unsigned long invertible_ideals = 0;
    unsigned long counterexamples = 0;
};

struct PrincVerdict {
    long d;
    PrincStatus status;
    long coord_bound = 0;
    Int norm_bound = 0;
    std::optional<NonPrincipalityWitness> witness;    // present iff NotPrinc
    std::vector<NonPrincipalityWitness> counterexamples;  // first few, canonical order
    std::optional<SweepCounts> counts;                // present when a sweep ran
    std::vector<PidEvidence> pid_evidence;            // present when status = PID
    long minkowski = 0;
    bool proven = false;  // status rests on the proven classification, not on the bounded search
};

/*
 * Three deterministic sub-sweeps over O = Z[√−d]:
 *   (i)   every idempotent pair with coordinates in [−coord_bound, coord_bound]²
 *         must generate a principal ideal;
 *   (ii)  every regular ideal of norm ≤ norm_bound must be principal;
 *   (iii) every invertible ideal of norm ≤ norm_bound must be principal.
 * A counterexample proves NotPrinc.  No counterexample yields PID for
 * d ∈ {1, 2}, PrincProperOrder for d ∈ {3, 7}, Undetermined otherwise:
 * a bounded search corroborates, it does not prove.
 */
PrincVerdict princ_sweep(long d, long coord_bound, const Int& norm_bound, int threads = 1);

// Full decision tree: maximal orders via the Minkowski PID test, proper
// orders via the odd-prime witness or the corroborating sweep.
PrincVerdict classify(long d, long coord_bound = 25, const Int& norm_bound = 2000,
                      int threads = 1);

}  // namespace quadprinc
