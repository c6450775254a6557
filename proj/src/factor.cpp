#include "quadprinc/factor.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "quadprinc/errors.hpp"
#include "quadprinc/princ.hpp"

namespace quadprinc {

IdealLat conductor(const RingDesc& ring) {
    if (ring.d % 4 != 3) return IdealLat::whole_ring(ring);
    if (ring.uses_omega()) {
        // as an ideal of D the conductor is 2D
        return IdealLat::principal(QuadElem(ring, 2, 0));
    }
    // ⟨2, 1+η⟩
    return IdealLat::from_generators(ring, {QuadElem(ring, 2, 0), QuadElem(ring, 1, 1)});
}

bool is_regular(const IdealLat& I) {
    IdealLat f = conductor(I.ring);
    if (f.is_whole_ring()) return true;
    return ideal_sum(I, f).is_whole_ring();
}

std::vector<IdealLat> primes_above(const RingDesc& ring, const Int& p) {
    if (p < 2 || !is_prime(p)) throw UsageError("primes_above: p must be a rational prime");
    std::vector<IdealLat> out;
    // Index-p sublattices containing p·ring are the lines of (Z/p)²; the
    // θ-closed ones among (p, m, 1) are exactly the primes of norm p.
    for (Int m = 0; m < p; ++m) {
        if (is_theta_closed(ring, p, m, 1)) out.push_back(IdealLat{ring, p, m, 1});
    }
    if (out.empty()) out.push_back(IdealLat{ring, p, 0, p});  // inert: pO itself is maximal
    return out;
}

std::vector<IdealLat> primes_containing(const IdealLat& I) {
    if (I.is_whole_ring()) throw UsageError("primes_containing: ideal is the whole ring");
    std::vector<IdealLat> out;
    for (const auto& [p, e] : factorize(I.norm())) {
        for (const auto& P : primes_above(I.ring, p)) {
            if (contains_ideal(P, I)) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealLat& u, const IdealLat& v) {
        return std::tuple(u.norm(), u.a, u.b) < std::tuple(v.norm(), v.a, v.b);
    });
    return out;
}

bool is_prime_ideal(const IdealLat& I) {
    auto ps = primes_containing(I);
    return std::find(ps.begin(), ps.end(), I) != ps.end();
}

bool is_primary(const IdealLat& I) { return primes_containing(I).size() == 1; }

IdealLat radical(const IdealLat& I) {
    auto ps = primes_containing(I);
    IdealLat r = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) r = intersect(r, ps[i]);
    return r;
}

IdealLat saturate(const IdealLat& I, const QuadElem& s) {
    IdealLat sO = IdealLat::principal(s);
    IdealLat q = I;
    for (int iter = 0; iter < 64; ++iter) {
        IdealLat next = colon(q, sO);
        if (next == q) return q;
        q = next;
    }
    throw ConsistencyError("saturate: no stabilization within 64 steps");
}

namespace {

std::optional<long> power_exponent(const IdealLat& P, const IdealLat& Q) {
    Int pn = P.norm();
    Int qn = Q.norm();
    long e = 0;
    while (qn > 1) {
        if (!divisible(qn, pn)) return std::nullopt;
        qn = divexact(qn, pn);
        ++e;
    }
    if (e == 0) return std::nullopt;
    if (ideal_pow(P, e) != Q) return std::nullopt;
    return e;
}

}  // namespace

std::vector<PrimaryComponent> primary_decomposition(const IdealLat& I) {
    if (I.is_whole_ring()) throw UsageError("primary_decomposition: ideal is the whole ring");
    auto ps = primes_containing(I);
    std::vector<PrimaryComponent> comps;
    if (ps.size() == 1) {
        comps.push_back(PrimaryComponent{I, ps[0], is_regular(I), std::nullopt});
    } else {
        for (size_t i = 0; i < ps.size(); ++i) {
            std::optional<IdealLat> others;
            for (size_t j = 0; j < ps.size(); ++j) {
                if (j == i) continue;
                others = others ? intersect(*others, ps[j]) : ps[j];
            }
            QuadElem s = split_comaximal(*others, ps[i]);  // s in the others, s − 1 in P_i
            comps.push_back(PrimaryComponent{saturate(I, s), ps[i], false, std::nullopt});
        }
        IdealLat prod = comps[0].Q;
        for (size_t i = 1; i < comps.size(); ++i) prod = ideal_mul(prod, comps[i].Q);
        if (prod != I) throw ConsistencyError("primary_decomposition: component product != input");
    }
    for (auto& c : comps) {
        c.regular = is_regular(c.Q);
        if (c.regular) {
            c.exponent = power_exponent(c.P, c.Q);
            if (!c.exponent)
                throw ConsistencyError(
                    "primary_decomposition: regular component is not a prime power");
        }
    }
    return comps;
}

ChainReport primary_chain_check(const IdealLat& P, const Int& norm_bound) {
    if (!is_prime_ideal(P)) throw NotPrimeError();
    ChainReport rep;
    rep.P = P;
    rep.norm_bound = norm_bound;
    rep.prime_regular = is_regular(P);

    // A P-primary ideal has p-power index, p the residue characteristic:
    // q | [O:I] for a prime q forces a maximal ideal over q to contain I.
    Int p = factorize(P.norm()).front().first;
    for (const auto& I : enumerate_ideals_prime_power(P.ring, p, norm_bound)) {
        auto ps = primes_containing(I);
        if (ps.size() == 1 && ps[0] == P) rep.primary_ideals.push_back(I);
    }

    rep.is_chain = true;
    for (size_t i = 0; i < rep.primary_ideals.size() && rep.is_chain; ++i) {
        for (size_t j = i + 1; j < rep.primary_ideals.size(); ++j) {
            const auto& u = rep.primary_ideals[i];
            const auto& v = rep.primary_ideals[j];
            if (!contains_ideal(u, v) && !contains_ideal(v, u)) {
                rep.is_chain = false;
                rep.incomparable = std::make_pair(u, v);
                break;
            }
        }
    }

    rep.powers_ok = true;
    if (rep.prime_regular) {
        for (const auto& I : rep.primary_ideals) {
            auto e = power_exponent(P, I);
            if (!e) {
                rep.powers_ok = false;
                break;
            }
            rep.power_exponents.push_back(*e);
        }
    }
    rep.invariant_ok = (rep.is_chain == rep.prime_regular);
    return rep;
}

long minkowski_bound(const RingDesc& maximal_ring) {
    double ad = std::abs(maximal_ring.disc().get_d());
    return static_cast<long>(std::floor((2.0 / 3.14159265358979323846) * std::sqrt(ad)));
}

bool is_pid_maximal(long d, std::vector<PidEvidence>& evidence) {
    RingDesc D = RingDesc::maximal(d);
    evidence.clear();
    bool pid = true;
    for (long p : primes_up_to(minkowski_bound(D))) {
        for (const auto& P : primes_above(D, p)) {
            auto g = is_principal(P);
            if (!g) {
                pid = false;
                continue;
            }
            evidence.push_back(PidEvidence{p, P, *g});
        }
    }
    return pid;
}

bool is_pid_maximal(long d) {
    std::vector<PidEvidence> ev;
    return is_pid_maximal(d, ev);
}

}  // namespace quadprinc
