#include "quadprinc/princ.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "quadprinc/errors.hpp"

namespace quadprinc {

bool PairWitness::identity_holds() const {
    QuadElem one(a.ring, 1, 0);
    if (side == PairSide::Left) return a * (one - a) == cofactor * b;
    return b * (one - b) == cofactor * a;
}

std::optional<PairWitness> is_idempotent_pair(const QuadElem& a, const QuadElem& b) {
    require_same_ring(a, b);
    if (a.is_zero() && b.is_zero())
        throw UsageError("is_idempotent_pair: both elements are zero");
    QuadElem one(a.ring, 1, 0);
    QuadElem zero(a.ring, 0, 0);

    // Left: a(1−a) ∈ bR
    QuadElem ta = a * (one - a);
    if (b.is_zero()) {
        if (ta.is_zero()) return PairWitness{a, b, zero, PairSide::Left};
    } else if (auto q = divides(b, ta)) {
        return PairWitness{a, b, *q, PairSide::Left};
    }
    // Right: b(1−b) ∈ aR
    QuadElem tb = b * (one - b);
    if (a.is_zero()) {
        if (tb.is_zero()) return PairWitness{a, b, zero, PairSide::Right};
    } else if (auto q = divides(a, tb)) {
        return PairWitness{a, b, *q, PairSide::Right};
    }
    return std::nullopt;
}

std::optional<QuadElem> is_principal(const IdealLat& I) {
    // z ∈ I with N(z) = [ring : I] generates: zO ⊆ I with equal index.
    for (const auto& z : enumerate_norm(I.ring, I.norm())) {
        if (contains(I, z)) return z;
    }
    return std::nullopt;
}

bool is_irreducible(const QuadElem& z) {
    Int n = norm(z);
    if (n == 0) throw UsageError("is_irreducible: element is zero");
    if (n == 1) throw UsageError("is_irreducible: element is a unit");
    // A proper factor would have norm properly dividing N(z).
    for (Int m = 2; m * m <= n; ++m) {
        if (!divisible(n, m)) continue;
        for (const auto& w : enumerate_norm(z.ring, m)) {
            if (divides(w, z)) return false;
        }
        Int co = divexact(n, m);
        if (co != m && co != n) {
            for (const auto& w : enumerate_norm(z.ring, co)) {
                if (divides(w, z)) return false;
            }
        }
    }
    return true;
}

QuadElem split_comaximal(const IdealLat& I, const IdealLat& J) {
    if (I.ring != J.ring) throw RingMismatchError();
    HnfTransform t = hnf_with_transform(
        {Vec2{I.a, 0}, Vec2{I.b, I.c}, Vec2{J.a, 0}, Vec2{J.b, J.c}});
    if (!(t.h.rank == 2 && t.h.a == 1 && t.h.c == 1)) throw NotComaximalError();
    // Row 0 of the transform writes 1 over the four stacked generators;
    // keep the I-part.
    const auto& u = t.U[0];
    QuadElem a = QuadElem(I.ring, u[0] * I.a + u[1] * I.b, u[1] * I.c);
    QuadElem one(I.ring, 1, 0);
    if (!contains(I, a) || !contains(J, a - one))
        throw ConsistencyError("split_comaximal: postcondition failed");
    return a;
}

namespace {

// First nonzero element of I in canonical order (norm ascending, then (y, x)).
QuadElem first_element(const IdealLat& I) {
    Int step = I.norm();
    for (long k = 1; k <= 100000; ++k) {
        for (const auto& z : enumerate_norm(I.ring, k * step)) {
            if (contains(I, z)) return z;
        }
    }
    throw ConsistencyError("first_element: no element found (unreachable)");
}

// Integer solution (λ, μ) of λ·u + μ·v = w in the ring, if one exists.
std::optional<std::pair<QuadElem, QuadElem>> solve_two_gen(const QuadElem& u, const QuadElem& v,
                                                           const QuadElem& w) {
    auto theta_vec = [](const QuadElem& z) {
        QuadElem t = z * QuadElem(z.ring, 0, 1);
        return Vec2{t.x, t.y};
    };
    // Columns of the 2×4 system, as rows of the transpose.
    HnfTransform t =
        hnf_with_transform({Vec2{u.x, u.y}, theta_vec(u), Vec2{v.x, v.y}, theta_vec(v)});
    if (t.h.rank != 2) return std::nullopt;
    if (!divisible(w.y, t.h.c)) return std::nullopt;
    Int s2 = divexact(w.y, t.h.c);
    Int r = w.x - s2 * t.h.b;
    if (!divisible(r, t.h.a)) return std::nullopt;
    Int s1 = divexact(r, t.h.a);
    std::array<Int, 4> coef;
    for (size_t k = 0; k < 4; ++k) coef[k] = s1 * t.U[0][k] + s2 * t.U[1][k];
    QuadElem lam(u.ring, coef[0], coef[1]);
    QuadElem mu(u.ring, coef[2], coef[3]);
    if (lam * u + mu * v != w) throw ConsistencyError("solve_two_gen: verification failed");
    return std::make_pair(lam, mu);
}

}  // namespace

std::optional<IdealPair> pair_for_ideal(const IdealLat& I, long search_cap) {
    const RingDesc& ring = I.ring;
    QuadElem zero(ring, 0, 0), one(ring, 1, 0);
    if (I.is_whole_ring()) {
        PairWitness w{zero, one, zero, PairSide::Left};
        return IdealPair{w, IdealLat::from_generators(ring, {zero, one})};
    }
    if (!is_invertible(I)) return std::nullopt;  // pair-generated ⟹ invertible

    QuadElem a = first_element(I);
    QuadElem asq = a * a;
    // Invertible ideals are 1½-generated: some b ∈ I has ⟨a², b⟩ = I.
    long tried = 0;
    Int step = I.norm();
    for (long k = 1;; ++k) {
        for (const auto& b : enumerate_norm(ring, k * step)) {
            if (!contains(I, b)) continue;
            if (++tried > search_cap)
                throw SearchExhaustedError("pair_for_ideal: search cap " +
                                           std::to_string(search_cap) + " exhausted");
            if (IdealLat::from_generators(ring, {asq, b}) != I) continue;
            auto lm = solve_two_gen(asq, b, a);
            if (!lm) throw ConsistencyError("pair_for_ideal: a not representable over ⟨a², b⟩");
            auto [lam, mu] = *lm;
            // a = λa² + μb  ⟹  (λa)(1 − λa) = λμ·b
            PairWitness w{lam * a, b, lam * mu, PairSide::Left};
            if (!w.identity_holds())
                throw ConsistencyError("pair_for_ideal: pair identity failed");
            IdealLat gen = IdealLat::from_generators(ring, {w.a, w.b});
            if (gen != I) throw ConsistencyError("pair_for_ideal: pair does not generate I");
            return IdealPair{w, gen};
        }
    }
}

RegularPrimePair pair_for_regular_prime(const IdealLat& P) {
    if (!is_prime_ideal(P)) throw NotPrimeError();
    if (!is_regular(P)) throw NotRegularError();
    const RingDesc& ring = P.ring;
    IdealLat P2 = ideal_mul(P, P);

    // Canonical b: first element of P outside P² whose principal ideal is
    // regular.  The congruence system of the classical construction is not
    // needed; these two conditions suffice.
    std::optional<QuadElem> b;
    Int step = P.norm();
    for (long k = 1; !b && k <= 100000; ++k) {
        for (const auto& z : enumerate_norm(ring, k * step)) {
            if (!contains(P, z) || contains(P2, z)) continue;
            if (!is_regular(IdealLat::principal(z))) continue;
            b = z;
            break;
        }
    }
    if (!b) throw ConsistencyError("pair_for_regular_prime: no admissible b found");

    // bO = P·J with J the product of the other primary components.
    auto comps = primary_decomposition(IdealLat::principal(*b));
    std::optional<IdealLat> J;
    bool saw_p = false;
    for (const auto& c : comps) {
        if (c.P == P) {
            if (c.Q != P)
                throw ConsistencyError("pair_for_regular_prime: P-component is not P itself");
            saw_p = true;
            continue;
        }
        J = J ? ideal_mul(*J, c.Q) : c.Q;
    }
    if (!saw_p) throw ConsistencyError("pair_for_regular_prime: bO has no P-component");
    if (!J) J = IdealLat::whole_ring(ring);

    QuadElem a = split_comaximal(P, *J);
    QuadElem one(ring, 1, 0);
    auto cof = (*b).is_zero() ? std::nullopt : divides(*b, a * (one - a));
    if (!cof) throw ConsistencyError("pair_for_regular_prime: a(1−a) not divisible by b");
    PairWitness w{a, *b, *cof, PairSide::Left};
    if (IdealLat::from_generators(ring, {w.a, w.b}) != P)
        throw ConsistencyError("pair_for_regular_prime: pair does not generate P");
    return RegularPrimePair{w, *b};
}

std::pair<QuadElem, QuadElem> unit_normalize(const QuadElem& z) {
    if (z.ring.d != 3 || !z.ring.uses_omega())
        throw UsageError("unit_normalize: element must live in Z[(1+√−3)/2]");
    RingDesc O = RingDesc::order(3);
    const RingDesc& D = z.ring;
    // Fixed unit order: 1, −1, ω, −ω, ω̄, −ω̄.
    const QuadElem us[6] = {QuadElem(D, 1, 0),  QuadElem(D, -1, 0), QuadElem(D, 0, 1),
                            QuadElem(D, 0, -1), QuadElem(D, 1, -1), QuadElem(D, -1, 1)};
    for (const auto& u : us) {
        if (auto w = convert(z * u, O)) return {u, *w};
    }
    throw ConsistencyError("unit_normalize: no unit moves z into the order");
}

NonPrincWitness nonprincipal_witness(long d) {
    RingDesc O = RingDesc::order(d);
    // Smallest odd prime properly dividing 1+d.
    Int target = Int(d) + 1;
    std::optional<Int> p;
    for (const auto& [q, e] : factorize(target)) {
        if (q == 2 || q == target) continue;
        p = q;
        break;
    }
    if (!p) throw NoOddPrimeDivisorError(d);

    IdealLat P = IdealLat::from_generators(O, {QuadElem(O, *p, 0), QuadElem(O, 1, 1)});
    if (P.norm() != *p) throw ConsistencyError("nonprincipal_witness: ⟨p, 1+η⟩ has wrong norm");
    if (!is_prime_ideal(P)) throw ConsistencyError("nonprincipal_witness: ⟨p, 1+η⟩ not prime");
    if (!is_regular(P)) throw ConsistencyError("nonprincipal_witness: ⟨p, 1+η⟩ not regular");
    if (is_principal(P))
        throw ConsistencyError("nonprincipal_witness: ⟨p, 1+η⟩ unexpectedly principal");
    RegularPrimePair rp = pair_for_regular_prime(P);
    return NonPrincWitness{d, *p, P, true, true, true, rp.witness, rp.b_choice};
}

ScanReport odd_prime_principality_scan(long d, long p_max) {
    if (d != 3 && d != 7) throw UsageError("odd_prime_principality_scan: d must be 3 or 7");
    RingDesc O = RingDesc::order(d);
    RingDesc D = RingDesc::maximal(d);
    ScanReport rep{d, p_max, {}, true, true};
    for (long p : primes_up_to(p_max)) {
        if (p == 2) continue;
        ScanRow row;
        row.p = p;
        row.primes = primes_above(O, p);
        if (row.primes.size() == 2)
            row.splitting = Splitting::Split;
        else if (row.primes[0].norm() == Int(p) * p)
            row.splitting = Splitting::Inert;
        else
            row.splitting = Splitting::Ramified;
        for (const auto& P : row.primes) {
            auto g = is_principal(P);
            if (!g)
                throw ConsistencyError("odd prime " + std::to_string(p) +
                                       " has a non-principal prime above it (d = " +
                                       std::to_string(d) + ")");
            row.generators.push_back(*g);
        }
        if (d == 7 && row.splitting != Splitting::Inert) {
            // Parity argument: a² + 7b² = 4p forces even η-halves, so every
            // maximal-order element of norm p already lies in the order.
            for (const auto& alpha : enumerate_norm(D, p)) {
                if (!convert(alpha, O))
                    throw ConsistencyError("norm-" + std::to_string(p) +
                                           " element of the maximal order escapes Z[√−7]");
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string to_string(PrincStatus s) {
    switch (s) {
        case PrincStatus::PID: return "PID";
        case PrincStatus::PrincProperOrder: return "PrincProperOrder";
        case PrincStatus::NotPrinc: return "NotPrinc";
        case PrincStatus::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

constexpr size_t kMaxRecordedCounterexamples = 10;

struct ChunkResult {
    SweepCounts counts;
    std::vector<NonPrincipalityWitness> counterexamples;
};

NonPrincipalityWitness make_grid_witness(const QuadElem& a, const QuadElem& b,
                                         const IdealLat& ideal) {
    auto w = is_idempotent_pair(a, b);
    if (!w) throw ConsistencyError("grid witness: pair test disagrees with fast scan");
    return NonPrincipalityWitness{*w, ideal,
                                  is_prime(ideal.norm()) ? std::optional<Int>(ideal.norm())
                                                         : std::nullopt,
                                  is_regular(ideal), "pair-grid"};
}

// Sub-sweep (i) over one contiguous range of first indices.  The grid is
// the canonical (y, x)-ordered coordinate box; unordered pairs {e_i, e_j}
// are scanned as i ≤ j.
ChunkResult grid_chunk(const RingDesc& ring, const std::vector<std::pair<long, long>>& es,
                       size_t i_begin, size_t i_end) {
    ChunkResult res;
    long d = ring.d;
    size_t n = es.size();
    std::vector<Int> nrm(n), tx(n), ty(n);
    for (size_t i = 0; i < n; ++i) {
        Int x = es[i].first, y = es[i].second;
        nrm[i] = x * x + d * (y * y);
        tx[i] = x * (1 - x) + d * (y * y);  // a(1−a) coordinates
        ty[i] = y * (1 - 2 * x);
    }
    Int qx, qy;
    auto fast_divides = [&](size_t t, size_t j) {
        // does e_j divide (tx[t], ty[t])?
        long bx = es[j].first, by = es[j].second;
        qx = tx[t] * bx + d * (ty[t] * by);
        qy = ty[t] * bx - tx[t] * by;
        return divisible(qx, nrm[j]) && divisible(qy, nrm[j]);
    };
    for (size_t i = i_begin; i < i_end; ++i) {
        bool zi = nrm[i] == 0;
        for (size_t j = i; j < n; ++j) {
            bool zj = nrm[j] == 0;
            if (zi && zj) continue;
            ++res.counts.pairs_scanned;
            if (zi || zj) {
                // a pair with a zero member always qualifies and generates
                // the principal ideal of the nonzero member
                ++res.counts.idempotent_pairs_found;
                continue;
            }
            bool hit = (tx[i] == 0 && ty[i] == 0) || fast_divides(i, j) ||
                       (tx[j] == 0 && ty[j] == 0) || fast_divides(j, i);
            if (!hit) continue;
            ++res.counts.idempotent_pairs_found;
            QuadElem a(ring, es[i].first, es[i].second);
            QuadElem b(ring, es[j].first, es[j].second);
            IdealLat I = IdealLat::from_generators(ring, {a, b});
            if (is_principal(I)) continue;
            ++res.counts.counterexamples;
            if (res.counterexamples.size() < kMaxRecordedCounterexamples)
                res.counterexamples.push_back(make_grid_witness(a, b, I));
        }
    }
    return res;
}

// Sub-sweeps (ii) and (iii) over one contiguous range of the ideal list.
ChunkResult ideal_chunk(const std::vector<IdealLat>& ideals, size_t begin, size_t end,
                        long search_cap) {
    ChunkResult res;
    for (size_t k = begin; k < end; ++k) {
        const IdealLat& I = ideals[k];
        ++res.counts.ideals_scanned;
        bool reg = is_regular(I);
        bool inv = is_invertible(I);
        if (reg) ++res.counts.regular_ideals;
        if (inv) ++res.counts.invertible_ideals;
        if (!reg && !inv) continue;
        if (is_principal(I)) continue;
        auto record = [&](const char* kind) {
            ++res.counts.counterexamples;
            if (res.counterexamples.size() >= kMaxRecordedCounterexamples) return;
            auto pair = pair_for_ideal(I, search_cap);
            if (!pair)
                throw ConsistencyError("sweep: non-principal regular/invertible ideal "
                                       "has no generating pair");
            res.counterexamples.push_back(NonPrincipalityWitness{
                pair->witness, I,
                is_prime(I.norm()) ? std::optional<Int>(I.norm()) : std::nullopt, reg, kind});
        };
        if (reg) record("regular-ideal");
        if (inv) record("invertible-ideal");
    }
    return res;
}

void merge(ChunkResult& into, ChunkResult&& part) {
    into.counts.pairs_scanned += part.counts.pairs_scanned;
    into.counts.idempotent_pairs_found += part.counts.idempotent_pairs_found;
    into.counts.ideals_scanned += part.counts.ideals_scanned;
    into.counts.regular_ideals += part.counts.regular_ideals;
    into.counts.invertible_ideals += part.counts.invertible_ideals;
    into.counts.counterexamples += part.counts.counterexamples;
    for (auto& w : part.counterexamples) {
        if (into.counterexamples.size() < kMaxRecordedCounterexamples)
            into.counterexamples.push_back(std::move(w));
    }
}

// Runs fn over `total` items split into contiguous chunks; results are
// merged in chunk order, so the outcome is independent of the thread count.
template <typename Fn>
ChunkResult run_chunked(size_t total, int threads, Fn fn) {
    ChunkResult res;
    if (threads < 2 || total < 2) {
        merge(res, fn(0, total));
        return res;
    }
    size_t nchunks = static_cast<size_t>(threads);
    std::vector<std::future<ChunkResult>> futs;
    for (size_t c = 0; c < nchunks; ++c) {
        size_t b = total * c / nchunks;
        size_t e = total * (c + 1) / nchunks;
        futs.push_back(std::async(std::launch::async, [=, &fn] { return fn(b, e); }));
    }
    for (auto& f : futs) merge(res, f.get());
    return res;
}

}  // namespace

PrincVerdict princ_sweep(long d, long coord_bound, const Int& norm_bound, int threads) {
    RingDesc ring = RingDesc::order(d);
    PrincVerdict v;
    v.d = d;
    v.coord_bound = coord_bound;
    v.norm_bound = norm_bound;

    std::vector<std::pair<long, long>> es;
    for (long y = -coord_bound; y <= coord_bound; ++y)
        for (long x = -coord_bound; x <= coord_bound; ++x) es.emplace_back(x, y);

    ChunkResult all = run_chunked(es.size(), threads, [&](size_t b, size_t e) {
        return grid_chunk(ring, es, b, e);
    });

    std::vector<IdealLat> ideals = enumerate_ideals(ring, norm_bound);
    merge(all, run_chunked(ideals.size(), threads, [&](size_t b, size_t e) {
              return ideal_chunk(ideals, b, e, kDefaultSearchCap);
          }));

    v.counts = all.counts;
    v.counterexamples = std::move(all.counterexamples);
    if (!v.counterexamples.empty()) {
        v.status = PrincStatus::NotPrinc;
        v.witness = v.counterexamples.front();
        return v;
    }
    // A clean bounded search is only upgraded to a verdict on the proven
    // classification; elsewhere it stays Undetermined.
    if (d == 1 || d == 2) {
        v.status = PrincStatus::PID;
        v.proven = true;
        v.minkowski = minkowski_bound(RingDesc::maximal(d));
        if (!is_pid_maximal(d, v.pid_evidence))
            throw ConsistencyError("princ_sweep: d=1,2 must be PIDs");
    } else if (d == 3 || d == 7) {
        v.status = PrincStatus::PrincProperOrder;
        v.proven = true;
    } else {
        v.status = PrincStatus::Undetermined;
    }
    return v;
}

PrincVerdict classify(long d, long coord_bound, const Int& norm_bound, int threads) {
    RingDesc O = RingDesc::order(d);
    PrincVerdict v;
    v.d = d;
    v.coord_bound = coord_bound;
    v.norm_bound = norm_bound;

    if (O.is_maximal()) {
        RingDesc D = RingDesc::maximal(d);
        v.minkowski = minkowski_bound(D);
        if (is_pid_maximal(d, v.pid_evidence)) {
            v.status = PrincStatus::PID;
            v.proven = true;
            return v;
        }
        // A Dedekind domain that is not a PID has a non-principal prime
        // within the Minkowski bound; it is regular and pair-generated.
        for (long p : primes_up_to(v.minkowski)) {
            for (const auto& P : primes_above(D, p)) {
                if (is_principal(P)) continue;
                RegularPrimePair rp = pair_for_regular_prime(P);
                v.status = PrincStatus::NotPrinc;
                v.witness = NonPrincipalityWitness{rp.witness, P, Int(p), true, "maximal-prime"};
                return v;
            }
        }
        throw ConsistencyError("classify: non-PID maximal order with all small primes principal");
    }

    if (!is_pid_maximal(d)) {
        // Integral closure is not a PID, so some regular prime of O is not
        // principal; scan odd primes for the first witness.
        for (long p : primes_up_to(100000)) {
            if (p == 2) continue;
            for (const auto& P : primes_above(O, p)) {
                if (is_principal(P)) continue;
                RegularPrimePair rp = pair_for_regular_prime(P);
                v.status = PrincStatus::NotPrinc;
                v.witness = NonPrincipalityWitness{rp.witness, P, Int(p), true, "regular-prime"};
                return v;
            }
        }
        throw ConsistencyError("classify: no non-principal regular prime found");
    }

    try {
        NonPrincWitness w = nonprincipal_witness(d);
        v.status = PrincStatus::NotPrinc;
        v.witness = NonPrincipalityWitness{w.pair, w.P, w.p, true, "odd-prime-divisor"};
        return v;
    } catch (const NoOddPrimeDivisorError&) {
        // 1+d is a 2-power: the corroborating sweep decides what can be said.
        return princ_sweep(d, coord_bound, norm_bound, threads);
    }
}

}  // namespace quadprinc
