#include <doctest.h>

#include <set>

#include "quadprinc/princ.hpp"

using namespace quadprinc;

namespace {

QuadElem e(const RingDesc& r, long x, long y) { return QuadElem(r, x, y); }

IdealLat hnf(const RingDesc& r, long a, long b, long c) {
    return IdealLat::from_hnf(r, a, b, c);
}

// 2×2 matrix check: an idempotent pair is a row of a nonzero idempotent
// singular matrix [[a, b], [c, 1−a]] (trace 1, det 0 ⟹ T² = T).
bool matrix_consistent(const PairWitness& w) {
    const QuadElem& a = w.side == PairSide::Left ? w.a : w.b;
    const QuadElem& b = w.side == PairSide::Left ? w.b : w.a;
    QuadElem one(a.ring, 1, 0);
    QuadElem t11 = a, t12 = b, t21 = w.cofactor, t22 = one - a;
    // det = a(1−a) − bc = 0
    if (!(t11 * t22 - t12 * t21).is_zero()) return false;
    // T² = T entrywise
    return t11 * t11 + t12 * t21 == t11 && t11 * t12 + t12 * t22 == t12 &&
           t21 * t11 + t22 * t21 == t21 && t21 * t12 + t22 * t22 == t22;
}

}  // namespace

TEST_CASE("is_idempotent_pair: frozen cases") {
    RingDesc O11 = RingDesc::order(11);
    auto w = is_idempotent_pair(e(O11, 2, 2), e(O11, 3, 0));
    REQUIRE(w);
    CHECK(w->side == PairSide::Left);
    CHECK(w->cofactor == e(O11, 14, -2));  // (2+2η)(−1−2η) = 3·(14−2η)
    CHECK(w->identity_holds());
    CHECK(matrix_consistent(*w));

    RingDesc O3 = RingDesc::order(3);
    auto w0 = is_idempotent_pair(e(O3, 0, 0), e(O3, 5, -2));
    REQUIRE(w0);
    CHECK(w0->side == PairSide::Left);
    CHECK(w0->cofactor == e(O3, 0, 0));

    CHECK(!is_idempotent_pair(e(O3, 2, 0), e(O3, 1, 1)));  // neither side divides
    CHECK_THROWS_AS(is_idempotent_pair(e(O3, 0, 0), e(O3, 0, 0)), UsageError);

    // b = 0: Left iff a ∈ {0, 1}, Right always
    auto wa = is_idempotent_pair(e(O3, 1, 0), e(O3, 0, 0));
    REQUIRE(wa);
    CHECK(wa->side == PairSide::Left);
    auto wb = is_idempotent_pair(e(O3, 7, 1), e(O3, 0, 0));
    REQUIRE(wb);
    CHECK(wb->side == PairSide::Right);
}

TEST_CASE("is_principal") {
    RingDesc O11 = RingDesc::order(11);
    CHECK(!is_principal(hnf(O11, 3, 1, 1)));  // x² + 11y² = 3 has no solution

    RingDesc O7 = RingDesc::order(7);
    auto g = is_principal(hnf(O7, 11, 2, 1));
    REQUIRE(g);
    CHECK(*g == e(O7, -2, -1));  // canonical-first associate of 2+η
    CHECK(IdealLat::principal(*g) == hnf(O7, 11, 2, 1));

    RingDesc O3 = RingDesc::order(3);
    auto g5 = is_principal(IdealLat::principal(e(O3, 5, 0)));
    REQUIRE(g5);
    CHECK(*g5 == e(O3, -5, 0));
    CHECK(IdealLat::principal(*g5) == IdealLat::principal(e(O3, 5, 0)));
}

TEST_CASE("is_principal soundness/completeness against the box oracle") {
    for (long d : {3, 11}) {
        RingDesc O = RingDesc::order(d);
        for (const auto& I : enumerate_ideals(O, 60)) {
            auto g = is_principal(I);
            if (g) {
                CHECK(IdealLat::principal(*g) == I);
            } else {
                // brute box scan: no element of the right norm lies in I
                long bound = 20;
                for (long y = -bound; y <= bound; ++y)
                    for (long x = -bound; x <= bound; ++x) {
                        QuadElem z = e(O, x, y);
                        if (norm(z) == I.norm()) CHECK(!contains(I, z));
                    }
            }
        }
    }
}

TEST_CASE("is_irreducible") {
    RingDesc O7 = RingDesc::order(7);
    CHECK(is_irreducible(e(O7, 1, 1)));  // no norm-2 or norm-4 divisor
    RingDesc O3 = RingDesc::order(3);
    CHECK(is_irreducible(e(O3, 2, 0)));  // no elements of norm 2
    CHECK(!is_irreducible(e(O3, 4, 0)));
    CHECK(is_irreducible(e(O3, 1, 1)));
    CHECK_THROWS_AS(is_irreducible(e(O3, 0, 0)), UsageError);
    CHECK_THROWS_AS(is_irreducible(e(O3, -1, 0)), UsageError);
}

TEST_CASE("split_comaximal") {
    RingDesc O11 = RingDesc::order(11);
    IdealLat P = hnf(O11, 3, 1, 1), Q = hnf(O11, 3, 2, 1);
    QuadElem a = split_comaximal(P, Q);
    CHECK(contains(P, a));
    CHECK(contains(Q, a - e(O11, 1, 0)));

    RingDesc O3 = RingDesc::order(3);
    QuadElem a2 = split_comaximal(IdealLat::whole_ring(O3), hnf(O3, 7, 2, 1));
    CHECK(contains(hnf(O3, 7, 2, 1), a2 - e(O3, 1, 0)));

    QuadElem a3 = split_comaximal(hnf(O3, 7, 2, 1), hnf(O3, 7, 5, 1));
    CHECK(contains(hnf(O3, 7, 2, 1), a3));
    CHECK(contains(hnf(O3, 7, 5, 1), a3 - e(O3, 1, 0)));

    IdealLat f = hnf(O3, 2, 1, 1);
    CHECK_THROWS_AS(split_comaximal(f, f), NotComaximalError);
}

TEST_CASE("pair_for_ideal") {
    RingDesc O3 = RingDesc::order(3);
    CHECK(!pair_for_ideal(hnf(O3, 2, 1, 1)));  // conductor is not invertible

    RingDesc O11 = RingDesc::order(11);
    auto p = pair_for_ideal(hnf(O11, 3, 1, 1), 50);
    REQUIRE(p);
    CHECK(p->witness.identity_holds());
    CHECK(p->generated == hnf(O11, 3, 1, 1));
    CHECK(matrix_consistent(p->witness));

    auto pw = pair_for_ideal(IdealLat::whole_ring(O3), 1);
    REQUIRE(pw);
    CHECK(pw->generated == IdealLat::whole_ring(O3));

    CHECK_THROWS_AS(pair_for_ideal(hnf(O11, 3, 1, 1), 0), SearchExhaustedError);
}

TEST_CASE("pair_for_ideal generates exactly the invertible ideals (norm ≤ 40)") {
    for (long d : {3, 11}) {
        RingDesc O = RingDesc::order(d);
        for (const auto& I : enumerate_ideals(O, 40)) {
            auto p = pair_for_ideal(I);
            CAPTURE(I.str());
            CHECK(p.has_value() == is_invertible(I));
            if (p) {
                CHECK(p->generated == I);
                CHECK(p->witness.identity_holds());
            }
        }
    }
}

TEST_CASE("pair_for_regular_prime") {
    RingDesc O11 = RingDesc::order(11);
    IdealLat P = hnf(O11, 3, 1, 1);
    auto rp = pair_for_regular_prime(P);
    CHECK(rp.witness.identity_holds());
    CHECK(IdealLat::from_generators(O11, {rp.witness.a, rp.witness.b}) == P);
    CHECK(!is_principal(P));
    CHECK(contains(P, rp.b_choice));
    CHECK(!contains(ideal_mul(P, P), rp.b_choice));
    CHECK(is_regular(IdealLat::principal(rp.b_choice)));

    RingDesc O3 = RingDesc::order(3);
    IdealLat P7 = hnf(O3, 7, 2, 1);
    auto rp7 = pair_for_regular_prime(P7);
    CHECK(IdealLat::from_generators(O3, {rp7.witness.a, rp7.witness.b}) == P7);
    auto g7 = is_principal(P7);
    REQUIRE(g7);
    CHECK(IdealLat::principal(*g7) == P7);

    RingDesc O19 = RingDesc::order(19);
    IdealLat P5 = hnf(O19, 5, 1, 1);  // 5 divides 20
    auto rp5 = pair_for_regular_prime(P5);
    CHECK(IdealLat::from_generators(O19, {rp5.witness.a, rp5.witness.b}) == P5);

    CHECK_THROWS_AS(pair_for_regular_prime(hnf(O3, 2, 1, 1)), NotRegularError);
    CHECK_THROWS_AS(pair_for_regular_prime(IdealLat::principal(e(O11, 3, 0))), NotPrimeError);
}

TEST_CASE("unit_normalize") {
    RingDesc D = RingDesc::maximal(3);
    RingDesc O = RingDesc::order(3);

    auto [u1, z1] = unit_normalize(e(D, 0, 1));  // ω ↦ u = ω̄ = (1−η)/2, zu = 1
    CHECK(u1 == e(D, 1, -1));
    CHECK(z1 == e(O, 1, 0));

    auto [u2, z2] = unit_normalize(e(D, 1, 1));  // (3+η)/2 ↦ u = ω, zu = η
    CHECK(u2 == e(D, 0, 1));
    CHECK(z2 == e(O, 0, 1));

    auto [u3, z3] = unit_normalize(e(D, 2, 0));
    CHECK(u3 == e(D, 1, 0));
    CHECK(z3 == e(O, 2, 0));

    CHECK_THROWS_AS(unit_normalize(e(O, 1, 0)), UsageError);
}

TEST_CASE("unit_normalize: exhaustive box with the exactly-two-units property") {
    RingDesc D = RingDesc::maximal(3);
    RingDesc O = RingDesc::order(3);
    auto ug = units(D);
    for (long b = -20; b <= 20; ++b) {
        for (long a = -20; a <= 20; ++a) {
            if ((a - b) % 2 != 0 || (a == 0 && b == 0)) continue;
            QuadElem z(D, (a - b) / 2, b);  // (a + bη)/2
            auto [u, zu] = unit_normalize(z);
            CHECK(convert(z * u, O) == zu);
            if (a % 2 != 0) {  // z ∉ O
                int works = 0;
                for (const auto& w : ug.units)
                    if (convert(z * w, O)) ++works;
                CHECK(works == 2);
            }
        }
    }
}

TEST_CASE("nonprincipal_witness") {
    auto w11 = nonprincipal_witness(11);
    CHECK(w11.p == 3);
    CHECK(w11.P == hnf(RingDesc::order(11), 3, 1, 1));
    CHECK(w11.pair.identity_holds());
    CHECK(w11.fiber_empty);
    // the inequality chain behind non-principality: p² < (1+d)²
    CHECK(w11.p * w11.p < Int(12) * 12);

    CHECK(nonprincipal_witness(19).p == 5);
    CHECK(nonprincipal_witness(43).p == 11);
    CHECK(nonprincipal_witness(67).p == 17);
    CHECK(nonprincipal_witness(163).p == 41);
    CHECK(nonprincipal_witness(5).p == 3);

    CHECK_THROWS_AS(nonprincipal_witness(3), NoOddPrimeDivisorError);
    CHECK_THROWS_AS(nonprincipal_witness(7), NoOddPrimeDivisorError);
    CHECK_THROWS_AS(nonprincipal_witness(1), NoOddPrimeDivisorError);
}

TEST_CASE("odd_prime_principality_scan") {
    auto rep3 = odd_prime_principality_scan(3, 50);
    CHECK(rep3.all_principal);
    bool saw_split7 = false, saw_ram3 = false, saw_inert5 = false;
    for (const auto& row : rep3.rows) {
        for (size_t i = 0; i < row.primes.size(); ++i) {
            CHECK(contains(row.primes[i], row.generators[i]));
            CHECK(norm(row.generators[i]) == row.primes[i].norm());
        }
        if (row.p == 7) {
            saw_split7 = row.splitting == Splitting::Split;
            CHECK(row.primes.size() == 2);
        }
        if (row.p == 3) {
            saw_ram3 = row.splitting == Splitting::Ramified;
            CHECK(row.generators[0] == e(RingDesc::order(3), 0, -1));  // −η
        }
        if (row.p == 5) saw_inert5 = row.splitting == Splitting::Inert;
    }
    CHECK(saw_split7);
    CHECK(saw_ram3);
    CHECK(saw_inert5);

    auto rep7 = odd_prime_principality_scan(7, 50);
    CHECK(rep7.all_principal);
    CHECK(rep7.parity_ok);
    for (const auto& row : rep7.rows) {
        if (row.p == 3) CHECK(row.splitting == Splitting::Inert);  // −7 ≡ 2 mod 3
    }

    CHECK_THROWS_AS(odd_prime_principality_scan(11, 50), UsageError);
}

TEST_CASE("princ_sweep: small bounds") {
    PrincVerdict v11 = princ_sweep(11, 5, 60);
    CHECK(v11.status == PrincStatus::NotPrinc);
    REQUIRE(v11.witness);
    CHECK(v11.witness->pair.identity_holds());
    CHECK(!is_principal(v11.witness->ideal));
    CHECK(IdealLat::from_generators(RingDesc::order(11),
                                    {v11.witness->pair.a, v11.witness->pair.b}) ==
          v11.witness->ideal);
    // the (2+2η, 3) family appears within coordinate bound 5
    bool norm3 = false;
    for (const auto& cx : v11.counterexamples)
        if (cx.ideal.norm() == 3) norm3 = true;
    CHECK(norm3);

    PrincVerdict v3 = princ_sweep(3, 8, 150);
    CHECK(v3.status == PrincStatus::PrincProperOrder);
    CHECK(v3.counts->counterexamples == 0);

    PrincVerdict v1 = princ_sweep(1, 6, 100);
    CHECK(v1.status == PrincStatus::PID);

    // an exhausted search alone proves nothing outside the proven lists
    PrincVerdict v19 = princ_sweep(19, 1, 3);
    CHECK(v19.counterexamples.empty());
    CHECK(v19.status == PrincStatus::Undetermined);

    // a maximal non-PID order is caught by the regular-ideal sub-sweep
    PrincVerdict v13 = princ_sweep(13, 2, 60);
    CHECK(v13.status == PrincStatus::NotPrinc);
}

TEST_CASE("sweep pair counting matches the reference pair test") {
    // recompute sub-sweep (i) of princ_sweep(11, 3, ...) the slow way
    RingDesc O = RingDesc::order(11);
    long cb = 3;
    std::vector<QuadElem> grid;
    for (long y = -cb; y <= cb; ++y)
        for (long x = -cb; x <= cb; ++x) grid.push_back(e(O, x, y));
    unsigned long pairs = 0, found = 0, cx = 0;
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = i; j < grid.size(); ++j) {
            if (grid[i].is_zero() && grid[j].is_zero()) continue;
            ++pairs;
            auto w = is_idempotent_pair(grid[i], grid[j]);
            if (!w) continue;
            ++found;
            IdealLat I = IdealLat::from_generators(O, {grid[i], grid[j]});
            if (!is_principal(I)) ++cx;
        }
    PrincVerdict v = princ_sweep(11, cb, 1);  // norm bound 1: only the grid matters
    CHECK(v.counts->pairs_scanned == pairs);
    CHECK(v.counts->idempotent_pairs_found == found);
    CHECK(v.counts->counterexamples == cx);
}

TEST_CASE("princ_sweep is independent of the thread count") {
    PrincVerdict a = princ_sweep(11, 5, 60, 1);
    PrincVerdict b = princ_sweep(11, 5, 60, 4);
    CHECK(a.counts->pairs_scanned == b.counts->pairs_scanned);
    CHECK(a.counts->idempotent_pairs_found == b.counts->idempotent_pairs_found);
    CHECK(a.counts->counterexamples == b.counts->counterexamples);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (size_t i = 0; i < a.counterexamples.size(); ++i) {
        CHECK(a.counterexamples[i].ideal == b.counterexamples[i].ideal);
        CHECK(a.counterexamples[i].pair.a == b.counterexamples[i].pair.a);
        CHECK(a.counterexamples[i].pair.b == b.counterexamples[i].pair.b);
    }
}

TEST_CASE("classify: frozen verdicts") {
    CHECK(classify(1).status == PrincStatus::PID);
    CHECK(classify(2).status == PrincStatus::PID);

    PrincVerdict v43 = classify(43);
    CHECK(v43.status == PrincStatus::NotPrinc);
    REQUIRE(v43.witness);
    CHECK(*v43.witness->p == 11);  // 1 + 43 = 44
    CHECK(v43.witness->kind == "odd-prime-divisor");

    PrincVerdict v163 = classify(163);
    CHECK(v163.status == PrincStatus::NotPrinc);
    CHECK(*v163.witness->p == 41);  // 164 = 4·41

    PrincVerdict v5 = classify(5);
    CHECK(v5.status == PrincStatus::NotPrinc);
    REQUIRE(v5.witness);
    CHECK(v5.witness->kind == "maximal-prime");
    CHECK(v5.witness->pair.identity_holds());
    CHECK(!is_principal(v5.witness->ideal));

    CHECK_THROWS_AS(classify(12), UsageError);

    // proper order whose closure is not a PID: witness is a regular prime
    PrincVerdict v15 = classify(15);
    CHECK(v15.status == PrincStatus::NotPrinc);
    REQUIRE(v15.witness);
    CHECK(v15.witness->regular);
    CHECK(v15.witness->kind == "regular-prime");
}

TEST_CASE("thm 1.3 equivalence at small scale (norm ≤ 20)") {
    for (long d : {3, 11}) {
        RingDesc O = RingDesc::order(d);
        QuadElem one(O, 1, 0);
        for (const auto& I : enumerate_ideals(O, 20)) {
            auto p = pair_for_ideal(I);
            CHECK(p.has_value() == is_invertible(I));
            if (!p) continue;
            // proof identity ⟨a,b⟩⟨a−1,b⟩ = bO
            const auto& w = p->witness;
            if (!w.b.is_zero()) {
                IdealLat lhs = ideal_mul(IdealLat::from_generators(O, {w.a, w.b}),
                                         IdealLat::from_generators(O, {w.a - one, w.b}));
                CHECK(lhs == IdealLat::principal(w.b));
            }
        }
    }
}
