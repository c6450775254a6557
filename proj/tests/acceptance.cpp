// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion re-derives its expected values independently of
// the code paths it exercises wherever the claim admits an oracle.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "quadprinc/certificate.hpp"

using namespace quadprinc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        detail += " [time limit " + std::to_string(limit_seconds) + "s exceeded]";
    }
    std::printf("C%-2d %-4s %6.2fs  %s%s%s\n", number, ok ? "PASS" : "FAIL", secs, name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

QuadElem e(const RingDesc& r, long x, long y) { return QuadElem(r, x, y); }

}  // namespace

// --- C1: classification table over d = 1,2,3,7,11,19,43,67,163 -------------

static std::string sweep_bytes_c1(int threads) {
    Bounds b;
    Json doc = sweep_document({1, 2, 3, 7, 11, 19, 43, 67, 163}, b, threads);
    return canonical_dump(doc);
}

static bool c1(std::string& detail) {
    Bounds b;
    Json doc = sweep_document({1, 2, 3, 7, 11, 19, 43, 67, 163}, b, 1);
    const char* expect[] = {"PID",      "PID",      "PrincProperOrder",
                            "PrincProperOrder", "NotPrinc", "NotPrinc",
                            "NotPrinc", "NotPrinc", "NotPrinc"};
    const auto& summary = doc.at("summary");
    for (size_t i = 0; i < 9; ++i) {
        if (summary[i].at("status").get<std::string>() != expect[i]) {
            detail = "d=" + std::to_string(summary[i].at("d").get<long>()) + " got " +
                     summary[i].at("status").get<std::string>();
            return false;
        }
    }
    for (const auto& item : doc.at("certificates")) {
        if (!item.at("self_check").get<bool>()) {
            detail = "self_check failed";
            return false;
        }
    }
    return true;
}

// --- C2: odd-prime witnesses with independent replay ------------------------

static bool c2(std::string& detail) {
    const std::pair<long, long> want[] = {{11, 3}, {19, 5}, {43, 11}, {67, 17}, {163, 41}};
    for (auto [d, p] : want) {
        auto t0 = std::chrono::steady_clock::now();
        NonPrincWitness w = nonprincipal_witness(d);
        Json cert = witness_certificate(w);  // replay_verify runs inside
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (w.p != p) {
            detail = "d=" + std::to_string(d) + ": p=" + w.p.get_str();
            return false;
        }
        if (w.P.norm() != p || !cert.at("self_check").get<bool>()) {
            detail = "d=" + std::to_string(d) + ": witness failed replay";
            return false;
        }
        // independent fiber scan: no element of norm p in P
        RingDesc O = RingDesc::order(d);
        for (long y = -p; y <= p; ++y)
            for (long x = -p; x <= p; ++x) {
                QuadElem z = e(O, x, y);
                if (norm(z) == p && contains(w.P, z)) {
                    detail = "generator exists";
                    return false;
                }
            }
        if (secs >= 1.0) {
            detail = "d=" + std::to_string(d) + " took " + std::to_string(secs) + "s";
            return false;
        }
    }
    return true;
}

// --- C3: d = 3, 7 sweeps find no counterexample ------------------------------

static bool c3(std::string& detail) {
    for (long d : {3L, 7L}) {
        PrincVerdict v = princ_sweep(d, 25, 2000, 1);
        if (v.status != PrincStatus::PrincProperOrder || !v.counts ||
            v.counts->counterexamples != 0) {
            detail = "d=" + std::to_string(d) + ": " + to_string(v.status);
            return false;
        }
        if (v.counts->regular_ideals == 0 || v.counts->invertible_ideals == 0 ||
            v.counts->idempotent_pairs_found == 0) {
            detail = "d=" + std::to_string(d) + ": sweep scanned nothing";
            return false;
        }
    }
    return true;
}

// --- C4: every prime of O above an odd p ≤ 500 is principal (d = 3, 7) ------

static bool c4(std::string& detail) {
    for (long d : {3L, 7L}) {
        ScanReport rep = odd_prime_principality_scan(d, 500);
        if (!rep.all_principal || !rep.parity_ok) {
            detail = "d=" + std::to_string(d);
            return false;
        }
        size_t rows = 0;
        for (long p : primes_up_to(500))
            if (p != 2) ++rows;
        if (rep.rows.size() != rows) {
            detail = "row count " + std::to_string(rep.rows.size());
            return false;
        }
        for (const auto& row : rep.rows) {
            for (size_t i = 0; i < row.primes.size(); ++i) {
                if (!contains(row.primes[i], row.generators[i]) ||
                    norm(row.generators[i]) != row.primes[i].norm()) {
                    detail = "bad generator at p=" + row.p.get_str();
                    return false;
                }
            }
        }
    }
    return true;
}

// --- C5: unit normalization over the |x|,|y| ≤ 100 box ----------------------

static bool c5(std::string& detail) {
    RingDesc D = RingDesc::maximal(3);
    RingDesc O = RingDesc::order(3);
    auto ug = units(D);
    long count = 0;
    for (long bb = -100; bb <= 100; ++bb)
        for (long aa = -100; aa <= 100; ++aa) {
            if ((aa - bb) % 2 != 0 || (aa == 0 && bb == 0)) continue;
            QuadElem z(D, (aa - bb) / 2, bb);
            auto [u, zu] = unit_normalize(z);
            if (convert(z * u, O) != zu) {
                detail = "bad normalization at (" + std::to_string(aa) + "," +
                         std::to_string(bb) + ")";
                return false;
            }
            if (aa % 2 != 0) {
                // z ∉ O: exactly the two half-units (±1±η)/2 must work
                int works = 0;
                for (const auto& w : ug.units) {
                    if (convert(z * w, O)) {
                        ++works;
                        if (w.y == 0) {
                            detail = "±1 normalizes an element outside the order";
                            return false;
                        }
                    }
                }
                if (works != 2) {
                    detail = "expected exactly two normalizing units, got " +
                             std::to_string(works);
                    return false;
                }
            }
            ++count;
        }
    if (count < 20000) {
        detail = "box too small: " + std::to_string(count);
        return false;
    }
    return true;
}

// --- C6: conductor facts for d = 3, 7, 11 ------------------------------------

static bool c6(std::string& detail) {
    for (long d : {3L, 7L, 11L}) {
        RingDesc O = RingDesc::order(d);
        IdealLat f = conductor(O);
        IdealLat expected =
            IdealLat::from_generators(O, {e(O, 2, 0), e(O, 1, 1)});
        if (f != expected || f.norm() != 2) {
            detail = "d=" + std::to_string(d) + ": conductor shape";
            return false;
        }
        if (ideal_mul(f, f) != scale(f, 2)) {
            detail = "d=" + std::to_string(d) + ": f² != 2f";
            return false;
        }
        if (is_principal(f) || is_invertible(f)) {
            detail = "d=" + std::to_string(d) + ": f principal/invertible";
            return false;
        }
        FracIdeal inv = colon_ring_over(f);
        if (ideal_mul(f, inv.num) != scale(f, inv.den)) {
            detail = "d=" + std::to_string(d) + ": (O:f)·f != f";
            return false;
        }
    }
    return true;
}

// --- C7: primary chains ------------------------------------------------------

static bool c7(std::string& detail) {
    RingDesc O3 = RingDesc::order(3);
    ChainReport rf = primary_chain_check(conductor(O3), 16);
    if (rf.is_chain || !rf.incomparable) {
        detail = "conductor-primary ideals formed a chain";
        return false;
    }
    IdealLat twoO = IdealLat::principal(e(O3, 2, 0));
    IdealLat opeO = IdealLat::principal(e(O3, 1, 1));
    if (!((rf.incomparable->first == twoO && rf.incomparable->second == opeO) ||
          (rf.incomparable->first == opeO && rf.incomparable->second == twoO))) {
        detail = "witness pair is not {2O, (1+η)O}";
        return false;
    }
    for (long d : {3L, 11L}) {
        RingDesc O = RingDesc::order(d);
        for (long p : primes_up_to(50)) {
            for (const auto& P : primes_above(O, p)) {
                if (P.norm() > 50 || !is_regular(P)) continue;
                Int bound = P.norm() * P.norm() * P.norm() * P.norm();
                ChainReport r = primary_chain_check(P, bound);
                if (!r.is_chain || !r.powers_ok || r.primary_ideals.size() != 4 ||
                    r.power_exponents != std::vector<long>{1, 2, 3, 4}) {
                    detail = "d=" + std::to_string(d) + " P=" + P.str();
                    return false;
                }
            }
        }
    }
    return true;
}

// --- C8: the four characterizations agree on every ideal of norm ≤ 60 --------

static bool c8(std::string& detail) {
    for (long d : {3L, 11L}) {
        Bounds b;
        b.norm_bound = 60;
        CheckOutcome oc = run_check("thm1.3", d, b);
        if (oc.exit_code != 0 ||
            oc.certificate.at("verdict").at("result").get<std::string>() != "ok") {
            detail = "d=" + std::to_string(d);
            return false;
        }
        size_t with_pair = 0;
        for (const auto& row : oc.certificate.at("witnesses")) {
            bool inv = row.at("invertible").get<bool>();
            if (inv != row.contains("pair")) {
                detail = "equivalence broke at " +
                         row.at("ideal").at("repr").get<std::string>();
                return false;
            }
            if (inv && !row.at("product_identity").get<bool>()) {
                detail = "product identity failed";
                return false;
            }
            if (inv) ++with_pair;
        }
        if (with_pair < 10) {
            detail = "suspiciously few invertible ideals";
            return false;
        }
    }
    return true;
}

// --- C9: the PID list below 200 ----------------------------------------------

static bool c9(std::string& detail) {
    std::set<long> expect = {1, 2, 3, 7, 11, 19, 43, 67, 163};
    for (long d = 1; d <= 200; ++d) {
        if (!is_squarefree(d)) continue;
        bool pid = is_pid_maximal(d);
        if (pid != (expect.count(d) > 0)) {
            detail = "d=" + std::to_string(d) + (pid ? " claims PID" : " claims non-PID");
            return false;
        }
    }
    return true;
}

// --- C10: byte-identical certificates, serial and parallel -------------------

static bool c10(std::string& detail) {
    std::string s1 = sweep_bytes_c1(1);
    std::string s2 = sweep_bytes_c1(1);
    std::string s4 = sweep_bytes_c1(4);
    if (s1 != s2) {
        detail = "two serial runs differ";
        return false;
    }
    if (s1 != s4) {
        detail = "serial and 4-thread runs differ";
        return false;
    }
    for (long d : {11L, 19L, 43L, 67L, 163L}) {
        if (canonical_dump(witness_certificate(nonprincipal_witness(d))) !=
            canonical_dump(witness_certificate(nonprincipal_witness(d)))) {
            detail = "witness certificate for d=" + std::to_string(d) + " unstable";
            return false;
        }
    }
    Bounds b;
    if (canonical_dump(run_check("thm4.2", 7, b).certificate) !=
        canonical_dump(run_check("thm4.2", 7, b).certificate)) {
        detail = "thm4.2 certificate unstable";
        return false;
    }
    Bounds b13;
    b13.norm_bound = 60;
    if (canonical_dump(run_check("thm1.3", 3, b13).certificate) !=
        canonical_dump(run_check("thm1.3", 3, b13).certificate)) {
        detail = "thm1.3 certificate unstable";
        return false;
    }
    if (canonical_dump(run_check("lem2.3", 11, b).certificate) !=
        canonical_dump(run_check("lem2.3", 11, b).certificate)) {
        detail = "lem2.3 certificate unstable";
        return false;
    }
    return true;
}

int main() {
    criterion(1, "classification table 1,2,3,7,11,19,43,67,163", 60, c1);
    criterion(2, "odd-prime witnesses for d = 11,19,43,67,163", 5, c2);
    criterion(3, "no counterexample sweeps for d = 3, 7", 120, c3);
    criterion(4, "odd primes p <= 500 principal in d = 3, 7", 30, c4);
    criterion(5, "unit normalization over the 100-box", 5, c5);
    criterion(6, "conductor facts for d = 3, 7, 11", 0, c6);
    criterion(7, "primary chain structure", 0, c7);
    criterion(8, "pair/two-generator/comaximal/invertible agree (norm <= 60)", 60, c8);
    criterion(9, "PID list over square-free d <= 200", 30, c9);
    criterion(10, "byte-identical certificates across runs and thread counts", 0, c10);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
