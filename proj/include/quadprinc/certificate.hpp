#pragma once

#include <json.hpp>

#include <string>

#include "quadprinc/princ.hpp"

namespace quadprinc {

// Certificates are nlohmann JSON objects; the default object type keeps
// keys sorted, so canonical serialization is dump(2) with no floats and
// all unbounded integers rendered as decimal strings.
using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

Json elem_json(const QuadElem& z);
Json ideal_json(const IdealLat& I);
Json pair_json(const PairWitness& w);

struct Bounds {
    long coord_bound = 25;
    Int norm_bound = 2000;
    long pmax = 500;
    long box = 50;
    long search_cap = kDefaultSearchCap;
};

Json classify_certificate(const PrincVerdict& v, const Bounds& b);
Json witness_certificate(const NonPrincWitness& w);

struct CheckOutcome {
    Json certificate;
    // 0 completed, 1 counterexample to a non-theorem expectation,
    // 3 a theorem-backed assertion failed (raised as ConsistencyError).
    int exit_code = 0;
};

// check_id ∈ {thm1.3, lem2.3, prop3.1, lem4.1, thm4.2, prop4.5, conductor}
CheckOutcome run_check(const std::string& check_id, long d, const Bounds& b, int threads = 1);

Json sweep_document(const std::vector<long>& ds, const Bounds& b, int threads = 1);

/*
 * Independent replay of every witness claim in a certificate, using only
 * element arithmetic and ideal-lattice primitives (no princ-analysis
 * logic): pair identities, generated-ideal equalities, emptiness of
 * generator fibers, regularity sums, generator memberships.  Throws
 * ConsistencyError on any mismatch; certificates are emitted only with
 * self_check = true.
 */
void replay_verify(Json& certificate);

std::string canonical_dump(const Json& j);

std::string human_summary(const Json& certificate_or_sweep);

}  // namespace quadprinc
