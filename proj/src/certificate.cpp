#include "quadprinc/certificate.hpp"

#include <sstream>

#include "quadprinc/errors.hpp"

namespace quadprinc {

namespace {

std::string sstr(const Int& n) { return n.get_str(); }

RingDesc ring_from(const Json& j) {
    long d = j.at("d").get<long>();
    return j.at("basis").get<std::string>() == "omega" ? RingDesc::maximal(d)
                                                       : RingDesc::order(d);
}

Json ring_json(const RingDesc& r) {
    return Json{{"d", r.d}, {"basis", r.uses_omega() ? "omega" : "eta"}};
}

QuadElem elem_from(const Json& j) {
    return QuadElem(ring_from(j), Int(j.at("x").get<std::string>()),
                    Int(j.at("y").get<std::string>()));
}

IdealLat ideal_from(const Json& j) {
    // from_hnf re-validates the HNF shape and θ-closure
    return IdealLat::from_hnf(ring_from(j), Int(j.at("a").get<std::string>()),
                              Int(j.at("b").get<std::string>()),
                              Int(j.at("c").get<std::string>()));
}

}  // namespace

Json elem_json(const QuadElem& z) {
    Json j = ring_json(z.ring);
    j["x"] = sstr(z.x);
    j["y"] = sstr(z.y);
    j["repr"] = z.str();
    return j;
}

Json ideal_json(const IdealLat& I) {
    Json j = ring_json(I.ring);
    j["a"] = sstr(I.a);
    j["b"] = sstr(I.b);
    j["c"] = sstr(I.c);
    j["norm"] = sstr(I.norm());
    j["repr"] = I.str();
    return j;
}

Json pair_json(const PairWitness& w) {
    return Json{{"a", elem_json(w.a)},
                {"b", elem_json(w.b)},
                {"cofactor", elem_json(w.cofactor)},
                {"side", w.side == PairSide::Left ? "Left" : "Right"}};
}

namespace {

Json witness_json(const NonPrincipalityWitness& w) {
    Json j{{"pair", pair_json(w.pair)},
           {"ideal", ideal_json(w.ideal)},
           {"kind", w.kind},
           {"evidence",
            Json{{"empty_norm_fiber_at", sstr(w.ideal.norm())}, {"regular", w.regular}}}};
    if (w.p) j["evidence"]["residue_prime"] = sstr(*w.p);
    return j;
}

Json counts_json(const SweepCounts& c) {
    return Json{{"pairs_scanned", c.pairs_scanned},
                {"idempotent_pairs_found", c.idempotent_pairs_found},
                {"ideals_scanned", c.ideals_scanned},
                {"regular_ideals", c.regular_ideals},
                {"invertible_ideals", c.invertible_ideals},
                {"counterexamples", c.counterexamples}};
}

Json verdict_json(const PrincVerdict& v) {
    Json j{{"status", to_string(v.status)},
           {"proven", v.proven},
           {"search_bounds",
            Json{{"coord_bound", v.coord_bound}, {"norm_bound", sstr(v.norm_bound)}}}};
    if (v.witness) j["witness"] = witness_json(*v.witness);
    if (v.counts) j["counts"] = counts_json(*v.counts);
    if (!v.pid_evidence.empty()) {
        Json rows = Json::array();
        for (const auto& e : v.pid_evidence) {
            rows.push_back(Json{{"p", sstr(e.p)},
                                {"prime", ideal_json(e.prime)},
                                {"generator", elem_json(e.generator)}});
        }
        j["pid_evidence"] = rows;
        j["minkowski_bound"] = v.minkowski;
    }
    return j;
}

Json chain_json(const ChainReport& r) {
    Json ideals = Json::array();
    for (const auto& I : r.primary_ideals) ideals.push_back(ideal_json(I));
    Json j{{"prime", ideal_json(r.P)},
           {"norm_bound", sstr(r.norm_bound)},
           {"prime_regular", r.prime_regular},
           {"primary_ideals", ideals},
           {"is_chain", r.is_chain},
           {"powers_ok", r.powers_ok},
           {"invariant_ok", r.invariant_ok}};
    if (r.incomparable)
        j["incomparable"] =
            Json::array({ideal_json(r.incomparable->first), ideal_json(r.incomparable->second)});
    if (!r.power_exponents.empty()) j["power_exponents"] = r.power_exponents;
    return j;
}

Json cert_shell(const std::string& command, long d) {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"d", d}};
}

}  // namespace

Json classify_certificate(const PrincVerdict& v, const Bounds& b) {
    Json j = cert_shell("classify", v.d);
    j["bounds"] = Json{{"coord_bound", b.coord_bound},
                       {"norm_bound", sstr(b.norm_bound)},
                       {"search_cap", b.search_cap}};
    j["verdict"] = verdict_json(v);
    Json w = Json::array();
    for (const auto& cx : v.counterexamples) w.push_back(witness_json(cx));
    j["witnesses"] = w;
    replay_verify(j);
    return j;
}

Json witness_certificate(const NonPrincWitness& w) {
    Json j = cert_shell("witness", w.d);
    j["bounds"] = Json::object();
    Json ww{{"pair", pair_json(w.pair)},
            {"ideal", ideal_json(w.P)},
            {"kind", "odd-prime-divisor"},
            {"evidence", Json{{"empty_norm_fiber_at", sstr(w.P.norm())},
                              {"residue_prime", sstr(w.p)},
                              {"regular", w.regular_checked},
                              {"prime", w.prime_checked}}},
            {"b_choice", elem_json(w.b_choice)}};
    j["witnesses"] = Json::array({ww});
    replay_verify(j);
    return j;
}

// ---------------------------------------------------------------------------
// check suites
// ---------------------------------------------------------------------------

namespace {

struct CheckBuild {
    Json instances = Json::array();
    bool counterexample = false;
    Json counterexample_info;
};

CheckBuild check_conductor(long d) {
    CheckBuild cb;
    RingDesc O = RingDesc::order(d);
    IdealLat f = conductor(O);
    Json row{{"f", ideal_json(f)}};
    if (d % 4 == 3) {
        IdealLat f2 = ideal_mul(f, f);
        IdealLat two_f = scale(f, 2);
        if (f2 != two_f) throw ConsistencyError("conductor: f² != 2f");
        if (is_principal(f)) throw ConsistencyError("conductor: f is principal");
        if (is_invertible(f)) throw ConsistencyError("conductor: f is invertible");
        FracIdeal inv = colon_ring_over(f);
        if (ideal_mul(f, inv.num) != scale(f, inv.den))
            throw ConsistencyError("conductor: (O:f)·f != f");
        if (colon(IdealLat::principal(QuadElem(O, 2, 0)), f) != f)
            throw ConsistencyError("conductor: colon(2O, f) != f");
        if (is_regular(f)) throw ConsistencyError("conductor: f is regular");
        row["f_squared"] = ideal_json(f2);
        row["two_f"] = ideal_json(two_f);
        row["f_squared_equals_2f"] = true;
        row["principal"] = false;
        row["invertible"] = false;
        row["colon_product_is_f"] = true;
        row["extension"] = ideal_json(extend(f));
    } else {
        if (!f.is_whole_ring()) throw ConsistencyError("conductor: expected the whole ring");
        row["whole_ring"] = true;
    }
    cb.instances.push_back(row);
    return cb;
}

CheckBuild check_lem41(long box) {
    CheckBuild cb;
    RingDesc D = RingDesc::maximal(3);
    for (long bb = -box; bb <= box; ++bb) {
        for (long aa = -box; aa <= box; ++aa) {
            if ((aa - bb) % 2 != 0) continue;  // z = (a + bη)/2 needs a ≡ b (mod 2)
            if (aa == 0 && bb == 0) continue;
            QuadElem z(D, (aa - bb) / 2, bb);  // u + vω with v = b, u = (a−b)/2
            auto [u, zu] = unit_normalize(z);
            cb.instances.push_back(
                Json{{"z", elem_json(z)}, {"u", elem_json(u)}, {"zu", elem_json(zu)}});
            if (aa % 2 != 0) {
                // z ∉ O: exactly the two predicted half-units work
                int works = 0;
                for (const auto& w : units(D).units) {
                    if (convert(z * w, RingDesc::order(3))) {
                        ++works;
                        if (w.y == 0)
                            throw ConsistencyError("lem4.1: unit ±1 normalizes z ∉ O");
                    }
                }
                if (works != 2)
                    throw ConsistencyError("lem4.1: expected exactly two normalizing units");
            }
        }
    }
    return cb;
}

CheckBuild check_thm42(long d, long pmax) {
    CheckBuild cb;
    ScanReport rep = odd_prime_principality_scan(d, pmax);
    for (const auto& row : rep.rows) {
        Json primes = Json::array();
        for (size_t i = 0; i < row.primes.size(); ++i) {
            primes.push_back(Json{{"prime", ideal_json(row.primes[i])},
                                  {"generator", elem_json(row.generators[i])}});
        }
        const char* split = row.splitting == Splitting::Split      ? "split"
                            : row.splitting == Splitting::Ramified ? "ramified"
                                                                   : "inert";
        cb.instances.push_back(
            Json{{"p", sstr(row.p)}, {"splitting", split}, {"primes", primes}});
    }
    return cb;
}

CheckBuild check_prop31(long d) {
    CheckBuild cb;
    RingDesc O = RingDesc::order(d);
    QuadElem one_eta(O, 1, 1);
    if (!is_irreducible(one_eta)) throw ConsistencyError("prop3.1: 1+η is reducible");
    Int target = Int(d) + 1;
    for (Int a = 2; a < target; ++a) {
        if (!divisible(target, a)) continue;
        IdealLat I = IdealLat::from_generators(O, {one_eta, QuadElem(O, a, 0)});
        if (I.is_whole_ring()) throw ConsistencyError("prop3.1: ⟨1+η, a⟩ is not proper");
        if (is_principal(I)) throw ConsistencyError("prop3.1: ⟨1+η, a⟩ is principal");
        if (!(a * a < target * target))
            throw ConsistencyError("prop3.1: norm inequality fails");
        cb.instances.push_back(Json{{"divisor", sstr(a)},
                                    {"ideal", ideal_json(I)},
                                    {"proper", true},
                                    {"principal", false}});
    }
    return cb;
}

CheckBuild check_lem23(long d, const Int& prime_norm_cap) {
    CheckBuild cb;
    RingDesc O = RingDesc::order(d);
    IdealLat f = conductor(O);
    if (!f.is_whole_ring()) {
        ChainReport r = primary_chain_check(f, 16);
        if (r.is_chain) throw ConsistencyError("lem2.3: conductor-primary ideals form a chain");
        if (!r.invariant_ok) throw ConsistencyError("lem2.3: chain/regular equivalence fails");
        cb.instances.push_back(chain_json(r));
    }
    for (long p = 2; Int(p) <= prime_norm_cap; ++p) {
        if (!is_prime(Int(p))) continue;
        for (const auto& P : primes_above(O, p)) {
            if (P.norm() > prime_norm_cap || !is_regular(P)) continue;
            Int bound = P.norm() * P.norm() * P.norm() * P.norm();
            ChainReport r = primary_chain_check(P, bound);
            if (!r.is_chain) throw ConsistencyError("lem2.3: regular prime chain broken");
            if (!r.powers_ok || r.primary_ideals.size() != 4)
                throw ConsistencyError("lem2.3: expected exactly the powers P..P⁴");
            if (!r.invariant_ok) throw ConsistencyError("lem2.3: chain/regular equivalence fails");
            cb.instances.push_back(chain_json(r));
        }
    }
    return cb;
}

CheckBuild check_prop45(long d, const Int& norm_bound, bool& theorem_backed) {
    CheckBuild cb;
    theorem_backed = (d == 3 || d == 7);
    RingDesc O = RingDesc::order(d);
    for (const auto& I : enumerate_ideals(O, norm_bound)) {
        if (!is_invertible(I)) continue;
        auto g = is_principal(I);
        if (!g) {
            if (theorem_backed)
                throw ConsistencyError("prop4.5: invertible non-principal ideal in d=3/7");
            cb.counterexample = true;
            auto pair = pair_for_ideal(I);
            cb.counterexample_info = Json{{"ideal", ideal_json(I)}};
            if (pair) cb.counterexample_info["pair"] = pair_json(pair->witness);
            return cb;
        }
        cb.instances.push_back(Json{{"ideal", ideal_json(I)}, {"generator", elem_json(*g)}});
    }
    return cb;
}

CheckBuild check_thm13(long d, const Int& norm_bound) {
    CheckBuild cb;
    RingDesc O = RingDesc::order(d);
    QuadElem one(O, 1, 0);
    auto ideals = enumerate_ideals(O, norm_bound);
    for (const auto& I : ideals) {
        bool invertible = is_invertible(I);

        // element pool for the bounded searches
        std::vector<QuadElem> pool;
        for (const auto& z : elements_of(I, I.norm() * 256)) {
            pool.push_back(z);
            if (pool.size() >= 160) break;
        }

        std::optional<PairWitness> pair;
        for (size_t i = 0; i < pool.size() && !pair; ++i) {
            for (size_t j = 0; j < pool.size(); ++j) {
                auto w = is_idempotent_pair(pool[i], pool[j]);
                if (!w) continue;
                if (IdealLat::from_generators(O, {pool[i], pool[j]}) != I) continue;
                pair = w;
                break;
            }
        }

        std::optional<std::pair<QuadElem, QuadElem>> two_gen;
        for (size_t i = 0; i < pool.size() && !two_gen; ++i) {
            QuadElem sq = pool[i] * pool[i];
            for (size_t j = 0; j < pool.size(); ++j) {
                if (IdealLat::from_generators(O, {pool[i], pool[j]}) != I) continue;
                if (IdealLat::from_generators(O, {sq, pool[j]}) != I) continue;
                two_gen = std::make_pair(pool[i], pool[j]);
                break;
            }
        }

        std::optional<IdealLat> comax;
        for (const auto& J : ideals) {
            if (!ideal_sum(I, J).is_whole_ring()) continue;
            if (!is_principal(ideal_mul(I, J))) continue;
            comax = J;
            break;
        }

        bool p1 = pair.has_value(), p2 = two_gen.has_value(), p3 = comax.has_value();
        if (p1 != invertible || p2 != invertible || p3 != invertible)
            throw ConsistencyError("thm1.3: equivalence fails at " + I.str());

        Json row{{"ideal", ideal_json(I)}, {"invertible", invertible}};
        if (pair) {
            // proof identity ⟨a,b⟩·⟨a−1,b⟩ = bO (sides swapped for Right)
            const QuadElem& pa = pair->side == PairSide::Left ? pair->a : pair->b;
            const QuadElem& pb = pair->side == PairSide::Left ? pair->b : pair->a;
            IdealLat lhs = ideal_mul(IdealLat::from_generators(O, {pa, pb}),
                                     IdealLat::from_generators(O, {pa - one, pb}));
            if (lhs != IdealLat::principal(pb))
                throw ConsistencyError("thm1.3: product identity fails at " + I.str());
            row["pair"] = pair_json(*pair);
            row["product_identity"] = true;
            row["two_generators"] =
                Json::array({elem_json(two_gen->first), elem_json(two_gen->second)});
            row["comaximal_partner"] = ideal_json(*comax);
        }
        cb.instances.push_back(row);
    }
    return cb;
}

}  // namespace

CheckOutcome run_check(const std::string& check_id, long d, const Bounds& b, int threads) {
    (void)threads;
    RingDesc::order(d);  // validates d
    CheckBuild built;
    bool theorem_backed = true;
    Json bounds;
    if (check_id == "conductor") {
        built = check_conductor(d);
    } else if (check_id == "lem4.1") {
        if (d != 3) throw UsageError("check lem4.1 requires d = 3");
        built = check_lem41(b.box);
        bounds["box"] = b.box;
    } else if (check_id == "thm4.2") {
        if (d != 3 && d != 7) throw UsageError("check thm4.2 requires d ∈ {3, 7}");
        built = check_thm42(d, b.pmax);
        bounds["pmax"] = b.pmax;
    } else if (check_id == "prop3.1") {
        built = check_prop31(d);
    } else if (check_id == "lem2.3") {
        Int cap = b.norm_bound == 2000 ? Int(50) : b.norm_bound;
        built = check_lem23(d, cap);
        bounds["prime_norm_cap"] = sstr(cap);
    } else if (check_id == "prop4.5") {
        built = check_prop45(d, b.norm_bound, theorem_backed);
        bounds["norm_bound"] = sstr(b.norm_bound);
    } else if (check_id == "thm1.3") {
        Int cap = b.norm_bound == 2000 ? Int(60) : b.norm_bound;
        built = check_thm13(d, cap);
        bounds["norm_bound"] = sstr(cap);
    } else {
        throw UsageError("unknown check id: " + check_id);
    }

    Json j = cert_shell("check", d);
    j["check_id"] = check_id;
    j["bounds"] = bounds;
    j["witnesses"] = std::move(built.instances);
    Json verdict{{"check_id", check_id},
                 {"result", built.counterexample ? "counterexample" : "ok"},
                 {"theorem_backed", theorem_backed}};
    if (built.counterexample) verdict["counterexample"] = built.counterexample_info;
    j["verdict"] = std::move(verdict);
    replay_verify(j);
    return CheckOutcome{std::move(j), built.counterexample ? 1 : 0};
}

Json sweep_document(const std::vector<long>& ds, const Bounds& b, int threads) {
    if (ds.empty()) throw UsageError("sweep: empty d list");
    Json items = Json::array();
    Json summary = Json::array();
    for (long d : ds) {
        PrincVerdict v = classify(d, b.coord_bound, b.norm_bound, threads);
        Json cert = classify_certificate(v, b);
        summary.push_back(Json{{"d", d},
                               {"status", to_string(v.status)},
                               {"witness", v.witness ? v.witness->ideal.str()
                                                     : "bound " + b.norm_bound.get_str()}});
        items.push_back(std::move(cert));
    }
    Json doc{{"schema_version", kSchemaVersion},
             {"command", "sweep"},
             {"certificates", items},
             {"summary", summary}};
    return doc;
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

namespace {

// Conductor rebuilt from ideal-lattice primitives only.
IdealLat replay_conductor(const RingDesc& ring) {
    if (ring.d % 4 != 3) return IdealLat::whole_ring(ring);
    if (ring.uses_omega()) return IdealLat::principal(QuadElem(ring, 2, 0));
    return IdealLat::from_generators(ring, {QuadElem(ring, 2, 0), QuadElem(ring, 1, 1)});
}

void replay_pair_ideal(const Json& pair, const Json& ideal, const Json* evidence) {
    QuadElem a = elem_from(pair.at("a"));
    QuadElem b = elem_from(pair.at("b"));
    QuadElem cof = elem_from(pair.at("cofactor"));
    QuadElem one(a.ring, 1, 0);
    bool left = pair.at("side").get<std::string>() == "Left";
    bool ok = left ? (a * (one - a) == cof * b) : (b * (one - b) == cof * a);
    if (!ok) throw ConsistencyError("replay: pair identity fails");

    IdealLat I = ideal_from(ideal);
    if (IdealLat::from_generators(I.ring, {a, b}) != I)
        throw ConsistencyError("replay: pair does not generate the stated ideal");

    if (!evidence) return;
    if (evidence->contains("empty_norm_fiber_at")) {
        Int n(evidence->at("empty_norm_fiber_at").get<std::string>());
        for (const auto& z : enumerate_norm(I.ring, n)) {
            if (contains(I, z))
                throw ConsistencyError("replay: claimed-empty generator fiber is inhabited");
        }
    }
    if (evidence->contains("regular") && evidence->at("regular").get<bool>()) {
        if (!ideal_sum(I, replay_conductor(I.ring)).is_whole_ring())
            throw ConsistencyError("replay: regularity claim fails");
    }
    if (evidence->contains("residue_prime")) {
        Int p(evidence->at("residue_prime").get<std::string>());
        if (!contains(I, QuadElem(I.ring, p, 0)))
            throw ConsistencyError("replay: stated residue prime not in the ideal");
    }
}

void replay_generator(const Json& ideal, const Json& gen) {
    IdealLat I = ideal_from(ideal);
    QuadElem g = elem_from(gen);
    if (!contains(I, g) || norm(g) != I.norm())
        throw ConsistencyError("replay: stated generator does not generate");
}

void replay_witness_obj(const Json& w) {
    const Json* ev = w.contains("evidence") ? &w.at("evidence") : nullptr;
    replay_pair_ideal(w.at("pair"), w.at("ideal"), ev);
}

void replay_verdict(const Json& v) {
    if (v.contains("witness")) replay_witness_obj(v.at("witness"));
    if (v.contains("pid_evidence")) {
        for (const auto& row : v.at("pid_evidence"))
            replay_generator(row.at("prime"), row.at("generator"));
    }
}

void replay_chain(const Json& c) {
    IdealLat P = ideal_from(c.at("prime"));
    std::vector<IdealLat> ideals;
    for (const auto& ij : c.at("primary_ideals")) ideals.push_back(ideal_from(ij));
    if (c.at("is_chain").get<bool>()) {
        for (size_t i = 0; i + 1 < ideals.size(); ++i) {
            if (!contains_ideal(ideals[i], ideals[i + 1]))
                throw ConsistencyError("replay: stated chain is not a chain");
        }
    } else {
        IdealLat u = ideal_from(c.at("incomparable").at(0));
        IdealLat v = ideal_from(c.at("incomparable").at(1));
        if (contains_ideal(u, v) || contains_ideal(v, u))
            throw ConsistencyError("replay: stated incomparable pair is comparable");
    }
    if (c.contains("power_exponents")) {
        const auto& es = c.at("power_exponents");
        for (size_t i = 0; i < ideals.size(); ++i) {
            if (ideal_pow(P, es.at(i).get<long>()) != ideals[i])
                throw ConsistencyError("replay: stated prime power mismatch");
        }
    }
}

void replay_check(const Json& j) {
    const std::string id = j.at("check_id").get<std::string>();
    const Json& rows = j.at("witnesses");
    if (id == "thm4.2") {
        for (const auto& row : rows)
            for (const auto& pr : row.at("primes"))
                replay_generator(pr.at("prime"), pr.at("generator"));
    } else if (id == "lem4.1") {
        for (const auto& row : rows) {
            QuadElem z = elem_from(row.at("z"));
            QuadElem u = elem_from(row.at("u"));
            QuadElem zu = elem_from(row.at("zu"));
            if (norm(u) != 1) throw ConsistencyError("replay: u is not a unit");
            auto conv = convert(z * u, zu.ring);
            if (!conv || *conv != zu) throw ConsistencyError("replay: zu != z·u");
        }
    } else if (id == "prop4.5") {
        for (const auto& row : rows) replay_generator(row.at("ideal"), row.at("generator"));
        const Json& v = j.at("verdict");
        if (v.contains("counterexample")) {
            const Json& cx = v.at("counterexample");
            if (cx.contains("pair")) replay_pair_ideal(cx.at("pair"), cx.at("ideal"), nullptr);
        }
    } else if (id == "thm1.3") {
        for (const auto& row : rows) {
            if (row.contains("pair")) replay_pair_ideal(row.at("pair"), row.at("ideal"), nullptr);
        }
    } else if (id == "lem2.3") {
        for (const auto& row : rows) replay_chain(row);
    } else if (id == "prop3.1") {
        for (const auto& row : rows) {
            IdealLat I = ideal_from(row.at("ideal"));
            if (I.is_whole_ring()) throw ConsistencyError("replay: ideal not proper");
            for (const auto& z : enumerate_norm(I.ring, I.norm())) {
                if (contains(I, z))
                    throw ConsistencyError("replay: non-principality fiber inhabited");
            }
        }
    } else if (id == "conductor") {
        for (const auto& row : rows) {
            IdealLat f = ideal_from(row.at("f"));
            if (f != replay_conductor(f.ring))
                throw ConsistencyError("replay: stated conductor mismatch");
            if (row.contains("f_squared")) {
                if (ideal_from(row.at("f_squared")) != ideal_mul(f, f) ||
                    ideal_from(row.at("two_f")) != scale(f, 2))
                    throw ConsistencyError("replay: f² = 2f fails");
            }
        }
    }
}

}  // namespace

void replay_verify(Json& certificate) {
    const std::string cmd = certificate.at("command").get<std::string>();
    if (cmd == "classify") {
        replay_verdict(certificate.at("verdict"));
        for (const auto& w : certificate.at("witnesses")) replay_witness_obj(w);
    } else if (cmd == "witness") {
        for (const auto& w : certificate.at("witnesses")) replay_witness_obj(w);
    } else if (cmd == "check") {
        replay_check(certificate);
    } else if (cmd == "sweep") {
        for (auto& item : certificate.at("certificates")) replay_verify(item);
    }
    certificate["self_check"] = true;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string human_summary(const Json& j) {
    std::ostringstream os;
    const std::string cmd = j.at("command").get<std::string>();
    if (cmd == "sweep") {
        os << "d      status            witness\n";
        for (const auto& row : j.at("summary")) {
            std::string ds = std::to_string(row.at("d").get<long>());
            std::string st = row.at("status").get<std::string>();
            os << ds << std::string(ds.size() < 7 ? 7 - ds.size() : 1, ' ') << st
               << std::string(st.size() < 18 ? 18 - st.size() : 1, ' ')
               << row.at("witness").get<std::string>() << "\n";
        }
    } else if (cmd == "classify") {
        const Json& v = j.at("verdict");
        os << "d = " << j.at("d").get<long>() << ": " << v.at("status").get<std::string>();
        if (v.contains("witness")) {
            const Json& w = v.at("witness");
            os << "  witness " << w.at("ideal").at("repr").get<std::string>() << " via pair ("
               << w.at("pair").at("a").at("repr").get<std::string>() << ", "
               << w.at("pair").at("b").at("repr").get<std::string>() << ")";
        }
        os << "\n";
    } else if (cmd == "check") {
        os << "check " << j.at("check_id").get<std::string>() << " d=" << j.at("d").get<long>()
           << ": " << j.at("verdict").at("result").get<std::string>() << " ("
           << j.at("witnesses").size() << " instances)\n";
    } else {
        os << canonical_dump(j);
    }
    return os.str();
}

}  // namespace quadprinc
