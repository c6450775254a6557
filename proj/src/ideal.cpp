#include "quadprinc/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "quadprinc/errors.hpp"

namespace quadprinc {

namespace {

// Coordinates of θ·(x + yθ).
Vec2 theta_mul(const RingDesc& ring, const Int& x, const Int& y) {
    if (ring.uses_omega()) return Vec2{-Int(ring.omega_q()) * y, x + y};
    return Vec2{-Int(ring.d) * y, x};
}

std::array<Vec2, 2> basis_vectors(const IdealLat& I) {
    return {Vec2{I.a, 0}, Vec2{I.b, I.c}};
}

void require_same_ring(const IdealLat& I, const IdealLat& J) {
    if (I.ring != J.ring) throw RingMismatchError();
}

IdealLat build_from_hnf(const RingDesc& ring, const Hnf2& h) {
    if (h.rank != 2) throw ConsistencyError("ideal lattice is not full rank");
    IdealLat I{ring, h.a, h.b, h.c};
    if (!is_theta_closed(ring, I.a, I.b, I.c))
        throw ConsistencyError("ideal lattice not closed under θ-multiplication");
    return I;
}

}  // namespace

bool is_theta_closed(const RingDesc& ring, const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || c <= 0) return false;
    if (!divisible(a, c) || !divisible(b, c)) return false;
    Int t = divexact(b, c);
    // θ·(b + cθ) ∈ L; θ·a ∈ L is then automatic.
    if (ring.uses_omega()) return divisible(ring.omega_q() * c + t * b + b, a);
    return divisible(ring.d * c + t * b, a);
}

IdealLat IdealLat::from_generators(const RingDesc& ring, const std::vector<QuadElem>& gens) {
    std::vector<Vec2> rows;
    for (const auto& g : gens) {
        if (g.ring != ring) throw RingMismatchError();
        if (g.is_zero()) continue;
        rows.push_back(Vec2{g.x, g.y});
        rows.push_back(theta_mul(ring, g.x, g.y));
    }
    if (rows.empty()) throw ZeroIdealError();
    return build_from_hnf(ring, hnf_rows(std::move(rows)));
}

IdealLat IdealLat::from_hnf(const RingDesc& ring, Int a, Int b, Int c) {
    if (a <= 0 || c <= 0 || b < 0 || b >= a)
        throw UsageError("from_hnf: triple is not in HNF shape");
    if (!is_theta_closed(ring, a, b, c))
        throw UsageError("from_hnf: lattice is not an ideal");
    return IdealLat{ring, std::move(a), std::move(b), std::move(c)};
}

IdealLat IdealLat::whole_ring(const RingDesc& ring) { return IdealLat{ring, 1, 0, 1}; }

IdealLat IdealLat::principal(const QuadElem& g) {
    if (g.is_zero()) throw ZeroIdealError();
    return from_generators(g.ring, {g});
}

std::string IdealLat::str() const {
    std::ostringstream os;
    os << "[" << a.get_str() << ", " << b.get_str() << "+" << c.get_str() << "·"
       << ring.theta_name() << "]";
    return os.str();
}

bool contains(const IdealLat& I, const QuadElem& z) {
    if (I.ring != z.ring) throw RingMismatchError();
    if (!divisible(z.y, I.c)) return false;
    return divisible(z.x - divexact(z.y, I.c) * I.b, I.a);
}

bool contains_ideal(const IdealLat& I, const IdealLat& J) {
    require_same_ring(I, J);
    return contains(I, J.gen1()) && contains(I, J.gen2());
}

IdealLat ideal_sum(const IdealLat& I, const IdealLat& J) {
    require_same_ring(I, J);
    return build_from_hnf(I.ring,
                          hnf_rows({Vec2{I.a, 0}, Vec2{I.b, I.c}, Vec2{J.a, 0}, Vec2{J.b, J.c}}));
}

IdealLat ideal_mul(const IdealLat& I, const IdealLat& J) {
    require_same_ring(I, J);
    return IdealLat::from_generators(
        I.ring, {I.gen1() * J.gen1(), I.gen1() * J.gen2(), I.gen2() * J.gen1(),
                 I.gen2() * J.gen2()});
}

IdealLat ideal_pow(const IdealLat& I, long e) {
    if (e < 1) throw UsageError("ideal_pow: exponent must be >= 1");
    IdealLat r = I;
    for (long i = 1; i < e; ++i) r = ideal_mul(r, I);
    return r;
}

IdealLat intersect(const IdealLat& I, const IdealLat& J) {
    require_same_ring(I, J);
    auto w = lattice_intersect(basis_vectors(I), basis_vectors(J));
    return build_from_hnf(I.ring, hnf_rows({w[0], w[1]}));
}

IdealLat scale(const IdealLat& I, const Int& n) {
    if (n == 0) throw ZeroIdealError();
    Int m = n < 0 ? -n : n;
    return IdealLat{I.ring, m * I.a, m * I.b, m * I.c};
}

namespace {

// The lattice g·I (products of g with I's basis).
std::array<Vec2, 2> elem_times_ideal(const QuadElem& g, const IdealLat& I) {
    QuadElem u = g * I.gen1();
    QuadElem v = g * I.gen2();
    return {Vec2{u.x, u.y}, Vec2{v.x, v.y}};
}

std::array<Vec2, 2> scale_vs(const std::array<Vec2, 2>& vs, const Int& n) {
    return {Vec2{n * vs[0].x, n * vs[0].y}, Vec2{n * vs[1].x, n * vs[1].y}};
}

}  // namespace

IdealLat colon(const IdealLat& I, const IdealLat& J) {
    require_same_ring(I, J);
    // {x : x·g ∈ I} = (1/N(g))·(conj(g)·I); meet both generators and the ring.
    QuadElem g1 = J.gen1(), g2 = J.gen2();
    Int n1 = norm(g1), n2 = norm(g2);
    Int l = lcm(n1, n2);
    auto k1 = scale_vs(elem_times_ideal(conj(g1), I), divexact(l, n1));
    auto k2 = scale_vs(elem_times_ideal(conj(g2), I), divexact(l, n2));
    auto w = lattice_intersect(k1, k2);
    w = lattice_intersect(w, {Vec2{l, 0}, Vec2{0, l}});
    Hnf2 h = hnf_rows({w[0], w[1]});
    return build_from_hnf(I.ring, Hnf2{divexact(h.a, l), divexact(h.b, l), divexact(h.c, l), 2});
}

FracIdeal colon_ring_over(const IdealLat& I) {
    QuadElem g1 = I.gen1(), g2 = I.gen2();
    Int n1 = norm(g1), n2 = norm(g2);
    Int l = lcm(n1, n2);
    IdealLat ring_lat = IdealLat::whole_ring(I.ring);
    auto k1 = scale_vs(elem_times_ideal(conj(g1), ring_lat), divexact(l, n1));
    auto k2 = scale_vs(elem_times_ideal(conj(g2), ring_lat), divexact(l, n2));
    auto w = lattice_intersect(k1, k2);
    Hnf2 h = hnf_rows({w[0], w[1]});
    Int content = gcd(gcd(h.a, h.b), h.c);
    Int g = gcd(content, l);
    FracIdeal f{build_from_hnf(I.ring,
                               Hnf2{divexact(h.a, g), divexact(h.b, g), divexact(h.c, g), 2}),
                divexact(l, g)};
    return f;
}

bool is_invertible(const IdealLat& I) {
    FracIdeal inv = colon_ring_over(I);
    IdealLat prod = ideal_mul(I, inv.num);
    return prod == scale(IdealLat::whole_ring(I.ring), inv.den);
}

IdealLat extend(const IdealLat& I) {
    if (I.ring.uses_omega()) return I;
    RingDesc D = RingDesc::maximal(I.ring.d);
    if (!D.uses_omega()) return I;  // O already maximal
    std::vector<QuadElem> gens;
    gens.push_back(*convert(I.gen1(), D));
    gens.push_back(*convert(I.gen2(), D));
    return IdealLat::from_generators(D, gens);
}

IdealLat contract(const IdealLat& J) {
    if (!J.ring.uses_omega()) return J;
    RingDesc O = RingDesc::order(J.ring.d);
    // Work in η-coordinates doubled: u + vω ↦ (2u + v, v).  Then J ∩ O is
    // half of (2J-lattice ∩ 2Z²).
    auto dbl = [](const QuadElem& z) { return Vec2{2 * z.x + z.y, z.y}; };
    std::array<Vec2, 2> k = {dbl(J.gen1()), dbl(J.gen2())};
    auto w = lattice_intersect(k, {Vec2{2, 0}, Vec2{0, 2}});
    Hnf2 h = hnf_rows({w[0], w[1]});
    return build_from_hnf(O, Hnf2{divexact(h.a, 2), divexact(h.b, 2), divexact(h.c, 2), 2});
}

std::vector<IdealLat> enumerate_ideals(const RingDesc& ring, const Int& bound) {
    std::vector<IdealLat> out;
    for (Int n = 1; n <= bound; ++n) {
        for (Int c = 1; c * c <= n; ++c) {
            if (!divisible(n, c * c)) continue;
            Int a = divexact(n, c);
            for (Int b = 0; b < a; b += c) {
                if (!is_theta_closed(ring, a, b, c)) continue;
                out.push_back(IdealLat{ring, a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealLat& u, const IdealLat& v) {
        return std::tuple(u.norm(), u.a, u.b) < std::tuple(v.norm(), v.a, v.b);
    });
    return out;
}

std::vector<IdealLat> enumerate_ideals_prime_power(const RingDesc& ring, const Int& p,
                                                   const Int& bound) {
    std::vector<IdealLat> out;
    for (Int n = p; n <= bound; n *= p) {
        for (Int c = 1; c * c <= n; c *= p) {
            if (!divisible(n, c * c)) continue;
            Int a = divexact(n, c);
            for (Int b = 0; b < a; b += c) {
                if (!is_theta_closed(ring, a, b, c)) continue;
                out.push_back(IdealLat{ring, a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealLat& u, const IdealLat& v) {
        return std::tuple(u.norm(), u.a, u.b) < std::tuple(v.norm(), v.a, v.b);
    });
    return out;
}

std::vector<QuadElem> elements_of(const IdealLat& I, const Int& norm_cap) {
    std::vector<QuadElem> out;
    Int step = I.norm();  // element norms are multiples of the ideal norm
    for (Int n = step; n <= norm_cap; n += step) {
        for (const auto& z : enumerate_norm(I.ring, n)) {
            if (contains(I, z)) out.push_back(z);
        }
    }
    return out;
}

}  // namespace quadprinc
