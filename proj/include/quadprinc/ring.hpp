#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quadprinc/errors.hpp"
#include "quadprinc/numeric.hpp"

namespace quadprinc {

enum class RingKind { Order, Maximal };
enum class BasisSymbol { Eta, Omega };

/*
 * A quadratic ring Z[θ] with θ² = −d (basis η) or, when d ≡ 3 (mod 4),
 * θ = (1+η)/2 with θ² = θ − (1+d)/4 (basis ω).  For d ≡ 1, 2 (mod 4) the
 * order Z[η] is already maximal, so order(d) and maximal(d) return the
 * same descriptor and compare equal.
 */
struct RingDesc {
    long d = 0;
    BasisSymbol basis = BasisSymbol::Eta;

    static RingDesc order(long d);
    static RingDesc maximal(long d);

    bool uses_omega() const { return basis == BasisSymbol::Omega; }
    bool is_maximal() const { return uses_omega() || d % 4 != 3; }
    RingKind kind() const { return is_maximal() ? RingKind::Maximal : RingKind::Order; }
    Int disc() const { return uses_omega() ? Int(-d) : Int(-4 * Int(d)); }
    // ω² = ω − q with q = (1+d)/4
    long omega_q() const { return (1 + d) / 4; }
    std::string theta_name() const { return uses_omega() ? "ω" : "η"; }

    friend bool operator==(const RingDesc&, const RingDesc&) = default;
};

// Element x + y·θ with exact unbounded coordinates.
struct QuadElem {
    RingDesc ring;
    Int x, y;

    QuadElem(RingDesc r, Int x_, Int y_) : ring(r), x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational(const Int& n) const { return y == 0 && x == n; }

    std::string str() const;

    friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

struct UnitGroup {
    RingDesc ring;
    std::vector<QuadElem> units;
};

QuadElem operator+(const QuadElem& u, const QuadElem& v);
QuadElem operator-(const QuadElem& u, const QuadElem& v);
QuadElem operator*(const QuadElem& u, const QuadElem& v);
QuadElem operator-(const QuadElem& u);
QuadElem operator*(const Int& n, const QuadElem& u);

QuadElem conj(const QuadElem& z);
Int norm(const QuadElem& z);   // N(z) = z·conj(z) ≥ 0
Int trace(const QuadElem& z);  // z + conj(z)

// Exact quotient q with z = b·q when z ∈ bR, else nullopt.  b must be nonzero.
std::optional<QuadElem> divides(const QuadElem& b, const QuadElem& z);

// Every element of norm n, sorted lexicographically by (y, x).  Complete
// because the norm form is positive definite.
std::vector<QuadElem> enumerate_norm(const RingDesc& ring, const Int& n);

UnitGroup units(const RingDesc& ring);

// Basis change between {1, η} and {1, ω} (η = 2ω − 1).  O → D always
// succeeds; D → O succeeds iff the η-coordinates are integers.
std::optional<QuadElem> convert(const QuadElem& z, const RingDesc& target);

inline void require_same_ring(const QuadElem& u, const QuadElem& v) {
    if (u.ring != v.ring) throw RingMismatchError();
}

}  // namespace quadprinc
