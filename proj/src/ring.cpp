#include "quadprinc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace quadprinc {

RingDesc RingDesc::order(long d) {
    if (d < 1 || !is_squarefree(d))
        throw UsageError("d must be a positive square-free integer, got " + std::to_string(d));
    return RingDesc{d, BasisSymbol::Eta};
}

RingDesc RingDesc::maximal(long d) {
    RingDesc r = order(d);
    if (d % 4 == 3) r.basis = BasisSymbol::Omega;
    return r;
}

std::string QuadElem::str() const {
    if (y == 0) return x.get_str();
    std::ostringstream os;
    if (x != 0) os << x.get_str();
    if (y > 0 && x != 0) os << "+";
    if (y == -1)
        os << "-";
    else if (y != 1)
        os << y.get_str() << "·";
    os << ring.theta_name();
    return os.str();
}

QuadElem operator+(const QuadElem& u, const QuadElem& v) {
    require_same_ring(u, v);
    return QuadElem(u.ring, u.x + v.x, u.y + v.y);
}

QuadElem operator-(const QuadElem& u, const QuadElem& v) {
    require_same_ring(u, v);
    return QuadElem(u.ring, u.x - v.x, u.y - v.y);
}

QuadElem operator*(const QuadElem& u, const QuadElem& v) {
    require_same_ring(u, v);
    if (u.ring.uses_omega()) {
        // ω² = ω − q
        Int q = u.ring.omega_q();
        return QuadElem(u.ring, u.x * v.x - q * (u.y * v.y),
                        u.x * v.y + u.y * v.x + u.y * v.y);
    }
    // η² = −d
    return QuadElem(u.ring, u.x * v.x - u.ring.d * (u.y * v.y), u.x * v.y + u.y * v.x);
}

QuadElem operator-(const QuadElem& u) { return QuadElem(u.ring, -u.x, -u.y); }

QuadElem operator*(const Int& n, const QuadElem& u) { return QuadElem(u.ring, n * u.x, n * u.y); }

QuadElem conj(const QuadElem& z) {
    if (z.ring.uses_omega()) return QuadElem(z.ring, z.x + z.y, -z.y);  // ω̄ = 1 − ω
    return QuadElem(z.ring, z.x, -z.y);
}

Int norm(const QuadElem& z) {
    if (z.ring.uses_omega()) return z.x * z.x + z.x * z.y + z.ring.omega_q() * (z.y * z.y);
    return z.x * z.x + z.ring.d * (z.y * z.y);
}

Int trace(const QuadElem& z) {
    if (z.ring.uses_omega()) return 2 * z.x + z.y;
    return 2 * z.x;
}

std::optional<QuadElem> divides(const QuadElem& b, const QuadElem& z) {
    require_same_ring(b, z);
    if (b.is_zero()) throw UsageError("divides: divisor is zero");
    // z/b = z·conj(b)/N(b); divisibility of both coordinates is exact.
    QuadElem t = z * conj(b);
    Int n = norm(b);
    if (!divisible(t.x, n) || !divisible(t.y, n)) return std::nullopt;
    return QuadElem(b.ring, divexact(t.x, n), divexact(t.y, n));
}

std::vector<QuadElem> enumerate_norm(const RingDesc& ring, const Int& n) {
    std::vector<QuadElem> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back(ring, 0, 0);
        return out;
    }
    if (ring.uses_omega()) {
        // 4N = (2x+y)² + d·y²; s = 2x+y runs over ±√(4n − dy²)
        Int four_n = 4 * n;
        Int ymax = isqrt(four_n / ring.d);
        for (Int y = -ymax; y <= ymax; ++y) {
            Int rem = four_n - ring.d * y * y;
            if (!is_perfect_square(rem)) continue;
            Int s = isqrt(rem);
            for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
                Int sv = sign ? -s : s;
                Int two_x = sv - y;
                if (!divisible(two_x, 2)) continue;
                out.emplace_back(ring, divexact(two_x, 2), y);
            }
        }
    } else {
        Int ymax = isqrt(n / ring.d);
        for (Int y = -ymax; y <= ymax; ++y) {
            Int rem = n - ring.d * y * y;
            if (!is_perfect_square(rem)) continue;
            Int xv = isqrt(rem);
            if (xv == 0)
                out.emplace_back(ring, 0, y);
            else {
                out.emplace_back(ring, -xv, y);
                out.emplace_back(ring, xv, y);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadElem& u, const QuadElem& v) {
        return std::tie(u.y, u.x) < std::tie(v.y, v.x);
    });
    return out;
}

UnitGroup units(const RingDesc& ring) { return UnitGroup{ring, enumerate_norm(ring, 1)}; }

std::optional<QuadElem> convert(const QuadElem& z, const RingDesc& target) {
    if (z.ring.d != target.d) throw UsageError("convert: rings have different d");
    if (z.ring.basis == target.basis) return QuadElem(target, z.x, z.y);
    if (target.uses_omega()) {
        // x + yη = (x − y) + 2y·ω
        return QuadElem(target, z.x - z.y, 2 * z.y);
    }
    // x + yω = (x + y/2) + (y/2)·η, integral iff y is even
    if (!divisible(z.y, 2)) return std::nullopt;
    Int h = divexact(z.y, 2);
    return QuadElem(target, z.x + h, h);
}

}  // namespace quadprinc
