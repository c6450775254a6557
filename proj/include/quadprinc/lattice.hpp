#pragma once

#include <array>
#include <vector>

#include "quadprinc/numeric.hpp"

namespace quadprinc {

// Row vector (x, y) standing for x·1 + y·θ.
struct Vec2 {
    Int x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/*
 * Hermite normal form of the row span of a set of vectors, in the fixed
 * shape {(a, 0), (b, c)} with a, c > 0 and 0 ≤ b < a.  rank may be 0, 1
 * or 2; entries of absent rows are zero.
 */
struct Hnf2 {
    Int a, b, c;
    int rank = 0;
};

Hnf2 hnf_rows(std::vector<Vec2> rows);

/*
 * HNF together with the unimodular row transform: U·M = H, where row 0 of
 * H is (a, 0), row 1 is (b, c) and the remaining rows are zero.  U rows
 * 2.. span the left kernel of M.
 */
struct HnfTransform {
    Hnf2 h;
    std::vector<Vec2> rows;               // the reduced rows, in H order
    std::vector<std::vector<Int>> U;      // same row order
};

HnfTransform hnf_with_transform(std::vector<Vec2> rows);

// Intersection of two full-rank sublattices of Z², via the left kernel of
// the stacked 4×2 system.
std::array<Vec2, 2> lattice_intersect(const std::array<Vec2, 2>& a,
                                      const std::array<Vec2, 2>& b);

}  // namespace quadprinc
