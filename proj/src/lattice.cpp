#include "quadprinc/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace quadprinc {

namespace {

// Row reduction over Z on m×2 rows, optionally mirroring every operation
// on a transform matrix U (so U·M_in = M_out throughout).
struct Reducer {
    std::vector<Vec2>& rows;
    std::vector<std::vector<Int>>* U;

    void negate(size_t i) {
        rows[i].x = -rows[i].x;
        rows[i].y = -rows[i].y;
        if (U)
            for (auto& u : (*U)[i]) u = -u;
    }

    void submul(size_t i, const Int& q, size_t j) {  // row_i -= q·row_j
        if (q == 0) return;
        rows[i].x -= q * rows[j].x;
        rows[i].y -= q * rows[j].y;
        if (U) {
            auto& ui = (*U)[i];
            const auto& uj = (*U)[j];
            for (size_t k = 0; k < ui.size(); ++k) ui[k] -= q * uj[k];
        }
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        std::swap(rows[i], rows[j]);
        if (U) std::swap((*U)[i], (*U)[j]);
    }

    // Euclidean elimination on one coordinate among the rows passing
    // `among`: afterwards exactly one participating row has key ≠ 0 (made
    // positive) and its index is returned, or -1 if the column was zero.
    template <typename Key, typename Among>
    int eliminate(Key key, Among among) {
        for (;;) {
            int pivot = -1;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (!among(i) || key(rows[i]) == 0) continue;
                if (pivot < 0 ||
                    mpz_cmpabs(key(rows[i]).get_mpz_t(),
                               key(rows[static_cast<size_t>(pivot)]).get_mpz_t()) < 0) {
                    pivot = static_cast<int>(i);
                }
            }
            if (pivot < 0) return -1;
            bool leftover = false;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (!among(i) || static_cast<int>(i) == pivot) continue;
                if (key(rows[i]) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), key(rows[i]).get_mpz_t(),
                           key(rows[static_cast<size_t>(pivot)]).get_mpz_t());
                submul(i, q, static_cast<size_t>(pivot));
                if (key(rows[i]) != 0) leftover = true;
            }
            if (!leftover) {
                if (key(rows[static_cast<size_t>(pivot)]) < 0) negate(static_cast<size_t>(pivot));
                return pivot;
            }
        }
    }
};

void hnf_core(std::vector<Vec2>& rows, std::vector<std::vector<Int>>* U, Hnf2& h) {
    Reducer red{rows, U};

    int iw = red.eliminate([](const Vec2& r) -> const Int& { return r.y; },
                           [](size_t) { return true; });
    int ia = red.eliminate([](const Vec2& r) -> const Int& { return r.x; },
                           [&](size_t i) { return static_cast<int>(i) != iw; });

    h = Hnf2{0, 0, 0, 0};
    if (ia >= 0 && iw >= 0) {
        // b into [0, a)
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[static_cast<size_t>(iw)].x.get_mpz_t(),
                   rows[static_cast<size_t>(ia)].x.get_mpz_t());
        red.submul(static_cast<size_t>(iw), q, static_cast<size_t>(ia));
        h.rank = 2;
        h.a = rows[static_cast<size_t>(ia)].x;
        h.b = rows[static_cast<size_t>(iw)].x;
        h.c = rows[static_cast<size_t>(iw)].y;
        red.swap_rows(0, static_cast<size_t>(ia));
        if (iw == 0) iw = ia;  // tracked row moved by the swap
        red.swap_rows(1, static_cast<size_t>(iw));
    } else if (ia >= 0) {
        h.rank = 1;
        h.a = rows[static_cast<size_t>(ia)].x;
        red.swap_rows(0, static_cast<size_t>(ia));
    } else if (iw >= 0) {
        h.rank = 1;
        h.b = rows[static_cast<size_t>(iw)].x;
        h.c = rows[static_cast<size_t>(iw)].y;
        red.swap_rows(0, static_cast<size_t>(iw));
    }
}

}  // namespace

Hnf2 hnf_rows(std::vector<Vec2> rows) {
    Hnf2 h;
    hnf_core(rows, nullptr, h);
    return h;
}

HnfTransform hnf_with_transform(std::vector<Vec2> rows) {
    const size_t m = rows.size();
    std::vector<std::vector<Int>> U(m, std::vector<Int>(m, 0));
    for (size_t i = 0; i < m; ++i) U[i][i] = 1;
    HnfTransform t;
    hnf_core(rows, &U, t.h);
    t.rows = std::move(rows);
    t.U = std::move(U);
    return t;
}

std::array<Vec2, 2> lattice_intersect(const std::array<Vec2, 2>& a,
                                      const std::array<Vec2, 2>& b) {
    std::vector<Vec2> stacked = {a[0], a[1], Vec2{-b[0].x, -b[0].y}, Vec2{-b[1].x, -b[1].y}};
    HnfTransform t = hnf_with_transform(stacked);
    if (t.h.rank != 2) throw std::logic_error("lattice_intersect: inputs not full rank");
    std::array<Vec2, 2> w;
    size_t found = 0;
    for (size_t i = 0; i < t.rows.size() && found < 2; ++i) {
        if (t.rows[i].x != 0 || t.rows[i].y != 0) continue;
        const auto& k = t.U[i];  // α·a0 + β·a1 + γ·(−b0) + δ·(−b1) = 0
        w[found].x = k[0] * a[0].x + k[1] * a[1].x;
        w[found].y = k[0] * a[0].y + k[1] * a[1].y;
        ++found;
    }
    if (found != 2) throw std::logic_error("lattice_intersect: kernel rank != 2");
    Hnf2 h = hnf_rows({w[0], w[1]});
    if (h.rank != 2) throw std::logic_error("lattice_intersect: degenerate intersection");
    return {Vec2{h.a, 0}, Vec2{h.b, h.c}};
}

}  // namespace quadprinc
