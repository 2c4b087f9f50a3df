#pragma once

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coderco/cochain.hpp"
#include "coderco/cohomology.hpp"
#include "coderco/deform.hpp"
#include "coderco/duality.hpp"
#include "coderco/errors.hpp"

namespace ct {

using namespace coderco;

// Deterministic sampling helper. Modulo bias is irrelevant here: draws only
// steer which exact identities get instantiated.
struct TestRng {
    std::mt19937_64 gen;

    explicit TestRng(std::uint64_t seed) : gen(seed) {}

    Index pick(Index n) { return static_cast<Index>(gen() % static_cast<std::uint64_t>(n)); }

    Rat scalar() {
        static const int vals[] = {-3, -2, -1, 1, 2, 3};
        return Rat(vals[pick(6)]);
    }
};

inline SparseMat random_mat(TestRng& rng, Index rows, Index cols, Index entries) {
    SparseMat m(rows, cols);
    for (Index t = 0; t < entries; ++t)
        m.add_at(rng.pick(rows), rng.pick(cols), rng.scalar());
    return m;
}

inline Cochain random_cochain(TestRng& rng, int degree, Index dim_c, Index dim_m) {
    Index rows = 1;
    for (int i = 0; i < degree; ++i)
        rows *= dim_c;
    const Index entries = std::max<Index>(4, dim_m);
    return Cochain(degree, dim_c, dim_m, random_mat(rng, rows, dim_m, entries));
}

inline SparseVec random_combination(TestRng& rng, const std::vector<SparseVec>& basis,
                                    Index dim) {
    SparseVec v(dim);
    for (const SparseVec& b : basis) {
        const Rat c = rng.pick(3) == 0 ? Rat(0) : rng.scalar();
        if (c == 0)
            continue;
        for (const auto& [i, w] : b.entries)
            v.add_at(i, c * w);
    }
    return v;
}

struct Named {
    std::string name;
    CoderPair pair;
};

inline std::vector<Rat> range_weights(Index n) {
    std::vector<Rat> w;
    for (Index i = 0; i < n; ++i)
        w.emplace_back(i);
    return w;
}

// The desk-scale roster driving complex/cohomology sweeps: every family the
// tool ships, at dimensions <= 9 so degree-3 operator matrices stay
// assemblable.
inline std::vector<Named> small_roster() {
    std::vector<Named> r;
    r.push_back({"grouplike", CoderPair(grouplike(), SparseMat(1, 1))});
    r.push_back({"zero_coproduct(2)+diag(0,1)",
                 CoderPair(zero_coproduct(2), grading_coderivation(range_weights(2)))});
    r.push_back({"divided_power(2)+grading",
                 CoderPair(divided_power(2), divided_power_grading(2))});
    r.push_back({"divided_power(3)+grading",
                 CoderPair(divided_power(3), divided_power_grading(3))});
    r.push_back({"binomial_bialgebra(2)+grading",
                 CoderPair(binomial_bialgebra(2), binomial_grading(2))});
    r.push_back({"comatrix(2)+zero", CoderPair(comatrix(2), SparseMat(4, 4))});
    r.push_back({"comatrix(2)+grading", CoderPair(comatrix(2), comatrix_grading(2))});
    r.push_back({"tensor(1,3)+grading", CoderPair(truncated_tensor_coalgebra(1, 3),
                                                  truncated_tensor_grading(1, 3))});
    r.push_back({"tensor(2,2)+grading", CoderPair(truncated_tensor_coalgebra(2, 2),
                                                  truncated_tensor_grading(2, 2))});
    r.push_back({"comatrix(3)+grading", CoderPair(comatrix(3), comatrix_grading(3))});
    return r;
}

// Dimension <= 4 subset for sweeps that invert or eliminate repeatedly.
inline std::vector<Named> tiny_roster() {
    std::vector<Named> r;
    for (Named& n : small_roster())
        if (n.pair.c.dim <= 4)
            r.push_back(std::move(n));
    return r;
}

// Plain dense rationals with textbook Gaussian elimination: the second
// opinion against the sparse fraction-free route.
using Dense = std::vector<std::vector<Rat>>;

inline Dense dense_zero(Index rows, Index cols) {
    return Dense(static_cast<std::size_t>(rows),
                 std::vector<Rat>(static_cast<std::size_t>(cols), Rat(0)));
}

inline Dense to_dense(const SparseMat& m) {
    Dense d = dense_zero(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries())
        d[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = v;
    return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    Dense out = dense_zero(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline Dense dense_add(Dense a, const Dense& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            a[i][j] += b[i][j];
    return a;
}

inline Dense dense_scale(Dense a, const Rat& c) {
    for (auto& row : a)
        for (auto& x : row)
            x *= c;
    return a;
}

inline Dense dense_id(Index n) {
    Dense d = dense_zero(n, n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        d[i][i] = 1;
    return d;
}

inline Dense dense_kron(const Dense& a, const Dense& b) {
    const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Dense out = dense_zero(static_cast<Index>(ar * br), static_cast<Index>(ac * bc));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j) {
            if (a[i][j] == 0)
                continue;
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
    return out;
}

inline Index dense_rank(Dense a) {
    if (a.empty() || a[0].empty())
        return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    Index rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[row]);
        const Rat inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j)
            a[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline bool dense_equal(const Dense& a, const SparseMat& m) {
    if (static_cast<Index>(a.size()) != m.rows())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            if (a[i][j] != m.at(static_cast<Index>(i), static_cast<Index>(j)))
                return false;
    return true;
}

// Textbook assembly of the Hochschild coboundary on flattened coordinates,
// entirely through dense products: vec(A X) = (I (x) A) vec X and
// vec(X B) = (B^T (x) I) vec X.
inline Dense dense_delta_matrix(const Coalgebra& c, const Bicomodule& m, int degree) {
    const Index d = c.dim;
    Index dn = 1;
    for (int i = 0; i < degree; ++i)
        dn *= d;
    const Dense id_m = dense_id(m.dim_m);
    const Dense delta = to_dense(c.delta);
    Dense total = dense_zero(dn * d * m.dim_m, dn * m.dim_m);
    // term 1, (id (x) f) rho_l on flattened coordinates:
    // out[(col j)*d^{n+1} + c_leg*d^n + r] += rho_l[(c_leg, k), j] * f[r, k]
    for (Index j = 0; j < m.dim_m; ++j)
        for (Index c_leg = 0; c_leg < d; ++c_leg)
            for (Index k = 0; k < m.dim_m; ++k) {
                const Rat w = m.rho_l.at(c_leg * m.dim_m + k, j);
                if (w == 0)
                    continue;
                for (Index r = 0; r < dn; ++r)
                    total[static_cast<std::size_t>(j * (dn * d) + c_leg * dn + r)]
                         [static_cast<std::size_t>(k * dn + r)] += w;
            }
    // middle insertions via dense kron
    Rat sign(-1);
    for (int i = 1; i <= degree; ++i) {
        Index left = 1, right = 1;
        for (int t = 0; t < i - 1; ++t)
            left *= d;
        for (int t = 0; t < degree - i; ++t)
            right *= d;
        const Dense op = dense_kron(dense_id(left), dense_kron(delta, dense_id(right)));
        total = dense_add(std::move(total), dense_scale(dense_kron(id_m, op), sign));
        sign = -sign;
    }
    // term 3: out[(col j)*(d^n*d) + r*d + b] += rho_r[(u, b), j] * f[r, u]
    const Rat tail_sign = degree % 2 == 0 ? Rat(-1) : Rat(1);
    for (Index j = 0; j < m.dim_m; ++j)
        for (Index u = 0; u < m.dim_m; ++u)
            for (Index b = 0; b < d; ++b) {
                const Rat w = m.rho_r.at(u * d + b, j);
                if (w == 0)
                    continue;
                for (Index r = 0; r < dn; ++r)
                    total[static_cast<std::size_t>(j * (dn * d) + r * d + b)]
                         [static_cast<std::size_t>(u * dn + r)] += tail_sign * w;
            }
    return total;
}

inline Dense dense_omega_matrix(const BicomodulePair& mp, int degree) {
    const Index d = mp.base.c.dim;
    Index dn = 1;
    for (int i = 0; i < degree; ++i)
        dn *= d;
    const Dense psi_c = to_dense(mp.base.psi);
    Dense legs = dense_zero(dn, dn);
    for (int i = 1; i <= degree; ++i) {
        Index left = 1, right = 1;
        for (int t = 0; t < i - 1; ++t)
            left *= d;
        for (int t = 0; t < degree - i; ++t)
            right *= d;
        legs = dense_add(std::move(legs),
                         dense_kron(dense_id(left), dense_kron(psi_c, dense_id(right))));
    }
    const Dense first = dense_kron(dense_id(mp.m.dim_m), legs);
    const Dense second = dense_kron(to_dense(mp.psi_m.transpose()), dense_id(dn));
    return dense_add(first, dense_scale(second, Rat(-1)));
}

}  // namespace ct
