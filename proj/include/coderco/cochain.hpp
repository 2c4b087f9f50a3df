#pragma once

#include <optional>

#include "coderco/comodule.hpp"

namespace coderco {

// Degree-n cochain: a linear map M -> C^(x)n stored as a d^n x m matrix,
// rows indexed by the flat tensor index i_1*d^(n-1) + ... + i_n. Degree 0
// uses C^(x)0 = F, shape 1 x m.
struct Cochain {
    int degree;
    Index dim_c;
    Index dim_m;
    SparseMat mat;

    Cochain(int deg, Index c_dimension, Index m_dimension, SparseMat matrix);
};

Cochain zero_cochain(int degree, Index dim_c, Index dim_m);

// Hochschild coboundary, raising degree by one:
//   delta_c(f) = (id (x) f) rho_l
//              + sum_{i=1..n} (-1)^i (id^(i-1) (x) delta (x) id^(n-i)) f
//              + (-1)^(n+1) (f (x) id) rho_r
// Degree-0 input uses the identifications C (x) F = C = F (x) C, leaving
// delta_c(f) = (id (x) f) rho_l - (f (x) id) rho_r.
Cochain delta_c(const Coalgebra& c, const Bicomodule& m, const Cochain& f);
Cochain delta_c(const BicomodulePair& mp, const Cochain& f);

// Degree-preserving coderivation action
//   omega(f) = sum_{i=1..n} (id^(i-1) (x) psi_c (x) id^(n-i)) f - f psi_m
// with an empty leg sum at degree 0.
Cochain omega(const BicomodulePair& mp, const Cochain& f);

// Cochain of the combined complex. Degree 1 is a single map M -> C; degree
// n >= 2 pairs f of degree n with g of degree n-1. There is no degree 0.
struct CoderCochain {
    Cochain f;
    std::optional<Cochain> g;

    explicit CoderCochain(Cochain top);
    CoderCochain(Cochain top, Cochain lower);

    int degree() const { return f.degree; }
};

// d(f) = (delta_c f, -omega f) in degree 1 and
// d(f, g) = (delta_c f, delta_c g + (-1)^n omega f) in degree n >= 2.
CoderCochain d_coder(const BicomodulePair& mp, const CoderCochain& x);

// Flattened coordinates. A cochain flattens column-major
// (vec[col*rows + row]); a combined cochain stacks vec(f) then vec(g).
Index cochain_dim(Index dim_c, Index dim_m, int degree);
Index coder_cochain_dim(Index dim_c, Index dim_m, int degree);
SparseVec flatten(const Cochain& f);
Cochain unflatten(int degree, Index dim_c, Index dim_m, const SparseVec& v);
SparseVec flatten(const CoderCochain& x);
CoderCochain unflatten_coder(int degree, Index dim_c, Index dim_m, const SparseVec& v);

// The same three maps as matrices on flattened coordinates. d_coder_matrix
// is the block form [[delta^n, 0], [(-1)^n omega^n, delta^(n-1)]] (the
// second column absent at n = 1). Degrees beyond the configured maximum or
// flattened sizes beyond the index bound throw OverflowError.
SparseMat delta_matrix(const Coalgebra& c, const Bicomodule& m, int degree);
SparseMat omega_matrix(const BicomodulePair& mp, int degree);
SparseMat d_coder_matrix(const BicomodulePair& mp, int degree);

}  // namespace coderco
