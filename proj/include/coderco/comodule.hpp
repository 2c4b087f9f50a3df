#pragma once

#include "coderco/coalgebra.hpp"

namespace coderco {

// Bicomodule (M, rho_l, rho_r) over a coalgebra of dimension dim_c.
// rho_l: M -> C (x) M, shape (dim_c*dim_m) x dim_m, basis
// e_j (x) u_k |-> j*dim_m + k. rho_r: M -> M (x) C, shape
// (dim_m*dim_c) x dim_m, basis u_j (x) e_k |-> j*dim_c + k.
// Construction checks shapes; the coaction laws live in check_bicomodule.
struct Bicomodule {
    Index dim_m;
    Index dim_c;
    SparseMat rho_l;
    SparseMat rho_r;

    Bicomodule(Index m_dimension, Index c_dimension, SparseMat left, SparseMat right);
};

// Left/right coassociativity of the coactions plus their compatibility.
ValidationReport check_bicomodule(const Coalgebra& c, const Bicomodule& m);

// The two laws tying a module coderivation psi_m to the pair:
//   rho_l o psi_m = (id (x) psi_m + psi_c (x) id) o rho_l
//   rho_r o psi_m = (psi_m (x) id + id (x) psi_c) o rho_r
ValidationReport check_comodule_pair(const CoderPair& cp, const Bicomodule& m,
                                     const SparseMat& psi_m);

// Bicomodule with a compatible coderivation, bundled with the ambient pair
// it lives over. The constructor validates the coaction laws and both pair
// laws eagerly.
struct BicomodulePair {
    CoderPair base;
    Bicomodule m;
    SparseMat psi_m;

    BicomodulePair(CoderPair pair, Bicomodule module, SparseMat coderivation);
};

// M = C with rho_l = rho_r = delta and psi_m = psi.
BicomodulePair coadjoint(const CoderPair& cp);

// Coalgebra structure on C (+) M: delta restricted to C is delta, and on M
// it is rho_l + rho_r; the coderivation is the block diagonal psi (+) psi_m.
// Basis order: C first, then M. Revalidated on construction.
CoderPair semidirect(const BicomodulePair& mp);

}  // namespace coderco
