#pragma once

#include "coderco/coalgebra.hpp"

namespace coderco {

// Finite-dimensional associative algebra with a derivation: mult is the
// multiplication A (x) A -> A as a d x d^2 matrix (column index j*d + k for
// the product of basis vectors j and k), phi an endomorphism of A.
// Construction checks shapes only; the axioms live in check_der_pair.
struct DerPair {
    Index dim;
    SparseMat mult;
    SparseMat phi;

    DerPair(Index dimension, SparseMat multiplication, SparseMat derivation);
};

// Associativity mult (mult (x) id) = mult (id (x) mult) and the Leibniz
// rule phi mult = mult (phi (x) id) + mult (id (x) phi).
ValidationReport check_der_pair(const DerPair& a);

// Transpose both structure maps under the index-identified dual basis.
// Output is validated; failure signals a bug and throws Error.
DerPair dual_der_pair(const CoderPair& cp);
CoderPair dual_coder_pair(const DerPair& a);

// Entrywise comparison of dual_coder_pair(dual_der_pair(cp)) with cp; the
// canonical identification is the identity, so both laws must be zero.
ValidationReport double_dual_check(const CoderPair& cp);

}  // namespace coderco
