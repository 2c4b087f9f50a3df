#pragma once

#include <vector>

#include "coderco/report.hpp"
#include "coderco/sparse.hpp"

namespace coderco {

// Coassociative coalgebra (C, delta) without counit, given by structure
// constants: delta has shape d^2 x d, and column i holds the coordinates of
// delta(e_i) in the basis e_j (x) e_k |-> j*d + k.
//
// Construction checks dimensions and shape; coassociativity itself is
// checked by check_coassoc and enforced whenever a CoderPair is formed.
struct Coalgebra {
    Index dim;
    SparseMat delta;

    Coalgebra(Index dimension, SparseMat coproduct);
};

// (id (x) delta) o delta - (delta (x) id) o delta == 0, with the exact
// discrepancy in C (x) C (x) C on failure.
ValidationReport check_coassoc(const Coalgebra& c);

// delta o psi - (psi (x) id) o delta - (id (x) psi) o delta == 0.
ValidationReport check_coderivation(const Coalgebra& c, const SparseMat& psi);

// Coalgebra together with a coderivation psi (d x d). The constructor runs
// both checks and throws AxiomError with the full discrepancy listing.
struct CoderPair {
    Coalgebra c;
    SparseMat psi;

    CoderPair(Coalgebra coalg, SparseMat coderivation);
};

// diag(weights) as a d x d matrix; a coderivation exactly when the weights
// are additive across every coproduct term.
SparseMat grading_coderivation(const std::vector<Rat>& weights);

// Basis v_0..v_N with delta(v_m) = sum_i binom(m,i) v_{m-i} (x) v_i.
// The grading diag(0..N) is a coderivation for it.
Coalgebra divided_power(Index n_max);
SparseMat divided_power_grading(Index n_max);

// Monomial presentation on 1, x, .., x^N with delta(x^n) =
// sum_i binom(n,i) x^i (x) x^{n-i}; entrywise the same structure constants
// as divided_power (binomial symmetry), kept as its own named constructor.
Coalgebra binomial_bialgebra(Index n_max);
SparseMat binomial_grading(Index n_max);

// Basis e_ij (0 <= i,j < n, index i*n + j), delta(e_ij) =
// sum_k e_ik (x) e_kj. Weights w_ij = i - j give a diagonal coderivation.
Coalgebra comatrix(Index n);
SparseMat comatrix_grading(Index n);

// Words of length <= max_len over an alphabet of `letters` symbols, ordered
// by length then lexicographically; delta = sum of deconcatenations
// (including the empty splits). Word length gives a grading coderivation.
Coalgebra truncated_tensor_coalgebra(Index letters, Index max_len);
SparseMat truncated_tensor_grading(Index letters, Index max_len);

// One grouplike element: delta(g) = g (x) g.
Coalgebra grouplike();

// delta = 0 on the given dimension; any endomorphism is a coderivation.
Coalgebra zero_coproduct(Index dim);

}  // namespace coderco
