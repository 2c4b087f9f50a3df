#pragma once

#include <optional>
#include <vector>

#include "coderco/cochain.hpp"

namespace coderco {

// Truncated 1-parameter deformation of a Coder pair: coefficient lists
// Delta_0..Delta_n (each d^2 x d) and psi_0..psi_n (each d x d) with the
// order-0 coefficients equal to the base structure maps. Construction
// checks shapes and the order-0 anchoring only; the deformation equations
// are checked by validate_deformation, never assumed.
struct Deformation {
    CoderPair base;
    int order;
    std::vector<SparseMat> deltas;
    std::vector<SparseMat> psis;

    Deformation(CoderPair base_pair, std::vector<SparseMat> delta_coeffs,
                std::vector<SparseMat> psi_coeffs);
};

// All coefficients beyond order 0 zero.
Deformation trivial_deformation(const CoderPair& base, int order);

// d truncated to min(order, d.order).
Deformation truncated(const Deformation& d, int order);

// Truncated formal automorphism: phi_0..phi_order with phi_0 = Id.
struct Gauge {
    Index dim;
    int order;
    std::vector<SparseMat> phis;

    Gauge(Index dimension, std::vector<SparseMat> phi_coeffs);
};

Gauge identity_gauge(Index dim, int order);

// Coefficients of the composite later o earlier (apply earlier first).
Gauge compose(const Gauge& later, const Gauge& earlier);

// For each k = 0..order, the t^k coefficient of coassociativity,
//   sum_{i+j=k} (id (x) Delta_i) Delta_j - (Delta_i (x) id) Delta_j = 0,
// and of the coderivation law,
//   sum_{i+j=k} Delta_i psi_j - (psi_i (x) id) Delta_j
//                             - (id (x) psi_i) Delta_j = 0.
// k = 0 is exactly the base pair's axioms.
ValidationReport validate_deformation(const Deformation& d);

struct InfinitesimalResult {
    int order_r;          // first order with a nonzero coefficient, 0 if none
    CoderCochain cochain; // degree 2: (Delta_r, psi_r), zero when order_r = 0
    bool is_cocycle;      // d^2 of the cochain vanishes
};

// The first nonzero coefficient pair of a valid deformation, certified to
// be a 2-cocycle of the combined complex over the coadjoint coefficients.
InfinitesimalResult infinitesimal(const Deformation& d);

// The degree-(3,2) obstruction pair of a valid order-n deformation:
//   ob_c   = sum_{i+j=n+1, i,j>=1} (Delta_i (x) id) Delta_j - (id (x) Delta_i) Delta_j
//   ob_psi = sum_{i+j=n+1, i,j>=1} Delta_i psi_j - (id (x) psi_i) Delta_j
//                                                - (psi_i (x) id) Delta_j
struct ObstructionPair {
    SparseMat ob_c;    // d^3 x d
    SparseMat ob_psi;  // d^2 x d
};

// Computes the pair and certifies d^3(ob_c, ob_psi) = 0, throwing Error on
// a failed certificate (it cannot fail for a valid deformation).
ObstructionPair obstruction(const Deformation& d);

struct ExtendResult {
    // The order-(n+1) deformation when the obstruction is a coboundary.
    std::optional<Deformation> extended;
    // Otherwise the nonzero coordinates of the obstruction class in the
    // computed H^3 representative basis.
    SparseVec obstruction_class;
};

// Solves d^2(Delta_{n+1}, psi_{n+1}) = obstruction exactly (free variables
// zero); the successful extension is re-validated at order n+1.
ExtendResult extend(const Deformation& d);

// Power-series inverse Id - phi_1 t + ... up to the given order, with the
// composition identity checked internally.
Gauge gauge_inverse(const Gauge& g, int order);

// Delta_k -> sum_{a+b+c+e=k} (phi_a (x) phi_b) Delta_c inv_e and
// psi_k -> sum_{a+b+c=k} phi_a psi_b inv_c, truncated at d.order; the
// result is re-validated.
Deformation apply_gauge(const Deformation& d, const Gauge& g);

// Coefficientwise intertwining of g from d1 to d2, for k = 0..order:
//   sum_{i+j=k} d2.Delta_i phi_j = sum_{a+b+c=k} (phi_a (x) phi_b) d1.Delta_c
//   sum_{i+j=k} d2.psi_i phi_j = sum_{i+j=k} phi_i d1.psi_j
ValidationReport check_equivalence(const Deformation& d1, const Deformation& d2,
                                   const Gauge& g);

// The order-1 shadow of equivalence: d2's infinitesimal minus d1's equals
// d^1(phi_1) componentwise.
ValidationReport equivalent_infinitesimals_check(const Deformation& d1,
                                                 const Deformation& d2, const Gauge& g);

struct TrivializeResult {
    // Composite gauge carrying d to the trivial deformation when it exists
    // within the budget.
    std::optional<Gauge> gauge;
    int blocked_order = 0;     // first order whose class is nonzero
    SparseVec blocking_class;  // its coordinates in the H^2 basis
};

// Repeatedly kills the lowest nonzero order r by solving
// d^1(phi) = -(Delta_r, psi_r) and gauging by Id + phi t^r, working at
// order min(d.order, budget).
TrivializeResult trivialize(const Deformation& d, int budget);

}  // namespace coderco
