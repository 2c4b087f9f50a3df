#pragma once

#include <optional>
#include <vector>

#include "coderco/cochain.hpp"

namespace coderco {

// Exact cocycle/coboundary/cohomology data for one degree, on flattened
// cochain coordinates. Representatives complete a coboundary basis to a
// cocycle basis, each scaled so its first nonzero coordinate is 1.
struct DegreeData {
    int degree = 0;
    Index dim_space = 0;
    Index dim_z = 0;
    Index dim_b = 0;
    Index dim_h = 0;
    std::vector<SparseVec> representatives;
    double millis = 0.0;  // wall time; never serialized
};

struct CohomologyReport {
    std::vector<DegreeData> degrees;

    const DegreeData& at_degree(int n) const;
};

// Hochschild cohomology of the coalgebra with coefficients in m for degrees
// 0..nmax (B^0 = 0).
CohomologyReport hochschild_cohomology(const Coalgebra& c, const Bicomodule& m, int nmax);

// Cohomology of the combined complex for degrees 1..nmax. There are no
// 0-cochains, so B^1 = 0 and H^1 = ker(d^1).
CohomologyReport coder_cohomology(const BicomodulePair& mp, int nmax);

// Basis of {f in ker(delta^1) : psi_c f = f psi_m}, assembled from the
// degree-1 coboundary matrix stacked on the commutator map. Independent of
// d_coder_matrix; spans ker(d^1) exactly.
std::vector<SparseVec> h1_coder_direct(const BicomodulePair& mp);

// Degree row of the exactness comparison: the combined-complex dimension
// against ker/coker of the map induced by omega on Hochschild cohomology.
struct LesDegree {
    int degree = 0;
    Index dim_h_coder = 0;
    Index dim_ker_omega = 0;    // ker of omega_* on H^n
    Index dim_coker_omega = 0;  // coker of omega_* on H^(n-1)
    bool matches = false;
};

struct LesReport {
    std::vector<LesDegree> degrees;
    bool all_match = true;
};

// Computes omega_* on each Hochschild H^n (omega_matrix on representatives,
// reduced modulo coboundaries) and compares dimH^n_combined with
// dim ker(omega_*|H^n) + dim coker(omega_*|H^(n-1)) for 1 <= n <= nmax.
LesReport les_check(const BicomodulePair& mp, int nmax);

// Coordinates of [v] in the span of reps modulo span(b_gens): solves
// [reps | b_gens] x = v and returns the reps block of x, or nullopt when v
// lies outside the combined span.
std::optional<SparseVec> class_coordinates(const std::vector<SparseVec>& reps,
                                           const std::vector<SparseVec>& b_gens,
                                           const SparseVec& v);

}  // namespace coderco
