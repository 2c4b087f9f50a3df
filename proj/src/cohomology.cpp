#include "coderco/cohomology.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <utility>

#include "coderco/errors.hpp"

namespace coderco {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Kernel of the outgoing differential modulo the span of image_gens.
DegreeData one_degree(int degree, const SparseMat& outgoing,
                      const std::vector<SparseVec>& image_gens) {
    const auto start = Clock::now();
    DegreeData data;
    data.degree = degree;
    data.dim_space = outgoing.cols();
    std::vector<SparseVec> z = kernel_basis(outgoing);
    data.dim_z = static_cast<Index>(z.size());
    QuotientResult q = quotient_dim(z, image_gens);
    data.dim_h = q.dim;
    data.dim_b = data.dim_z - q.dim;
    data.representatives = std::move(q.reps);
    data.millis = ms_since(start);
    return data;
}

// Shared driver: one degree after another, feeding each differential's
// image into the next degree and asserting rank-nullity consistency
// (dimB^(n+1) = rank(d^n)) along the way.
CohomologyReport run_complex(int first_degree, int nmax,
                             const std::function<SparseMat(int)>& matrix_at,
                             std::vector<std::vector<SparseVec>>* images_out) {
    CohomologyReport report;
    std::vector<SparseVec> prev_image;
    Index prev_rank = 0;
    for (int n = first_degree; n <= nmax; ++n) {
        const SparseMat d_n = matrix_at(n);
        DegreeData data = one_degree(n, d_n, prev_image);
        if (data.dim_b != prev_rank)
            throw Error("rank-nullity mismatch at degree " + std::to_string(n));
        if (images_out)
            images_out->push_back(std::move(prev_image));
        report.degrees.push_back(std::move(data));
        prev_image = nonzero_columns(d_n);
        prev_rank = d_n.cols() - report.degrees.back().dim_z;
    }
    return report;
}

}  // namespace

const DegreeData& CohomologyReport::at_degree(int n) const {
    for (const DegreeData& data : degrees)
        if (data.degree == n)
            return data;
    throw Error("no cohomology data at degree " + std::to_string(n));
}

CohomologyReport hochschild_cohomology(const Coalgebra& c, const Bicomodule& m, int nmax) {
    if (nmax < 0)
        throw ShapeError("nmax must be nonnegative");
    return run_complex(
        0, nmax, [&](int n) { return delta_matrix(c, m, n); }, nullptr);
}

CohomologyReport coder_cohomology(const BicomodulePair& mp, int nmax) {
    if (nmax < 1)
        throw ShapeError("nmax must be at least 1 for the combined complex");
    return run_complex(
        1, nmax, [&](int n) { return d_coder_matrix(mp, n); }, nullptr);
}

std::vector<SparseVec> h1_coder_direct(const BicomodulePair& mp) {
    const Index d = mp.base.c.dim;
    const SparseMat db = delta_matrix(mp.base.c, mp.m, 1);
    const SparseMat comm = kron(SparseMat::identity(mp.m.dim_m), mp.base.psi) -
                           kron(mp.psi_m.transpose(), SparseMat::identity(d));
    SparseMat stacked(db.rows() + comm.rows(), db.cols());
    for (const auto& [rc, v] : db.entries())
        stacked.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : comm.entries())
        stacked.set(db.rows() + rc.first, rc.second, v);
    return kernel_basis(stacked);
}

LesReport les_check(const BicomodulePair& mp, int nmax) {
    if (nmax < 1)
        throw ShapeError("nmax must be at least 1");
    std::vector<std::vector<SparseVec>> images;
    const CohomologyReport hoch = run_complex(
        0, nmax, [&](int n) { return delta_matrix(mp.base.c, mp.m, n); }, &images);
    const CohomologyReport coder = coder_cohomology(mp, nmax);

    // Rank of the induced map omega_*: H^n -> H^n for every degree. For an
    // endomorphism of H^n both the kernel and the cokernel have dimension
    // dimH^n - rank.
    std::vector<Index> omega_rank(static_cast<std::size_t>(nmax) + 1, 0);
    for (int n = 0; n <= nmax; ++n) {
        const DegreeData& data = hoch.at_degree(n);
        const Index h = data.dim_h;
        if (h == 0)
            continue;
        const SparseMat om = omega_matrix(mp, n);
        std::vector<SparseVec> rhs;
        rhs.reserve(data.representatives.size());
        for (const SparseVec& rep : data.representatives)
            rhs.push_back(mat_vec(om, rep));
        std::vector<SparseVec> basis_cols = data.representatives;
        const std::vector<SparseVec>& b_gens = images[static_cast<std::size_t>(n)];
        basis_cols.insert(basis_cols.end(), b_gens.begin(), b_gens.end());
        const SparseMat basis = columns_to_mat(om.rows(), basis_cols);
        const auto sols = solve_many(basis, rhs);
        SparseMat w(h, h);
        for (Index j = 0; j < h; ++j) {
            const auto& sol = sols[static_cast<std::size_t>(j)];
            if (!sol)
                throw Error("omega image left the cocycle space at degree " +
                            std::to_string(n));
            for (const auto& [i, v] : sol->entries)
                if (i < h)
                    w.set(i, j, v);
        }
        omega_rank[static_cast<std::size_t>(n)] = rank(w);
    }

    LesReport report;
    for (int n = 1; n <= nmax; ++n) {
        LesDegree row;
        row.degree = n;
        row.dim_h_coder = coder.at_degree(n).dim_h;
        const Index h_n = hoch.at_degree(n).dim_h;
        const Index h_prev = hoch.at_degree(n - 1).dim_h;
        row.dim_ker_omega = h_n - omega_rank[static_cast<std::size_t>(n)];
        row.dim_coker_omega = h_prev - omega_rank[static_cast<std::size_t>(n - 1)];
        row.matches = row.dim_h_coder == row.dim_ker_omega + row.dim_coker_omega;
        report.all_match = report.all_match && row.matches;
        report.degrees.push_back(row);
    }
    return report;
}

std::optional<SparseVec> class_coordinates(const std::vector<SparseVec>& reps,
                                           const std::vector<SparseVec>& b_gens,
                                           const SparseVec& v) {
    std::vector<SparseVec> cols = reps;
    cols.insert(cols.end(), b_gens.begin(), b_gens.end());
    const SparseMat basis = columns_to_mat(v.dim, cols);
    const auto sol = solve(basis, v);
    if (!sol)
        return std::nullopt;
    SparseVec coords(static_cast<Index>(reps.size()));
    for (const auto& [i, val] : sol->entries)
        if (i < coords.dim)
            coords.entries.emplace(i, val);
    return coords;
}

}  // namespace coderco
