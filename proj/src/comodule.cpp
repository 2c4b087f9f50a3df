#include "coderco/comodule.hpp"

#include <string>
#include <utility>

#include "coderco/errors.hpp"

namespace coderco {

Bicomodule::Bicomodule(Index m_dimension, Index c_dimension, SparseMat left, SparseMat right)
    : dim_m(m_dimension), dim_c(c_dimension), rho_l(std::move(left)), rho_r(std::move(right)) {
    if (dim_m <= 0 || dim_c <= 0)
        throw ShapeError("bicomodule dimensions must be positive");
    if (rho_l.rows() != dim_c * dim_m || rho_l.cols() != dim_m)
        throw ShapeError("rho_l must be " + std::to_string(dim_c * dim_m) + "x" +
                         std::to_string(dim_m));
    if (rho_r.rows() != dim_m * dim_c || rho_r.cols() != dim_m)
        throw ShapeError("rho_r must be " + std::to_string(dim_m * dim_c) + "x" +
                         std::to_string(dim_m));
}

ValidationReport check_bicomodule(const Coalgebra& c, const Bicomodule& m) {
    if (m.dim_c != c.dim)
        throw ShapeError("bicomodule is over dimension " + std::to_string(m.dim_c) +
                         ", coalgebra has " + std::to_string(c.dim));
    const SparseMat id_c = SparseMat::identity(c.dim);
    const SparseMat id_m = SparseMat::identity(m.dim_m);
    ValidationReport report;
    report.laws.push_back({"left coassociativity",
                           kron(c.delta, id_m) * m.rho_l - kron(id_c, m.rho_l) * m.rho_l,
                           {c.dim, c.dim, m.dim_m}});
    report.laws.push_back({"right coassociativity",
                           kron(id_m, c.delta) * m.rho_r - kron(m.rho_r, id_c) * m.rho_r,
                           {m.dim_m, c.dim, c.dim}});
    report.laws.push_back({"coaction compatibility",
                           kron(id_c, m.rho_r) * m.rho_l - kron(m.rho_l, id_c) * m.rho_r,
                           {c.dim, m.dim_m, c.dim}});
    return report;
}

ValidationReport check_comodule_pair(const CoderPair& cp, const Bicomodule& m,
                                     const SparseMat& psi_m) {
    if (psi_m.rows() != m.dim_m || psi_m.cols() != m.dim_m)
        throw ShapeError("psi_m must be " + std::to_string(m.dim_m) + "x" +
                         std::to_string(m.dim_m));
    const SparseMat id_c = SparseMat::identity(cp.c.dim);
    const SparseMat id_m = SparseMat::identity(m.dim_m);
    ValidationReport report;
    report.laws.push_back(
        {"left coaction law",
         m.rho_l * psi_m - (kron(id_c, psi_m) + kron(cp.psi, id_m)) * m.rho_l,
         {cp.c.dim, m.dim_m}});
    report.laws.push_back(
        {"right coaction law",
         m.rho_r * psi_m - (kron(psi_m, id_c) + kron(id_m, cp.psi)) * m.rho_r,
         {m.dim_m, cp.c.dim}});
    return report;
}

BicomodulePair::BicomodulePair(CoderPair pair, Bicomodule module, SparseMat coderivation)
    : base(std::move(pair)), m(std::move(module)), psi_m(std::move(coderivation)) {
    require_valid(check_bicomodule(base.c, m), "bicomodule");
    require_valid(check_comodule_pair(base, m, psi_m), "module coderivation");
}

BicomodulePair coadjoint(const CoderPair& cp) {
    return BicomodulePair(cp, Bicomodule(cp.c.dim, cp.c.dim, cp.c.delta, cp.c.delta), cp.psi);
}

CoderPair semidirect(const BicomodulePair& mp) {
    const CoderPair& cp = mp.base;
    const Index d = cp.c.dim;
    const Index m = mp.m.dim_m;
    const Index total = d + m;
    SparseMat delta(total * total, total);
    for (const auto& [rc, v] : cp.c.delta.entries()) {
        const Index j = rc.first / d;
        const Index k = rc.first % d;
        delta.set(j * total + k, rc.second, v);
    }
    for (const auto& [rc, v] : mp.m.rho_l.entries()) {
        const Index j = rc.first / m;   // C component
        const Index k = rc.first % m;   // M component
        delta.add_at(j * total + (d + k), d + rc.second, v);
    }
    for (const auto& [rc, v] : mp.m.rho_r.entries()) {
        const Index j = rc.first / d;   // M component
        const Index k = rc.first % d;   // C component
        delta.add_at((d + j) * total + k, d + rc.second, v);
    }
    SparseMat psi(total, total);
    for (const auto& [rc, v] : cp.psi.entries())
        psi.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : mp.psi_m.entries())
        psi.set(d + rc.first, d + rc.second, v);
    return CoderPair(Coalgebra(total, std::move(delta)), std::move(psi));
}

}  // namespace coderco
