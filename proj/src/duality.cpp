#include "coderco/duality.hpp"

#include <string>
#include <utility>

#include "coderco/errors.hpp"

namespace coderco {

DerPair::DerPair(Index dimension, SparseMat multiplication, SparseMat derivation)
    : dim(dimension), mult(std::move(multiplication)), phi(std::move(derivation)) {
    if (dim <= 0)
        throw ShapeError("a Der pair needs positive dimension");
    const Index d2 = checked_pow(dim, 2);
    if (mult.rows() != dim || mult.cols() != d2)
        throw ShapeError("multiplication must be " + std::to_string(dim) + "x" +
                         std::to_string(d2));
    if (phi.rows() != dim || phi.cols() != dim)
        throw ShapeError("derivation must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
}

ValidationReport check_der_pair(const DerPair& a) {
    const SparseMat id = SparseMat::identity(a.dim);
    ValidationReport report;
    report.laws.push_back({"associativity",
                           a.mult * kron(a.mult, id) - a.mult * kron(id, a.mult),
                           {a.dim, a.dim, a.dim}});
    report.laws.push_back({"Leibniz rule",
                           a.phi * a.mult - a.mult * (kron(a.phi, id) + kron(id, a.phi)),
                           {a.dim, a.dim}});
    return report;
}

DerPair dual_der_pair(const CoderPair& cp) {
    DerPair a(cp.c.dim, cp.c.delta.transpose(), cp.psi.transpose());
    const ValidationReport report = check_der_pair(a);
    if (!report.ok())
        throw Error("dual of a valid Coder pair failed Der validation:\n" + report.describe());
    return a;
}

CoderPair dual_coder_pair(const DerPair& a) {
    // CoderPair construction re-runs coassociativity and the coderivation
    // law, so an invalid transpose surfaces as AxiomError there.
    return CoderPair(Coalgebra(a.dim, a.mult.transpose()), a.phi.transpose());
}

ValidationReport double_dual_check(const CoderPair& cp) {
    const CoderPair round = dual_coder_pair(dual_der_pair(cp));
    ValidationReport report;
    report.laws.push_back({"double-dual coproduct",
                           round.c.delta - cp.c.delta,
                           {cp.c.dim, cp.c.dim}});
    report.laws.push_back({"double-dual coderivation", round.psi - cp.psi, {cp.c.dim}});
    return report;
}

}  // namespace coderco
