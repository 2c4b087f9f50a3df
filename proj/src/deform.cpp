#include "coderco/deform.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "coderco/cohomology.hpp"
#include "coderco/errors.hpp"

namespace coderco {

namespace {

void check_square(const SparseMat& m, Index dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw ShapeError(std::string(what) + " must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
}

// (Delta_r, psi_r) as a degree-2 cochain pair over the coadjoint coefficients.
CoderCochain coefficient_cochain(Index dim, const SparseMat& delta_r, const SparseMat& psi_r) {
    return CoderCochain(Cochain(2, dim, dim, delta_r), Cochain(1, dim, dim, psi_r));
}

bool cochain_is_zero(const CoderCochain& x) {
    return x.f.mat.is_zero() && (!x.g || x.g->mat.is_zero());
}

}  // namespace

Deformation::Deformation(CoderPair base_pair, std::vector<SparseMat> delta_coeffs,
                         std::vector<SparseMat> psi_coeffs)
    : base(std::move(base_pair)),
      order(static_cast<int>(delta_coeffs.size()) - 1),
      deltas(std::move(delta_coeffs)),
      psis(std::move(psi_coeffs)) {
    if (deltas.empty() || psis.size() != deltas.size())
        throw ShapeError("deformation needs equal-length coefficient lists down to order 0");
    const Index d = base.c.dim;
    const Index d2 = checked_pow(d, 2);
    for (const SparseMat& dk : deltas)
        if (dk.rows() != d2 || dk.cols() != d)
            throw ShapeError("coproduct coefficients must be " + std::to_string(d2) + "x" +
                             std::to_string(d));
    for (const SparseMat& pk : psis)
        check_square(pk, d, "coderivation coefficients");
    if (!(deltas[0] == base.c.delta) || !(psis[0] == base.psi))
        throw ShapeError("order-0 coefficients must equal the base structure maps");
}

Deformation trivial_deformation(const CoderPair& base, int order) {
    if (order < 0)
        throw ShapeError("negative deformation order");
    const Index d = base.c.dim;
    std::vector<SparseMat> deltas{base.c.delta};
    std::vector<SparseMat> psis{base.psi};
    for (int k = 1; k <= order; ++k) {
        deltas.emplace_back(checked_pow(d, 2), d);
        psis.emplace_back(d, d);
    }
    return Deformation(base, std::move(deltas), std::move(psis));
}

Deformation truncated(const Deformation& d, int order) {
    const int n = std::min(order, d.order);
    if (n < 0)
        throw ShapeError("negative deformation order");
    std::vector<SparseMat> deltas(d.deltas.begin(), d.deltas.begin() + n + 1);
    std::vector<SparseMat> psis(d.psis.begin(), d.psis.begin() + n + 1);
    return Deformation(d.base, std::move(deltas), std::move(psis));
}

Gauge::Gauge(Index dimension, std::vector<SparseMat> phi_coeffs)
    : dim(dimension), order(static_cast<int>(phi_coeffs.size()) - 1), phis(std::move(phi_coeffs)) {
    if (phis.empty())
        throw ShapeError("a gauge needs at least its order-0 coefficient");
    for (const SparseMat& p : phis)
        check_square(p, dim, "gauge coefficients");
    if (!(phis[0] == SparseMat::identity(dim)))
        throw ShapeError("the order-0 gauge coefficient must be the identity");
}

Gauge identity_gauge(Index dim, int order) {
    if (order < 0)
        throw ShapeError("negative gauge order");
    std::vector<SparseMat> phis{SparseMat::identity(dim)};
    for (int k = 1; k <= order; ++k)
        phis.emplace_back(dim, dim);
    return Gauge(dim, std::move(phis));
}

Gauge compose(const Gauge& later, const Gauge& earlier) {
    if (later.dim != earlier.dim)
        throw ShapeError("composed gauges act on different dimensions");
    const int order = std::min(later.order, earlier.order);
    std::vector<SparseMat> phis;
    for (int k = 0; k <= order; ++k) {
        SparseMat acc(later.dim, later.dim);
        for (int i = 0; i <= k; ++i)
            acc = acc + later.phis[static_cast<std::size_t>(i)] *
                            earlier.phis[static_cast<std::size_t>(k - i)];
        phis.push_back(std::move(acc));
    }
    return Gauge(later.dim, std::move(phis));
}

ValidationReport validate_deformation(const Deformation& d) {
    const Index dim = d.base.c.dim;
    const SparseMat id = SparseMat::identity(dim);
    ValidationReport report;
    for (int k = 0; k <= d.order; ++k) {
        SparseMat coassoc(checked_pow(dim, 3), dim);
        SparseMat coder(checked_pow(dim, 2), dim);
        for (int i = 0; i <= k; ++i) {
            const SparseMat& delta_i = d.deltas[static_cast<std::size_t>(i)];
            const SparseMat& delta_j = d.deltas[static_cast<std::size_t>(k - i)];
            const SparseMat& psi_i = d.psis[static_cast<std::size_t>(i)];
            const SparseMat& psi_j = d.psis[static_cast<std::size_t>(k - i)];
            coassoc = coassoc + kron(id, delta_i) * delta_j - kron(delta_i, id) * delta_j;
            coder = coder + delta_i * psi_j - kron(psi_i, id) * delta_j -
                    kron(id, psi_i) * delta_j;
        }
        report.laws.push_back({"t^" + std::to_string(k) + " coassociativity",
                               std::move(coassoc),
                               {dim, dim, dim}});
        report.laws.push_back(
            {"t^" + std::to_string(k) + " coderivation law", std::move(coder), {dim, dim}});
    }
    return report;
}

InfinitesimalResult infinitesimal(const Deformation& d) {
    if (d.order < 1)
        throw ShapeError("infinitesimal needs order at least 1");
    require_valid(validate_deformation(d), "deformation");
    const Index dim = d.base.c.dim;
    int r = 0;
    for (int k = 1; k <= d.order; ++k) {
        if (!d.deltas[static_cast<std::size_t>(k)].is_zero() ||
            !d.psis[static_cast<std::size_t>(k)].is_zero()) {
            r = k;
            break;
        }
    }
    CoderCochain x = r == 0 ? coefficient_cochain(dim, SparseMat(checked_pow(dim, 2), dim),
                                                  SparseMat(dim, dim))
                            : coefficient_cochain(dim, d.deltas[static_cast<std::size_t>(r)],
                                                  d.psis[static_cast<std::size_t>(r)]);
    const BicomodulePair ctx = coadjoint(d.base);
    const bool cocycle = cochain_is_zero(d_coder(ctx, x));
    return {r, std::move(x), cocycle};
}

ObstructionPair obstruction(const Deformation& d) {
    require_valid(validate_deformation(d), "deformation");
    const Index dim = d.base.c.dim;
    const SparseMat id = SparseMat::identity(dim);
    SparseMat ob_c(checked_pow(dim, 3), dim);
    SparseMat ob_psi(checked_pow(dim, 2), dim);
    for (int i = 1; i <= d.order; ++i) {
        const int j = d.order + 1 - i;
        if (j < 1 || j > d.order)
            continue;
        const SparseMat& delta_i = d.deltas[static_cast<std::size_t>(i)];
        const SparseMat& delta_j = d.deltas[static_cast<std::size_t>(j)];
        const SparseMat& psi_i = d.psis[static_cast<std::size_t>(i)];
        const SparseMat& psi_j = d.psis[static_cast<std::size_t>(j)];
        ob_c = ob_c + kron(delta_i, id) * delta_j - kron(id, delta_i) * delta_j;
        ob_psi = ob_psi + delta_i * psi_j - kron(id, psi_i) * delta_j -
                 kron(psi_i, id) * delta_j;
    }
    const BicomodulePair ctx = coadjoint(d.base);
    const CoderCochain ob(Cochain(3, dim, dim, ob_c), Cochain(2, dim, dim, ob_psi));
    if (!cochain_is_zero(d_coder(ctx, ob)))
        throw Error("obstruction failed its 3-cocycle certificate");
    return {std::move(ob_c), std::move(ob_psi)};
}

ExtendResult extend(const Deformation& d) {
    require_valid(validate_deformation(d), "deformation");
    const Index dim = d.base.c.dim;
    const BicomodulePair ctx = coadjoint(d.base);
    const ObstructionPair ob = obstruction(d);
    const SparseVec rhs =
        flatten(CoderCochain(Cochain(3, dim, dim, ob.ob_c), Cochain(2, dim, dim, ob.ob_psi)));
    const SparseMat d2 = d_coder_matrix(ctx, 2);
    const auto sol = solve(d2, rhs);
    ExtendResult result;
    if (sol) {
        const CoderCochain next = unflatten_coder(2, dim, dim, *sol);
        std::vector<SparseMat> deltas = d.deltas;
        std::vector<SparseMat> psis = d.psis;
        deltas.push_back(next.f.mat);
        psis.push_back(next.g->mat);
        Deformation out(d.base, std::move(deltas), std::move(psis));
        const ValidationReport re = validate_deformation(out);
        if (!re.ok())
            throw Error("extension failed re-validation:\n" + re.describe());
        result.extended = std::move(out);
        return result;
    }
    const SparseMat d3 = d_coder_matrix(ctx, 3);
    const std::vector<SparseVec> z = kernel_basis(d3);
    const std::vector<SparseVec> b = nonzero_columns(d2);
    const QuotientResult q = quotient_dim(z, b);
    const auto coords = class_coordinates(q.reps, b, rhs);
    if (!coords)
        throw Error("obstruction left the cocycle space");
    if (coords->is_zero())
        throw Error("extension unsolvable although the obstruction class vanishes");
    result.obstruction_class = *coords;
    return result;
}

Gauge gauge_inverse(const Gauge& g, int order) {
    if (order < 0)
        throw ShapeError("negative gauge order");
    const SparseMat id = SparseMat::identity(g.dim);
    const SparseMat zero(g.dim, g.dim);
    const auto phi = [&](int i) -> const SparseMat& {
        return i <= g.order ? g.phis[static_cast<std::size_t>(i)] : zero;
    };
    std::vector<SparseMat> inv{id};
    for (int k = 1; k <= order; ++k) {
        SparseMat acc(g.dim, g.dim);
        for (int i = 1; i <= k; ++i)
            acc = acc + phi(i) * inv[static_cast<std::size_t>(k - i)];
        inv.push_back(-acc);
    }
    for (int k = 0; k <= order; ++k) {
        SparseMat acc(g.dim, g.dim);
        for (int i = 0; i <= k; ++i)
            acc = acc + phi(i) * inv[static_cast<std::size_t>(k - i)];
        if (!(acc == (k == 0 ? id : zero)))
            throw Error("gauge inverse failed its composition check");
    }
    return Gauge(g.dim, std::move(inv));
}

Deformation apply_gauge(const Deformation& d, const Gauge& g) {
    const Index dim = d.base.c.dim;
    if (g.dim != dim)
        throw ShapeError("gauge dimension does not match the deformation");
    require_valid(validate_deformation(d), "deformation");
    const Gauge inv = gauge_inverse(g, d.order);
    const SparseMat zero(dim, dim);
    const auto phi = [&](int i) -> const SparseMat& {
        return i <= g.order ? g.phis[static_cast<std::size_t>(i)] : zero;
    };
    std::vector<SparseMat> deltas;
    std::vector<SparseMat> psis;
    for (int k = 0; k <= d.order; ++k) {
        SparseMat delta_k(checked_pow(dim, 2), dim);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                for (int c = 0; a + b + c <= k; ++c)
                    delta_k = delta_k +
                              kron(phi(a), phi(b)) * d.deltas[static_cast<std::size_t>(c)] *
                                  inv.phis[static_cast<std::size_t>(k - a - b - c)];
        deltas.push_back(std::move(delta_k));
        SparseMat psi_k(dim, dim);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                psi_k = psi_k + phi(a) * d.psis[static_cast<std::size_t>(b)] *
                                    inv.phis[static_cast<std::size_t>(k - a - b)];
        psis.push_back(std::move(psi_k));
    }
    Deformation out(d.base, std::move(deltas), std::move(psis));
    const ValidationReport re = validate_deformation(out);
    if (!re.ok())
        throw Error("gauged deformation failed re-validation:\n" + re.describe());
    return out;
}

ValidationReport check_equivalence(const Deformation& d1, const Deformation& d2,
                                   const Gauge& g) {
    const Index dim = d1.base.c.dim;
    if (d2.base.c.dim != dim || g.dim != dim)
        throw ShapeError("equivalence check needs matching dimensions");
    if (d1.order != d2.order)
        throw ShapeError("equivalence check needs equal orders");
    const SparseMat zero(dim, dim);
    const auto phi = [&](int i) -> const SparseMat& {
        return i <= g.order ? g.phis[static_cast<std::size_t>(i)] : zero;
    };
    ValidationReport report;
    for (int k = 0; k <= d1.order; ++k) {
        SparseMat law1(checked_pow(dim, 2), dim);
        for (int i = 0; i <= k; ++i)
            law1 = law1 + d2.deltas[static_cast<std::size_t>(i)] * phi(k - i);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                law1 = law1 -
                       kron(phi(a), phi(b)) * d1.deltas[static_cast<std::size_t>(k - a - b)];
        report.laws.push_back(
            {"t^" + std::to_string(k) + " coproduct intertwining", std::move(law1), {dim, dim}});
        SparseMat law2(dim, dim);
        for (int i = 0; i <= k; ++i)
            law2 = law2 + d2.psis[static_cast<std::size_t>(i)] * phi(k - i) -
                   phi(i) * d1.psis[static_cast<std::size_t>(k - i)];
        report.laws.push_back(
            {"t^" + std::to_string(k) + " coderivation intertwining", std::move(law2), {dim}});
    }
    return report;
}

ValidationReport equivalent_infinitesimals_check(const Deformation& d1, const Deformation& d2,
                                                 const Gauge& g) {
    const Index dim = d1.base.c.dim;
    if (d1.order < 1 || d2.order < 1)
        throw ShapeError("infinitesimal comparison needs order at least 1");
    if (!(d1.base.c.delta == d2.base.c.delta) || !(d1.base.psi == d2.base.psi))
        throw ShapeError("infinitesimal comparison needs a common base pair");
    if (g.dim != dim)
        throw ShapeError("gauge dimension does not match");
    const SparseMat phi1 = g.order >= 1 ? g.phis[1] : SparseMat(dim, dim);
    const BicomodulePair ctx = coadjoint(d1.base);
    const Cochain dphi = delta_c(ctx, Cochain(1, dim, dim, phi1));
    const Cochain wphi = omega(ctx, Cochain(1, dim, dim, phi1));
    ValidationReport report;
    report.laws.push_back({"order-1 coproduct shift",
                           d2.deltas[1] - d1.deltas[1] - dphi.mat,
                           {dim, dim}});
    report.laws.push_back(
        {"order-1 coderivation shift", d2.psis[1] - d1.psis[1] + wphi.mat, {dim}});
    return report;
}

TrivializeResult trivialize(const Deformation& d, int budget) {
    if (budget < 0)
        throw ShapeError("negative budget");
    require_valid(validate_deformation(d), "deformation");
    const Index dim = d.base.c.dim;
    const int n = std::min(d.order, budget);
    Deformation current = truncated(d, n);
    Gauge acc = identity_gauge(dim, n);
    const BicomodulePair ctx = coadjoint(d.base);
    const SparseMat d1 = d_coder_matrix(ctx, 1);
    for (int pass = 0; pass <= n + 1; ++pass) {
        int r = 0;
        for (int k = 1; k <= n; ++k) {
            if (!current.deltas[static_cast<std::size_t>(k)].is_zero() ||
                !current.psis[static_cast<std::size_t>(k)].is_zero()) {
                r = k;
                break;
            }
        }
        if (r == 0) {
            TrivializeResult result;
            result.gauge = std::move(acc);
            return result;
        }
        const SparseVec target = flatten(coefficient_cochain(
            dim, current.deltas[static_cast<std::size_t>(r)],
            current.psis[static_cast<std::size_t>(r)]));
        SparseVec rhs(target.dim);
        for (const auto& [i, v] : target.entries)
            rhs.entries.emplace(i, -v);
        const auto sol = solve(d1, rhs);
        if (!sol) {
            const SparseMat d2 = d_coder_matrix(ctx, 2);
            const std::vector<SparseVec> z = kernel_basis(d2);
            const std::vector<SparseVec> b = nonzero_columns(d1);
            const QuotientResult q = quotient_dim(z, b);
            const auto coords = class_coordinates(q.reps, b, target);
            if (!coords)
                throw Error("blocking coefficient is not a 2-cocycle");
            if (coords->is_zero())
                throw Error("blocked trivialization with a vanishing class");
            TrivializeResult result;
            result.blocked_order = r;
            result.blocking_class = *coords;
            return result;
        }
        std::vector<SparseMat> phis(static_cast<std::size_t>(n) + 1, SparseMat(dim, dim));
        phis[0] = SparseMat::identity(dim);
        phis[static_cast<std::size_t>(r)] = unflatten(1, dim, dim, *sol).mat;
        const Gauge step(dim, std::move(phis));
        current = apply_gauge(current, step);
        acc = compose(step, acc);
    }
    throw Error("trivialization failed to raise the lowest nonzero order");
}

}  // namespace coderco
