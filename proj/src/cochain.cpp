#include "coderco/cochain.hpp"

#include <string>
#include <utility>
#include <vector>

#include "coderco/config.hpp"
#include "coderco/errors.hpp"

namespace coderco {

namespace {

std::vector<std::vector<std::pair<Index, Rat>>> by_column(const SparseMat& m) {
    std::vector<std::vector<std::pair<Index, Rat>>> cols(static_cast<std::size_t>(m.cols()));
    for (const auto& [rc, v] : m.entries())
        cols[static_cast<std::size_t>(rc.second)].emplace_back(rc.first, v);
    return cols;
}

// Routes tensor leg `leg` (1-based) of f through op: C -> C^(x)k, given as
// a d^k x d matrix; the result has degree n-1+k. Only the stored entries of
// f are touched, so this stays cheap even when d^n is large.
Cochain apply_on_leg(const Cochain& f, const SparseMat& op, int k, int leg) {
    const Index d = f.dim_c;
    const int n = f.degree;
    const Index low_size = checked_pow(d, n - leg);
    const Index out_mid = checked_pow(d, k);
    SparseMat out(checked_pow(d, n - 1 + k), f.dim_m);
    const auto op_cols = by_column(op);
    for (const auto& [rc, v] : f.mat.entries()) {
        const Index high = rc.first / (low_size * d);
        const Index digit = (rc.first / low_size) % d;
        const Index low = rc.first % low_size;
        for (const auto& [target, w] : op_cols[static_cast<std::size_t>(digit)])
            out.add_at((high * out_mid + target) * low_size + low, rc.second, v * w);
    }
    return Cochain(n - 1 + k, d, f.dim_m, std::move(out));
}

// (id (x) f) o rho_l, one degree up.
Cochain left_wedge(const Bicomodule& m, const Cochain& f) {
    const Index dn = checked_pow(f.dim_c, f.degree);
    SparseMat out(checked_pow(f.dim_c, f.degree + 1), f.dim_m);
    const auto f_cols = by_column(f.mat);
    for (const auto& [rc, w] : m.rho_l.entries()) {
        const Index c_leg = rc.first / m.dim_m;
        const Index m_leg = rc.first % m.dim_m;
        for (const auto& [r, v] : f_cols[static_cast<std::size_t>(m_leg)])
            out.add_at(c_leg * dn + r, rc.second, w * v);
    }
    return Cochain(f.degree + 1, f.dim_c, f.dim_m, std::move(out));
}

// (f (x) id) o rho_r, one degree up.
Cochain right_wedge(const Bicomodule& m, const Cochain& f) {
    SparseMat out(checked_pow(f.dim_c, f.degree + 1), f.dim_m);
    const auto f_cols = by_column(f.mat);
    for (const auto& [rc, w] : m.rho_r.entries()) {
        const Index m_leg = rc.first / f.dim_c;
        const Index c_leg = rc.first % f.dim_c;
        for (const auto& [r, v] : f_cols[static_cast<std::size_t>(m_leg)])
            out.add_at(r * f.dim_c + c_leg, rc.second, w * v);
    }
    return Cochain(f.degree + 1, f.dim_c, f.dim_m, std::move(out));
}

void check_shapes(Index dim_c, Index dim_m, const Cochain& f) {
    if (f.dim_c != dim_c || f.dim_m != dim_m)
        throw ShapeError("cochain over " + std::to_string(f.dim_c) + "/" +
                         std::to_string(f.dim_m) + " does not fit spaces of dimension " +
                         std::to_string(dim_c) + "/" + std::to_string(dim_m));
}

void check_degree_bound(int degree) {
    if (degree > config().max_degree)
        throw OverflowError("degree " + std::to_string(degree) +
                            " exceeds the configured maximum " +
                            std::to_string(config().max_degree));
    if (degree < 0)
        throw ShapeError("negative cochain degree");
}

// id^(i-1) (x) op (x) id^(n-i) on C^(x)n for a d^k x d operator op.
SparseMat leg_operator(Index d, int n, const SparseMat& op, int k, int leg) {
    const SparseMat pre = SparseMat::identity(checked_pow(d, leg - 1));
    const SparseMat post = SparseMat::identity(checked_pow(d, n - leg));
    checked_pow(d, n - 1 + k);
    return kron(pre, kron(op, post));
}

}  // namespace

Cochain::Cochain(int deg, Index c_dimension, Index m_dimension, SparseMat matrix)
    : degree(deg), dim_c(c_dimension), dim_m(m_dimension), mat(std::move(matrix)) {
    if (degree < 0)
        throw ShapeError("negative cochain degree");
    if (dim_c <= 0 || dim_m <= 0)
        throw ShapeError("cochain dimensions must be positive");
    const Index rows = checked_pow(dim_c, degree);
    if (mat.rows() != rows || mat.cols() != dim_m)
        throw ShapeError("degree-" + std::to_string(degree) + " cochain must be " +
                         std::to_string(rows) + "x" + std::to_string(dim_m) + ", got " +
                         std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
}

Cochain zero_cochain(int degree, Index dim_c, Index dim_m) {
    return Cochain(degree, dim_c, dim_m, SparseMat(checked_pow(dim_c, degree), dim_m));
}

Cochain delta_c(const Coalgebra& c, const Bicomodule& m, const Cochain& f) {
    check_shapes(c.dim, m.dim_m, f);
    Cochain out = left_wedge(m, f);
    int sign = -1;
    for (int i = 1; i <= f.degree; ++i, sign = -sign) {
        const Cochain mid = apply_on_leg(f, c.delta, 2, i);
        out.mat = sign > 0 ? out.mat + mid.mat : out.mat - mid.mat;
    }
    const Cochain right = right_wedge(m, f);
    out.mat = f.degree % 2 == 0 ? out.mat - right.mat : out.mat + right.mat;
    return out;
}

Cochain delta_c(const BicomodulePair& mp, const Cochain& f) {
    return delta_c(mp.base.c, mp.m, f);
}

Cochain omega(const BicomodulePair& mp, const Cochain& f) {
    check_shapes(mp.base.c.dim, mp.m.dim_m, f);
    Cochain out = zero_cochain(f.degree, f.dim_c, f.dim_m);
    for (int i = 1; i <= f.degree; ++i)
        out.mat = out.mat + apply_on_leg(f, mp.base.psi, 1, i).mat;
    out.mat = out.mat - f.mat * mp.psi_m;
    return out;
}

CoderCochain::CoderCochain(Cochain top) : f(std::move(top)) {
    if (f.degree != 1)
        throw ShapeError("a combined cochain without lower part must have degree 1");
}

CoderCochain::CoderCochain(Cochain top, Cochain lower) : f(std::move(top)), g(std::move(lower)) {
    if (f.degree < 2 || g->degree != f.degree - 1)
        throw ShapeError("combined cochain components must have degrees (n, n-1), n >= 2");
    if (g->dim_c != f.dim_c || g->dim_m != f.dim_m)
        throw ShapeError("combined cochain components live over different spaces");
}

CoderCochain d_coder(const BicomodulePair& mp, const CoderCochain& x) {
    const int n = x.degree();
    Cochain top = delta_c(mp, x.f);
    Cochain wf = omega(mp, x.f);
    if (n == 1) {
        wf.mat = -wf.mat;
        return CoderCochain(std::move(top), std::move(wf));
    }
    Cochain lower = delta_c(mp, *x.g);
    lower.mat = n % 2 == 0 ? lower.mat + wf.mat : lower.mat - wf.mat;
    return CoderCochain(std::move(top), std::move(lower));
}

Index cochain_dim(Index dim_c, Index dim_m, int degree) {
    return checked_mul(checked_pow(dim_c, degree), dim_m);
}

Index coder_cochain_dim(Index dim_c, Index dim_m, int degree) {
    if (degree == 0)
        return 0;
    if (degree == 1)
        return cochain_dim(dim_c, dim_m, 1);
    return cochain_dim(dim_c, dim_m, degree) + cochain_dim(dim_c, dim_m, degree - 1);
}

SparseVec flatten(const Cochain& f) {
    return vec_column_major(f.mat);
}

Cochain unflatten(int degree, Index dim_c, Index dim_m, const SparseVec& v) {
    return Cochain(degree, dim_c, dim_m,
                   unvec_column_major(v, checked_pow(dim_c, degree), dim_m));
}

SparseVec flatten(const CoderCochain& x) {
    SparseVec out(coder_cochain_dim(x.f.dim_c, x.f.dim_m, x.degree()));
    const SparseVec top = flatten(x.f);
    for (const auto& [i, v] : top.entries)
        out.entries.emplace(i, v);
    if (x.g) {
        const SparseVec lower = flatten(*x.g);
        for (const auto& [i, v] : lower.entries)
            out.entries.emplace(top.dim + i, v);
    }
    return out;
}

CoderCochain unflatten_coder(int degree, Index dim_c, Index dim_m, const SparseVec& v) {
    if (degree < 1)
        throw ShapeError("combined cochains start at degree 1");
    if (v.dim != coder_cochain_dim(dim_c, dim_m, degree))
        throw ShapeError("flattened combined cochain has the wrong length");
    const Index split = cochain_dim(dim_c, dim_m, degree);
    SparseVec top(split);
    SparseVec lower(v.dim - split);
    for (const auto& [i, val] : v.entries) {
        if (i < split)
            top.entries.emplace(i, val);
        else
            lower.entries.emplace(i - split, val);
    }
    Cochain f = unflatten(degree, dim_c, dim_m, top);
    if (degree == 1)
        return CoderCochain(std::move(f));
    return CoderCochain(std::move(f), unflatten(degree - 1, dim_c, dim_m, lower));
}

SparseMat delta_matrix(const Coalgebra& c, const Bicomodule& m, int degree) {
    check_degree_bound(degree);
    const Index d = c.dim;
    const Index dn = checked_pow(d, degree);
    const Index dn1 = checked_pow(d, degree + 1);
    SparseMat out(checked_mul(dn1, m.dim_m), checked_mul(dn, m.dim_m));
    // vec of (id (x) f) rho_l, one entry family per rho_l entry.
    for (const auto& [rc, w] : m.rho_l.entries()) {
        const Index c_leg = rc.first / m.dim_m;
        const Index m_leg = rc.first % m.dim_m;
        for (Index r = 0; r < dn; ++r)
            out.add_at(rc.second * dn1 + c_leg * dn + r, m_leg * dn + r, w);
    }
    // Coproduct insertions on flattened coordinates: vec(L f) = (I (x) L) vec(f).
    if (degree > 0) {
        SparseMat middle(dn1, dn);
        int sign = -1;
        for (int i = 1; i <= degree; ++i, sign = -sign) {
            const SparseMat term = leg_operator(d, degree, c.delta, 2, i);
            middle = sign > 0 ? middle + term : middle - term;
        }
        out = out + kron(SparseMat::identity(m.dim_m), middle);
    }
    // vec of (f (x) id) rho_r with the boundary sign.
    const bool negate = degree % 2 == 0;
    for (const auto& [rc, w] : m.rho_r.entries()) {
        const Index m_leg = rc.first / d;
        const Index c_leg = rc.first % d;
        const Rat signed_w = negate ? Rat(-w) : w;
        for (Index a = 0; a < dn; ++a)
            out.add_at(rc.second * dn1 + a * d + c_leg, m_leg * dn + a, signed_w);
    }
    return out;
}

SparseMat omega_matrix(const BicomodulePair& mp, int degree) {
    check_degree_bound(degree);
    const Index d = mp.base.c.dim;
    const Index dn = checked_pow(d, degree);
    SparseMat legs(dn, dn);
    for (int i = 1; i <= degree; ++i)
        legs = legs + leg_operator(d, degree, mp.base.psi, 1, i);
    SparseMat out = kron(SparseMat::identity(mp.m.dim_m), legs);
    return out - kron(mp.psi_m.transpose(), SparseMat::identity(dn));
}

SparseMat d_coder_matrix(const BicomodulePair& mp, int degree) {
    if (degree < 1)
        throw ShapeError("the combined differential starts at degree 1");
    check_degree_bound(degree);
    const Index d = mp.base.c.dim;
    const Index m = mp.m.dim_m;
    const SparseMat top = delta_matrix(mp.base.c, mp.m, degree);
    SparseMat mid = omega_matrix(mp, degree);
    if (degree % 2 != 0)
        mid = -mid;
    const Index f_dim = cochain_dim(d, m, degree);
    const Index out_f_dim = cochain_dim(d, m, degree + 1);
    if (degree == 1) {
        SparseMat out(out_f_dim + f_dim, f_dim);
        for (const auto& [rc, v] : top.entries())
            out.set(rc.first, rc.second, v);
        for (const auto& [rc, v] : mid.entries())
            out.set(out_f_dim + rc.first, rc.second, v);
        return out;
    }
    const SparseMat lower = delta_matrix(mp.base.c, mp.m, degree - 1);
    const Index g_dim = cochain_dim(d, m, degree - 1);
    SparseMat out(out_f_dim + f_dim, f_dim + g_dim);
    for (const auto& [rc, v] : top.entries())
        out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : mid.entries())
        out.set(out_f_dim + rc.first, rc.second, v);
    for (const auto& [rc, v] : lower.entries())
        out.set(out_f_dim + rc.first, f_dim + rc.second, v);
    return out;
}

}  // namespace coderco
