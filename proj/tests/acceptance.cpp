// Acceptance gate: one criterion per numbered block, one PASS/FAIL line
// each, nonzero exit when any line fails. Criteria that fail by design of
// the shipped complex (the combined complex has no degree-0 cochains) stay
// red here with their analysis printed rather than being weakened.
#define DOCTEST_CONFIG_DISABLE // support.hpp pulls in the test framework
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coderco/cli.hpp"
#include "coderco/io.hpp"

namespace {

using namespace ct;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void note(const std::string& line) { notes.push_back(line); }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

// Shared per-example context: the coadjoint bicomodule pair, the degree-2
// combined differential, and a basis of its kernel (= valid order-1
// coefficient pairs).
struct ExampleCtx {
    Named ex;
    BicomodulePair mp;
    SparseMat d2;
    std::vector<SparseVec> z2;

    explicit ExampleCtx(const Named& named)
        : ex(named), mp(coadjoint(named.pair)), d2(d_coder_matrix(mp, 2)),
          z2(kernel_basis(d2)) {}
};

std::vector<ExampleCtx>& contexts() {
    static std::vector<ExampleCtx> ctxs = [] {
        std::vector<ExampleCtx> out;
        for (const Named& ex : small_roster())
            out.emplace_back(ex);
        return out;
    }();
    return ctxs;
}

Deformation order1(const ExampleCtx& ctx, const SparseVec& v) {
    CoderCochain x = unflatten_coder(2, ctx.mp.base.c.dim, ctx.mp.m.dim_m, v);
    return Deformation(ctx.ex.pair, {ctx.ex.pair.c.delta, x.f.mat},
                       {ctx.ex.pair.psi, x.g->mat});
}

SparseVec flatten_pair(const ObstructionPair& ob, Index d) {
    return flatten(CoderCochain(Cochain(3, d, d, ob.ob_c), Cochain(2, d, d, ob.ob_psi)));
}

Dense dense_coder_matrix(const BicomodulePair& mp, int degree) {
    const Coalgebra& c = mp.base.c;
    const Dense top_delta = dense_delta_matrix(c, mp.m, degree);
    const Dense omega_n = dense_omega_matrix(mp, degree);
    const Index top_rows = static_cast<Index>(top_delta.size());
    const Index top_cols = static_cast<Index>(top_delta[0].size());
    if (degree == 1) {
        Dense out = dense_zero(top_rows + static_cast<Index>(omega_n.size()), top_cols);
        for (Index r = 0; r < top_rows; ++r)
            for (Index cidx = 0; cidx < top_cols; ++cidx)
                out[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)] =
                    top_delta[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)];
        for (std::size_t r = 0; r < omega_n.size(); ++r)
            for (std::size_t cidx = 0; cidx < omega_n[r].size(); ++cidx)
                out[static_cast<std::size_t>(top_rows) + r][cidx] = -omega_n[r][cidx];
        return out;
    }
    const Dense low_delta = dense_delta_matrix(c, mp.m, degree - 1);
    const Index low_rows = static_cast<Index>(low_delta.size());
    const Index low_cols = static_cast<Index>(low_delta[0].size());
    const Rat sign = degree % 2 == 0 ? Rat(1) : Rat(-1);
    Dense out = dense_zero(top_rows + low_rows, top_cols + low_cols);
    for (Index r = 0; r < top_rows; ++r)
        for (Index cidx = 0; cidx < top_cols; ++cidx)
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)] =
                top_delta[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)];
    for (Index r = 0; r < low_rows; ++r) {
        for (Index cidx = 0; cidx < top_cols; ++cidx)
            out[static_cast<std::size_t>(top_rows + r)][static_cast<std::size_t>(cidx)] =
                sign * omega_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)];
        for (Index cidx = 0; cidx < low_cols; ++cidx)
            out[static_cast<std::size_t>(top_rows + r)]
               [static_cast<std::size_t>(top_cols + cidx)] =
                low_delta[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)];
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

Criterion criterion_axioms() {
    Criterion c{1, "axiom suite over the example families"};
    const auto start = Clock::now();
    int validated = 0;
    try {
        for (Index n = 0; n <= 6; ++n) {
            CoderPair(divided_power(n), divided_power_grading(n));
            CoderPair(binomial_bialgebra(n), binomial_grading(n));
            validated += 2;
        }
        for (Index n = 1; n <= 3; ++n) {
            CoderPair(comatrix(n), SparseMat(n * n, n * n));
            ++validated;
        }
        for (Index v = 1; v <= 2; ++v)
            for (Index n = 0; n <= 3; ++n) {
                CoderPair(truncated_tensor_coalgebra(v, n), truncated_tensor_grading(v, n));
                ++validated;
            }
        CoderPair(grouplike(), SparseMat(1, 1));
        ++validated;
        for (Index d = 1; d <= 4; ++d) {
            CoderPair(zero_coproduct(d), grading_coderivation(range_weights(d)));
            ++validated;
        }
    } catch (const std::exception& e) {
        c.require(false, std::string("a family member failed validation: ") + e.what());
    }
    c.note("validated " + std::to_string(validated) + " family members");

    // Negative 1: Delta(e0) = e0 (x) e1 on dim 2 leaves exactly the
    // third-slot discrepancy -1 in column 0.
    SparseMat skew(4, 2);
    skew.set(1, 0, Rat(1));
    ValidationReport r1 = check_coassoc(Coalgebra(2, skew));
    c.require(!r1.ok() && r1.laws[0].discrepancy.nnz() == 1 &&
                  r1.laws[0].discrepancy.at(3, 0) == Rat(-1),
              "misassociated coproduct must fail with discrepancy -1 at (e0(x)e1(x)e1, e0)");

    // Negative 2: the identity on the grouplike coalgebra misses the
    // co-Leibniz rule by exactly -1.
    ValidationReport r2 = check_coderivation(grouplike(), SparseMat::identity(1));
    c.require(!r2.ok() && r2.laws[0].discrepancy.at(0, 0) == Rat(-1),
              "identity coderivation on the grouplike coalgebra must fail by -1");

    const double secs = seconds_since(start);
    c.note("elapsed " + std::to_string(secs) + " s (budget 5 s)");
    c.require(secs < 5.0, "runtime budget exceeded");
    return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion criterion_complex_laws() {
    Criterion c{2, "complex laws on 100 random cochains per degree"};
    const auto start = Clock::now();
    TestRng rng(20240801);
    long checks = 0;
    for (const ExampleCtx& ctx : contexts()) {
        const Index d = ctx.mp.base.c.dim;
        for (int degree = 0; degree <= 3; ++degree) {
            for (int trial = 0; trial < 100; ++trial) {
                Cochain f = random_cochain(rng, degree, d, ctx.mp.m.dim_m);
                if (!delta_c(ctx.mp, delta_c(ctx.mp, f)).mat.is_zero()) {
                    c.require(false, "delta o delta != 0 on " + ctx.ex.name +
                                         " degree " + std::to_string(degree));
                    return c;
                }
                if (!(omega(ctx.mp, delta_c(ctx.mp, f)).mat ==
                      delta_c(ctx.mp, omega(ctx.mp, f)).mat)) {
                    c.require(false, "omega delta != delta omega on " + ctx.ex.name +
                                         " degree " + std::to_string(degree));
                    return c;
                }
                ++checks;
            }
        }
        for (int degree = 1; degree <= 3; ++degree) {
            for (int trial = 0; trial < 100; ++trial) {
                Cochain f = random_cochain(rng, degree, d, ctx.mp.m.dim_m);
                CoderCochain x = degree == 1
                                     ? CoderCochain(f)
                                     : CoderCochain(f, random_cochain(rng, degree - 1, d,
                                                                      ctx.mp.m.dim_m));
                CoderCochain dd = d_coder(ctx.mp, d_coder(ctx.mp, x));
                if (!(dd.f.mat.is_zero() && dd.g->mat.is_zero())) {
                    c.require(false, "d o d != 0 on " + ctx.ex.name + " degree " +
                                         std::to_string(degree));
                    return c;
                }
                ++checks;
            }
        }
    }
    const double secs = seconds_since(start);
    c.note("verified " + std::to_string(checks) + " exact identities across " +
           std::to_string(contexts().size()) + " examples");
    c.note("elapsed " + std::to_string(secs) + " s (budget 60 s)");
    c.require(secs < 60.0, "runtime budget exceeded");
    return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion_h1_direct() {
    Criterion c{3, "direct degree-1 space equals ker of the combined differential"};
    for (const ExampleCtx& ctx : contexts()) {
        std::vector<SparseVec> direct = h1_coder_direct(ctx.mp);
        SparseMat d1 = d_coder_matrix(ctx.mp, 1);
        std::vector<SparseVec> kernel = kernel_basis(d1);
        RowSpan span_direct(d1.cols()), span_kernel(d1.cols());
        for (const SparseVec& v : direct)
            span_direct.insert(v);
        for (const SparseVec& v : kernel)
            span_kernel.insert(v);
        bool mutual = direct.size() == kernel.size();
        for (const SparseVec& v : direct)
            mutual = mutual && span_kernel.contains(v);
        for (const SparseVec& v : kernel)
            mutual = mutual && span_direct.contains(v);
        c.require(mutual, "subspace mismatch on " + ctx.ex.name);
        c.note(ctx.ex.name + ": dim " + std::to_string(direct.size()));
    }
    return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion_les() {
    Criterion c{4, "exactness comparison rows for n <= 3"};
    for (const ExampleCtx& ctx : contexts()) {
        const int nmax = ctx.mp.base.c.dim <= 4 ? 3 : 2;
        LesReport report = les_check(ctx.mp, nmax);
        std::ostringstream line;
        line << ctx.ex.name << " (nmax " << nmax << "):";
        for (const LesDegree& row : report.degrees) {
            line << " n=" << row.degree << " " << row.dim_h_coder
                 << (row.matches ? "==" : "!=") << row.dim_ker_omega << "+"
                 << row.dim_coker_omega;
            c.require(row.matches, ctx.ex.name + " degree " + std::to_string(row.degree) +
                                       " row mismatch");
        }
        c.notes.push_back(line.str());
    }
    if (!c.pass) {
        c.note("analysis: the shipped complex has no degree-0 cochains, so the");
        c.note("degree-1 row drops dim coker(omega|H^0) and mismatches whenever that");
        c.note("cokernel is nonzero; degree 2 additionally mismatches when B^1 != 0.");
        c.note("From degree 3 on, every row matches (see the unit suites).");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion_coseparable() {
    Criterion c{5, "coseparable vanishing for the comatrix pair"};
    CoderPair cp(comatrix(2), SparseMat(4, 4));
    BicomodulePair mp = coadjoint(cp);
    CohomologyReport hoch = hochschild_cohomology(cp.c, mp.m, 2);
    c.require(hoch.at_degree(1).dim_h == 0, "H^1(M, C) must vanish");
    c.require(hoch.at_degree(2).dim_h == 0, "H^2(M, C) must vanish");
    c.note("H^1 = " + std::to_string(hoch.at_degree(1).dim_h) + ", H^2 = " +
           std::to_string(hoch.at_degree(2).dim_h) + " (coalgebra complex): vanishing holds");
    CohomologyReport coder = coder_cohomology(mp, 2);
    const Index h2 = coder.at_degree(2).dim_h;
    c.require(h2 == 0, "H^2 of the combined complex expected 0, computed " +
                           std::to_string(h2));
    if (h2 != 0) {
        c.note("analysis: with psi = 0 the combined differential acts blockwise,");
        c.note("ker d^2 = Z^2 x Z^1 while im d^1 = B^2 x 0, so H^2_combined =");
        c.note("H^2 + Z^1 = 0 + 3 here; the degree-1 cocycles survive the pairing.");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion_hand_oracles() {
    Criterion c{6, "hand oracle values against dense brute force"};
    struct Case {
        const char* name;
        CoderPair cp;
        Index h1;
        Index h2;
    };
    std::vector<Case> cases;
    cases.push_back({"grouplike", CoderPair(grouplike(), SparseMat(1, 1)), 0, 0});
    cases.push_back({"zero_coproduct(2), psi diag(0,1)",
                     CoderPair(zero_coproduct(2), grading_coderivation(range_weights(2))), 2,
                     5});
    for (const Case& cs : cases) {
        BicomodulePair mp = coadjoint(cs.cp);
        CohomologyReport coder = coder_cohomology(mp, 2);
        const Index dim1 = coder_cochain_dim(cs.cp.c.dim, cs.cp.c.dim, 1);
        const Index dim2 = coder_cochain_dim(cs.cp.c.dim, cs.cp.c.dim, 2);
        const Index rank1 = dense_rank(dense_coder_matrix(mp, 1));
        const Index rank2 = dense_rank(dense_coder_matrix(mp, 2));
        const Index brute_h1 = dim1 - rank1;
        const Index brute_h2 = (dim2 - rank2) - rank1;
        c.require(coder.at_degree(1).dim_h == cs.h1,
                  std::string(cs.name) + ": H^1 hand value");
        c.require(coder.at_degree(2).dim_h == cs.h2,
                  std::string(cs.name) + ": H^2 hand value");
        c.require(brute_h1 == cs.h1, std::string(cs.name) + ": dense H^1 disagrees");
        c.require(brute_h2 == cs.h2, std::string(cs.name) + ": dense H^2 disagrees");
        c.note(std::string(cs.name) + ": H^1 = " + std::to_string(brute_h1) +
               ", H^2 = " + std::to_string(brute_h2) + " (sparse, dense, and hand agree)");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion_infinitesimals() {
    Criterion c{7, "100 sampled order-1 deformations per example are cocycles"};
    TestRng rng(20240807);
    for (const ExampleCtx& ctx : contexts()) {
        const Index dim = coder_cochain_dim(ctx.mp.base.c.dim, ctx.mp.m.dim_m, 2);
        int nonzero = 0;
        for (int trial = 0; trial < 100; ++trial) {
            SparseVec v = random_combination(rng, ctx.z2, dim);
            Deformation d = order1(ctx, v);
            if (!validate_deformation(d).ok()) {
                c.require(false, "sampled kernel element is not a valid order-1 "
                                 "deformation on " + ctx.ex.name);
                return c;
            }
            InfinitesimalResult res = infinitesimal(d);
            if (!res.is_cocycle) {
                c.require(false, "certificate failed on " + ctx.ex.name);
                return c;
            }
            if (res.order_r != 0)
                ++nonzero;
        }
        c.note(ctx.ex.name + ": dim Z^2 = " + std::to_string(ctx.z2.size()) + ", " +
               std::to_string(nonzero) + "/100 samples nonzero");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 8

Criterion criterion_obstructions() {
    Criterion c{8, "obstruction certificates and the extension criterion to order 3"};
    TestRng rng(20240808);
    long extended_count = 0, obstructed_count = 0;
    for (const ExampleCtx& ctx : contexts()) {
        if (ctx.mp.base.c.dim > 4)
            continue;
        const Index dim = coder_cochain_dim(ctx.mp.base.c.dim, ctx.mp.m.dim_m, 2);
        for (int trial = 0; trial < 25; ++trial) {
            Deformation d = order1(ctx, random_combination(rng, ctx.z2, dim));
            for (int step = 0; step < 2; ++step) {
                ObstructionPair ob = obstruction(d); // throws when d^3(ob) != 0
                const bool solvable =
                    solve(ctx.d2, flatten_pair(ob, ctx.mp.base.c.dim)).has_value();
                ExtendResult ext = extend(d);
                if (ext.extended.has_value() != solvable) {
                    c.require(false, "extension succeeded xor obstruction was a "
                                     "coboundary on " + ctx.ex.name);
                    return c;
                }
                if (!ext.extended) {
                    if (ext.obstruction_class.is_zero()) {
                        c.require(false, "obstructed extension must report a nonzero "
                                         "class on " + ctx.ex.name);
                        return c;
                    }
                    ++obstructed_count;
                    break;
                }
                if (!validate_deformation(*ext.extended).ok()) {
                    c.require(false, "extended deformation failed revalidation on " +
                                         ctx.ex.name);
                    return c;
                }
                d = *ext.extended;
                ++extended_count;
            }
        }
    }
    // A handcrafted non-extendable first order: the obstruction survives.
    CoderPair cp(zero_coproduct(2), SparseMat(2, 2));
    SparseMat bad(4, 2);
    bad.set(1, 0, Rat(1));
    Deformation d(cp, {cp.c.delta, bad}, {cp.psi, SparseMat(2, 2)});
    ObstructionPair ob = obstruction(d);
    ExtendResult ext = extend(d);
    c.require(!ob.ob_c.is_zero() && !ext.extended.has_value() &&
                  !ext.obstruction_class.is_zero(),
              "the non-coassociative first order must obstruct with a nonzero class");
    c.note("extensions: " + std::to_string(extended_count) + ", obstructed: " +
           std::to_string(obstructed_count + 1) + " (certificates all exact)");
    return c;
}

// ---------------------------------------------------------------- criterion 9

Criterion criterion_rigidity() {
    Criterion c{9, "trivialization within budget 3 where H^2 of the complex vanishes"};
    TestRng rng(20240809);

    // Grouplike: H^2 of the combined complex is 0 and every sampled valid
    // deformation trivializes.
    {
        ExampleCtx ctx(small_roster()[0]);
        const Index dim = coder_cochain_dim(1, 1, 2);
        int succeeded = 0;
        for (int trial = 0; trial < 50; ++trial) {
            Deformation d = order1(ctx, random_combination(rng, ctx.z2, dim));
            ExtendResult e2 = extend(d);
            if (e2.extended) {
                ExtendResult e3 = extend(*e2.extended);
                if (e3.extended)
                    d = *e3.extended;
            }
            TrivializeResult res = trivialize(d, 3);
            if (!res.gauge) {
                c.require(false, "grouplike deformation failed to trivialize");
                return c;
            }
            Deformation flat = apply_gauge(truncated(d, res.gauge->order), *res.gauge);
            bool zeroed = true;
            for (int k = 1; k <= flat.order; ++k)
                zeroed = zeroed && flat.deltas[static_cast<std::size_t>(k)].is_zero() &&
                         flat.psis[static_cast<std::size_t>(k)].is_zero();
            if (!zeroed || !check_equivalence(truncated(d, res.gauge->order),
                                              trivial_deformation(ctx.ex.pair,
                                                                  res.gauge->order),
                                              *res.gauge)
                                .ok()) {
                c.require(false, "produced gauge does not intertwine with the trivial "
                                 "deformation");
                return c;
            }
            ++succeeded;
        }
        c.note("grouplike: " + std::to_string(succeeded) + "/50 trivialized with "
               "verified gauges (dim H^2 = 0)");
    }

    // comatrix(2) with psi = 0: the premise dim H^2 = 0 is not what the
    // computation yields, and deformations with a nonzero class stay blocked.
    {
        CoderPair cp(comatrix(2), SparseMat(4, 4));
        ExampleCtx ctx(Named{"comatrix(2) psi 0", cp});
        const Index h2 = coder_cohomology(ctx.mp, 2).at_degree(2).dim_h;
        c.require(h2 == 0, "comatrix(2) with zero coderivation: expected dim H^2 = 0, "
                           "computed " + std::to_string(h2));
        const Index dim = coder_cochain_dim(4, 4, 2);
        int trivialized = 0, blocked = 0;
        for (int trial = 0; trial < 50; ++trial) {
            Deformation d = order1(ctx, random_combination(rng, ctx.z2, dim));
            TrivializeResult res = trivialize(d, 3);
            if (res.gauge) {
                ++trivialized;
                if (!check_equivalence(truncated(d, res.gauge->order),
                                       trivial_deformation(cp, res.gauge->order),
                                       *res.gauge)
                         .ok()) {
                    c.require(false, "a successful gauge failed the equivalence check");
                    return c;
                }
            } else {
                ++blocked;
                if (res.blocking_class.is_zero()) {
                    c.require(false, "blocked trivialization must carry a nonzero class");
                    return c;
                }
            }
        }
        c.note("comatrix(2) psi 0: dim H^2 = " + std::to_string(h2) + "; " +
               std::to_string(trivialized) + " trivialized, " + std::to_string(blocked) +
               " blocked with nonzero class out of 50");
        if (h2 != 0) {
            c.note("analysis: the coalgebra part vanishes (H^n = 0, n = 1, 2) but the");
            c.note("combined degree-2 space keeps Z^1 (dim 3); e.g. psi_t = t psi_1 with");
            c.note("psi_1 any nonzero coderivation is valid and never gauge-trivial,");
            c.note("since trivializing it needs psi_1 = -omega(phi) = 0.");
        }
    }
    return c;
}

// --------------------------------------------------------------- criterion 10

Criterion criterion_gauge_shift() {
    Criterion c{10, "100 gauge moves shift infinitesimals by exact coboundaries"};
    TestRng rng(20240810);
    long pairs = 0;
    for (const ExampleCtx& ctx : contexts()) {
        const Index d = ctx.mp.base.c.dim;
        const Index dim = coder_cochain_dim(d, ctx.mp.m.dim_m, 2);
        for (int trial = 0; trial < 10; ++trial) {
            Deformation d1 = order1(ctx, random_combination(rng, ctx.z2, dim));
            Gauge g(d, {SparseMat::identity(d), random_mat(rng, d, d, 4)});
            Deformation d2 = apply_gauge(d1, g);
            if (!equivalent_infinitesimals_check(d1, d2, g).ok()) {
                c.require(false, "order-1 shift is not the coboundary of phi_1 on " +
                                     ctx.ex.name);
                return c;
            }
            ++pairs;
        }
    }
    c.note(std::to_string(pairs) + " (deformation, gauge) pairs verified exactly");
    return c;
}

// --------------------------------------------------------------- criterion 11

Criterion criterion_duality() {
    Criterion c{11, "dualization round trip across the roster"};
    for (const ExampleCtx& ctx : contexts()) {
        try {
            DerPair a = dual_der_pair(ctx.ex.pair);
            CoderPair back = dual_coder_pair(a);
            c.require(back.c.delta == ctx.ex.pair.c.delta && back.psi == ctx.ex.pair.psi,
                      "double dual is not the identity on " + ctx.ex.name);
            c.require(double_dual_check(ctx.ex.pair).ok(),
                      "double-dual report not clean on " + ctx.ex.name);
        } catch (const std::exception& e) {
            c.require(false, ctx.ex.name + ": " + e.what());
        }
    }
    c.note("all " + std::to_string(contexts().size()) +
           " pairs dualize, validate, and return entrywise");
    return c;
}

// --------------------------------------------------------------- criterion 12

Criterion criterion_cli_determinism() {
    Criterion c{12, "byte-identical CLI output and lossless file round trips"};
    namespace fs = std::filesystem;
    const fs::path dir("/tmp/coderco_acceptance_cli");
    fs::create_directories(dir);
    auto file = [&](const std::string& name) { return (dir / name).string(); };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::pair<int, std::string>(code, out.str());
    };

    // Seed files.
    CoderPair g(grouplike(), SparseMat(1, 1));
    Deformation rescale(g, {g.c.delta, g.c.delta, SparseMat(1, 1)},
                        {g.psi, SparseMat(1, 1), SparseMat(1, 1)});
    write_json_file(file("rescale.json"), deformation_to_json(rescale));
    std::vector<std::vector<std::string>> commands = {
        {"example", "divided_power", "4", "--psi", "grading"},
        {"example", "binomial_bialgebra", "3", "--psi", "grading"},
        {"example", "comatrix", "2", "--out", file("cm.json")},
        {"example", "tensor", "2", "2", "--psi", "grading", "--out", file("t22.json")},
        {"example", "grouplike", "--out", file("g.json")},
        {"example", "zero_coproduct", "3", "--psi", "grading"},
        {"validate", file("t22.json")},
        {"cohomology", file("g.json"), "--nmax", "2", "--les"},
        {"cohomology", file("cm.json"), "--nmax", "2"},
        {"deform", "validate", file("rescale.json")},
        {"deform", "infinitesimal", file("rescale.json")},
        {"deform", "obstruct", file("rescale.json")},
        {"deform", "extend", file("rescale.json"), "--out", file("ext.json")},
        {"deform", "trivialize", file("rescale.json"), "--out", file("gauge.json")},
        {"deform", "gauge", file("rescale.json"), file("gauge.json")},
        {"dualize", file("cm.json"), "--out", file("dual.json")},
        {"dualize", file("dual.json")},
    };
    int compared = 0;
    for (const auto& cmd : commands) {
        auto first = run(cmd);
        auto second = run(cmd);
        if (first.first != 0 || second.first != 0) {
            c.require(false, "command " + cmd[0] + " exited nonzero");
            break;
        }
        if (first.second != second.second) {
            c.require(false, "output of " + cmd[0] + " differs between runs");
            break;
        }
        ++compared;
    }
    c.note(std::to_string(compared) + "/" + std::to_string(commands.size()) +
           " commands byte-identical across two runs");

    // Round trip: every structure file reparses to the same bytes.
    for (const std::string& name :
         {std::string("cm.json"), std::string("t22.json"), std::string("g.json"),
          std::string("rescale.json"), std::string("ext.json"), std::string("gauge.json"),
          std::string("dual.json")}) {
        const std::string path = file(name);
        const std::string bytes = slurp(path);
        c.require(!bytes.empty() && dump_json(read_json_file(path)) == bytes,
                  name + " does not round trip byte-identically");
    }
    c.note("7 structure files reparse and re-serialize to identical bytes");
    fs::remove_all(dir);
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion_axioms());
    results.push_back(criterion_complex_laws());
    results.push_back(criterion_h1_direct());
    results.push_back(criterion_les());
    results.push_back(criterion_coseparable());
    results.push_back(criterion_hand_oracles());
    results.push_back(criterion_infinitesimals());
    results.push_back(criterion_obstructions());
    results.push_back(criterion_rigidity());
    results.push_back(criterion_gauge_shift());
    results.push_back(criterion_duality());
    results.push_back(criterion_cli_determinism());

    int failed = 0;
    for (const Criterion& c : results) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
                  << "\n";
        for (const std::string& line : c.notes)
            std::cout << "      " << line << "\n";
        if (!c.pass)
            ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criteria failed")
              << " (" << results.size() - static_cast<std::size_t>(failed) << "/"
              << results.size() << ")\n";
    return failed == 0 ? 0 : 1;
}
