#include "coderco/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "coderco/cochain.hpp"
#include "coderco/cohomology.hpp"
#include "coderco/config.hpp"
#include "coderco/deform.hpp"
#include "coderco/duality.hpp"
#include "coderco/errors.hpp"
#include "coderco/io.hpp"

namespace coderco {

namespace {

std::int64_t env_int(const char* name, const char* text, std::int64_t min_value) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(text, &used);
        if (used != std::string(text).size() || v < min_value)
            throw ParseError("");
        return v;
    } catch (const ParseError&) {
        throw ParseError(std::string(name) + " must be an integer >= " +
                         std::to_string(min_value) + ", got \"" + text + "\"");
    } catch (const std::exception&) {
        throw ParseError(std::string(name) + " must be an integer >= " +
                         std::to_string(min_value) + ", got \"" + text + "\"");
    }
}

void apply_env() {
    if (const char* v = std::getenv("CODERCO_INDEX_BOUND"))
        config().index_bound = env_int("CODERCO_INDEX_BOUND", v, 1);
    if (const char* v = std::getenv("CODERCO_MAX_DEGREE"))
        config().max_degree = static_cast<int>(env_int("CODERCO_MAX_DEGREE", v, 0));
    if (const char* v = std::getenv("CODERCO_SEED"))
        config().seed = static_cast<std::uint64_t>(env_int("CODERCO_SEED", v, 0));
}

// Entries of a map into a tensor power, written [source, leg indices..., c]
// and sorted so output is byte-stable.
Json tensor_entries(const SparseMat& m, const std::vector<Index>& legs) {
    std::vector<std::pair<std::vector<Index>, std::string>> rows;
    for (const auto& [rc, v] : m.entries()) {
        std::vector<Index> item{rc.second};
        Index rest = rc.first;
        std::vector<Index> digits(legs.size());
        for (std::size_t pos = legs.size(); pos-- > 0;) {
            digits[pos] = rest % legs[pos];
            rest /= legs[pos];
        }
        item.insert(item.end(), digits.begin(), digits.end());
        rows.emplace_back(std::move(item), format_rat(v));
    }
    std::sort(rows.begin(), rows.end());
    Json list = Json::array();
    for (const auto& [idx, c] : rows) {
        Json e = Json::array();
        for (Index i : idx)
            e.push_back(i);
        e.push_back(c);
        list.push_back(std::move(e));
    }
    return list;
}

Json vec_entries(const SparseVec& v) {
    Json list = Json::array();
    for (const auto& [i, c] : v.entries)
        list.push_back(Json::array({i, format_rat(c)}));
    return list;
}

Json degree_json(const DegreeData& dd) {
    Json j;
    j["degree"] = dd.degree;
    j["dim_space"] = dd.dim_space;
    j["dim_cocycles"] = dd.dim_z;
    j["dim_coboundaries"] = dd.dim_b;
    j["dim_h"] = dd.dim_h;
    Json reps = Json::array();
    for (const SparseVec& r : dd.representatives)
        reps.push_back(vec_entries(r));
    j["representatives"] = std::move(reps);
    return j;
}

CoderPair load_coder_pair(const std::string& path) {
    return coder_pair_from_json(read_json_file(path));
}

Deformation load_deformation(const std::string& path) {
    const Json j = read_json_file(path);
    if (kind_of(j) != "deformation")
        throw ParseError(path + ": expected a deformation file");
    return deformation_from_json(j);
}

void emit(std::ostream& out, const Json& j, const std::string& out_path) {
    if (!out_path.empty())
        write_json_file(out_path, j);
    out << dump_json(j);
}

struct ValidateArgs {
    std::string path;
    std::string base;
};

void cmd_validate(const ValidateArgs& a, std::ostream& out) {
    const Json j = read_json_file(a.path);
    const std::string kind = kind_of(j);
    if (kind == "coder_pair") {
        coder_pair_from_json(j);
    } else if (kind == "bicomodule_pair") {
        if (a.base.empty())
            throw ParseError("bicomodule_pair files need --base pointing at the coder_pair "
                             "they live over");
        bicomodule_pair_from_json(j, load_coder_pair(a.base));
    } else if (kind == "deformation") {
        require_valid(validate_deformation(deformation_from_json(j)), "deformation");
    } else if (kind == "gauge") {
        gauge_from_json(j);
    } else if (kind == "der_pair") {
        require_valid(check_der_pair(der_pair_from_json(j)), "Der pair");
    } else {
        throw ParseError("unknown kind \"" + kind + "\"");
    }
    Json report;
    report["command"] = "validate";
    report["kind"] = kind;
    report["status"] = "pass";
    out << dump_json(report);
}

struct CohomologyArgs {
    std::string path;
    std::string module_spec = "coadjoint";
    int nmax = 2;
    bool les = false;
};

void cmd_cohomology(const CohomologyArgs& a, std::ostream& out) {
    if (a.nmax < 1)
        throw ParseError("--nmax must be at least 1");
    const CoderPair cp = load_coder_pair(a.path);
    const BicomodulePair mp =
        a.module_spec == "coadjoint"
            ? coadjoint(cp)
            : bicomodule_pair_from_json(read_json_file(a.module_spec), cp);
    const CohomologyReport hoch = hochschild_cohomology(mp.base.c, mp.m, a.nmax);
    const CohomologyReport coder = coder_cohomology(mp, a.nmax);
    Json report;
    report["command"] = "cohomology";
    report["dim"] = mp.m.dim_c;
    report["dim_m"] = mp.m.dim_m;
    report["nmax"] = a.nmax;
    Json hj = Json::array();
    for (const DegreeData& dd : hoch.degrees)
        hj.push_back(degree_json(dd));
    report["hochschild"] = std::move(hj);
    Json cj = Json::array();
    for (const DegreeData& dd : coder.degrees)
        cj.push_back(degree_json(dd));
    report["coder"] = std::move(cj);
    if (a.les) {
        const LesReport les = les_check(mp, a.nmax);
        Json rows = Json::array();
        for (const LesDegree& row : les.degrees) {
            Json rj;
            rj["degree"] = row.degree;
            rj["dim_h_coder"] = row.dim_h_coder;
            rj["dim_ker_omega"] = row.dim_ker_omega;
            rj["dim_coker_omega"] = row.dim_coker_omega;
            rj["matches"] = row.matches;
            rows.push_back(std::move(rj));
        }
        Json lj;
        lj["rows"] = std::move(rows);
        lj["all_match"] = les.all_match;
        report["les"] = std::move(lj);
    }
    out << dump_json(report);
}

struct DeformArgs {
    std::string path;
    std::string gauge_path;
    std::string out_path;
    int budget = 3;
};

void cmd_deform_validate(const DeformArgs& a, std::ostream& out) {
    require_valid(validate_deformation(load_deformation(a.path)), "deformation");
    Json report;
    report["command"] = "deform.validate";
    report["status"] = "pass";
    out << dump_json(report);
}

void cmd_deform_infinitesimal(const DeformArgs& a, std::ostream& out) {
    const Deformation d = load_deformation(a.path);
    const InfinitesimalResult res = infinitesimal(d);
    const Index dim = d.base.c.dim;
    Json report;
    report["command"] = "deform.infinitesimal";
    report["order_r"] = res.order_r;
    report["is_cocycle"] = res.is_cocycle;
    report["delta"] = tensor_entries(res.cochain.f.mat, {dim, dim});
    report["psi"] = tensor_entries(res.cochain.g->mat, {dim});
    out << dump_json(report);
}

void cmd_deform_obstruct(const DeformArgs& a, std::ostream& out) {
    const Deformation d = load_deformation(a.path);
    const ObstructionPair ob = obstruction(d);
    const Index dim = d.base.c.dim;
    Json report;
    report["command"] = "deform.obstruct";
    report["order"] = d.order;
    report["is_zero"] = ob.ob_c.is_zero() && ob.ob_psi.is_zero();
    // obstruction() throws rather than return an uncertified pair.
    report["cocycle_certificate"] = true;
    report["ob_delta"] = tensor_entries(ob.ob_c, {dim, dim, dim});
    report["ob_psi"] = tensor_entries(ob.ob_psi, {dim, dim});
    out << dump_json(report);
}

void cmd_deform_extend(const DeformArgs& a, std::ostream& out) {
    const Deformation d = load_deformation(a.path);
    const ExtendResult res = extend(d);
    Json report;
    report["command"] = "deform.extend";
    if (res.extended) {
        report["status"] = "extended";
        report["order"] = res.extended->order;
        const Json file = deformation_to_json(*res.extended);
        if (!a.out_path.empty())
            write_json_file(a.out_path, file);
        report["deformation"] = file;
    } else {
        report["status"] = "obstructed";
        report["obstruction_class"] = vec_entries(res.obstruction_class);
    }
    out << dump_json(report);
}

void cmd_deform_trivialize(const DeformArgs& a, std::ostream& out) {
    if (a.budget < 0)
        throw ParseError("--budget must be non-negative");
    const Deformation d = load_deformation(a.path);
    const TrivializeResult res = trivialize(d, a.budget);
    Json report;
    report["command"] = "deform.trivialize";
    if (res.gauge) {
        report["status"] = "trivialized";
        const Json file = gauge_to_json(*res.gauge);
        if (!a.out_path.empty())
            write_json_file(a.out_path, file);
        report["gauge"] = file;
    } else {
        report["status"] = "blocked";
        report["blocked_order"] = res.blocked_order;
        report["blocking_class"] = vec_entries(res.blocking_class);
    }
    out << dump_json(report);
}

void cmd_deform_gauge(const DeformArgs& a, std::ostream& out) {
    const Deformation d = load_deformation(a.path);
    const Json gj = read_json_file(a.gauge_path);
    const Gauge g = gauge_from_json(gj, d.base.c.dim);
    const Deformation gauged = apply_gauge(d, g);
    Json report;
    report["command"] = "deform.gauge";
    report["status"] = "gauged";
    const Json file = deformation_to_json(gauged);
    if (!a.out_path.empty())
        write_json_file(a.out_path, file);
    report["deformation"] = file;
    out << dump_json(report);
}

struct DualizeArgs {
    std::string path;
    std::string out_path;
};

void cmd_dualize(const DualizeArgs& a, std::ostream& out) {
    const Json j = read_json_file(a.path);
    const std::string kind = kind_of(j);
    Json result;
    if (kind == "coder_pair") {
        result = der_pair_to_json(dual_der_pair(coder_pair_from_json(j)));
    } else if (kind == "der_pair") {
        const DerPair a_pair = der_pair_from_json(j);
        require_valid(check_der_pair(a_pair), "Der pair");
        result = coder_pair_to_json(dual_coder_pair(a_pair));
    } else {
        throw ParseError("dualize needs a coder_pair or der_pair file, got \"" + kind + "\"");
    }
    emit(out, result, a.out_path);
}

struct ExampleArgs {
    std::string name;
    std::vector<Index> params;
    std::string psi_mode = "zero";
    std::string out_path;
};

void need_params(const ExampleArgs& a, std::size_t n, const char* usage) {
    if (a.params.size() != n)
        throw ParseError("example " + a.name + " needs " + usage);
}

void cmd_example(const ExampleArgs& a, std::ostream& out) {
    const bool graded = a.psi_mode == "grading";
    Coalgebra c = grouplike();
    SparseMat psi = SparseMat(1, 1);
    if (a.name == "divided_power") {
        need_params(a, 1, "one parameter: the top weight N");
        if (a.params[0] < 0)
            throw ParseError("divided_power needs N >= 0");
        c = divided_power(a.params[0]);
        psi = graded ? divided_power_grading(a.params[0]) : SparseMat(c.dim, c.dim);
    } else if (a.name == "binomial_bialgebra") {
        need_params(a, 1, "one parameter: the top degree N");
        if (a.params[0] < 0)
            throw ParseError("binomial_bialgebra needs N >= 0");
        c = binomial_bialgebra(a.params[0]);
        psi = graded ? binomial_grading(a.params[0]) : SparseMat(c.dim, c.dim);
    } else if (a.name == "comatrix") {
        need_params(a, 1, "one parameter: the matrix size n");
        if (a.params[0] < 1)
            throw ParseError("comatrix needs n >= 1");
        c = comatrix(a.params[0]);
        psi = graded ? comatrix_grading(a.params[0]) : SparseMat(c.dim, c.dim);
    } else if (a.name == "tensor") {
        need_params(a, 2, "two parameters: alphabet size and maximum word length");
        if (a.params[0] < 1 || a.params[1] < 0)
            throw ParseError("tensor needs letters >= 1 and max_len >= 0");
        c = truncated_tensor_coalgebra(a.params[0], a.params[1]);
        psi = graded ? truncated_tensor_grading(a.params[0], a.params[1])
                     : SparseMat(c.dim, c.dim);
    } else if (a.name == "grouplike") {
        need_params(a, 0, "no parameters");
        c = grouplike();
        psi = SparseMat(1, 1);
    } else if (a.name == "zero_coproduct") {
        need_params(a, 1, "one parameter: the dimension");
        if (a.params[0] < 1)
            throw ParseError("zero_coproduct needs dim >= 1");
        c = zero_coproduct(a.params[0]);
        if (graded) {
            std::vector<Rat> weights;
            for (Index i = 0; i < a.params[0]; ++i)
                weights.emplace_back(i);
            psi = grading_coderivation(weights);
        } else {
            psi = SparseMat(c.dim, c.dim);
        }
    } else {
        throw ParseError("unknown example \"" + a.name +
                         "\"; known: divided_power, binomial_bialgebra, comatrix, tensor, "
                         "grouplike, zero_coproduct");
    }
    const CoderPair cp(std::move(c), std::move(psi));
    emit(out, coder_pair_to_json(cp), a.out_path);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cohomology and deformation calculator for coassociative coalgebras "
                 "with coderivations"};
    app.name("coderco");
    app.require_subcommand(1);

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand("validate", "Check the axioms of a structure file");
    validate->add_option("path", va.path, "structure file to check")->required();
    validate->add_option("--base", va.base,
                         "coder_pair file a bicomodule_pair lives over");
    validate->callback([&] { cmd_validate(va, out); });

    CohomologyArgs ca;
    CLI::App* coh = app.add_subcommand(
        "cohomology", "Cocycle and cohomology dimensions with representatives");
    coh->add_option("path", ca.path, "coder_pair file")->required();
    coh->add_option("--module", ca.module_spec,
                    "coefficients: 'coadjoint' or a bicomodule_pair file");
    coh->add_option("--nmax", ca.nmax, "highest degree to compute");
    coh->add_flag("--les", ca.les, "include the cone exactness table");
    coh->callback([&] { cmd_cohomology(ca, out); });

    CLI::App* deform = app.add_subcommand("deform", "Deformation-theory operations");
    deform->require_subcommand(1);
    std::uint64_t seed = config().seed;
    deform->add_option("--seed", seed, "seed recorded for randomized helpers");

    DeformArgs dva;
    CLI::App* dval = deform->add_subcommand("validate", "Check the deformation equations");
    dval->add_option("path", dva.path, "deformation file")->required();
    dval->callback([&] {
        config().seed = seed;
        cmd_deform_validate(dva, out);
    });

    DeformArgs dia;
    CLI::App* dinf = deform->add_subcommand("infinitesimal",
                                            "First nonzero coefficient and its cocycle check");
    dinf->add_option("path", dia.path, "deformation file")->required();
    dinf->callback([&] {
        config().seed = seed;
        cmd_deform_infinitesimal(dia, out);
    });

    DeformArgs doa;
    CLI::App* dob = deform->add_subcommand("obstruct", "Obstruction pair and its certificate");
    dob->add_option("path", doa.path, "deformation file")->required();
    dob->callback([&] {
        config().seed = seed;
        cmd_deform_obstruct(doa, out);
    });

    DeformArgs dea;
    CLI::App* dext = deform->add_subcommand("extend", "Extend one order or report the class");
    dext->add_option("path", dea.path, "deformation file")->required();
    dext->add_option("--out", dea.out_path, "where to write the extended deformation");
    dext->callback([&] {
        config().seed = seed;
        cmd_deform_extend(dea, out);
    });

    DeformArgs dta;
    CLI::App* dtriv =
        deform->add_subcommand("trivialize", "Gauge away the deformation or report the class");
    dtriv->add_option("path", dta.path, "deformation file")->required();
    dtriv->add_option("--budget", dta.budget, "highest order to work at");
    dtriv->add_option("--out", dta.out_path, "where to write the gauge");
    dtriv->callback([&] {
        config().seed = seed;
        cmd_deform_trivialize(dta, out);
    });

    DeformArgs dga;
    CLI::App* dgauge = deform->add_subcommand("gauge", "Apply a gauge file to a deformation");
    dgauge->add_option("path", dga.path, "deformation file")->required();
    dgauge->add_option("gauge", dga.gauge_path, "gauge file")->required();
    dgauge->add_option("--out", dga.out_path, "where to write the gauged deformation");
    dgauge->callback([&] {
        config().seed = seed;
        cmd_deform_gauge(dga, out);
    });

    DualizeArgs za;
    CLI::App* dual = app.add_subcommand("dualize", "Transpose between Coder and Der pairs");
    dual->add_option("path", za.path, "coder_pair or der_pair file")->required();
    dual->add_option("--out", za.out_path, "where to write the dual structure");
    dual->callback([&] { cmd_dualize(za, out); });

    ExampleArgs ea;
    CLI::App* example = app.add_subcommand("example", "Emit a built-in structure file");
    example->add_option("name", ea.name, "family name")->required();
    example->add_option("params", ea.params, "family parameters");
    example->add_option("--psi", ea.psi_mode, "coderivation choice: zero or grading")
        ->check(CLI::IsMember({"zero", "grading"}));
    example->add_option("--out", ea.out_path, "where to write the file");
    example->callback([&] { cmd_example(ea, out); });

    std::vector<const char*> argv;
    argv.push_back("coderco");
    for (const std::string& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        apply_env();
        return dispatch(args, out, err);
    } catch (const AxiomError& e) {
        out << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace coderco
