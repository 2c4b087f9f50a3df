#include "coderco/io.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>
#include <utility>
#include <vector>

#include "coderco/errors.hpp"

namespace coderco {

namespace {

void expect(bool cond, const std::string& msg) {
    if (!cond)
        throw ParseError(msg);
}

Index index_from(const Json& v, Index bound, const std::string& what) {
    expect(v.is_number_integer(), what + ": index must be an integer");
    const Index i = v.get<Index>();
    expect(i >= 0 && i < bound,
           what + ": index " + std::to_string(i) + " outside [0, " + std::to_string(bound) + ")");
    return i;
}

Rat scalar_from(const Json& v, const std::string& what) {
    if (v.is_string())
        return parse_rat(v.get<std::string>());
    if (v.is_number_integer())
        return Rat(v.get<std::int64_t>());
    throw ParseError(what + ": coefficients must be rational strings");
}

const Json& field(const Json& j, const char* key) {
    expect(j.is_object(), "expected a JSON object");
    expect(j.contains(key), std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Index dim_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    expect(v.is_number_integer() && v.get<Index>() >= 1,
           std::string("\"") + key + "\" must be a positive integer");
    return v.get<Index>();
}

// [[i, j, "c"], ...] with entry meaning: coefficient of e_j in f(e_i),
// i.e. mat[j, i] = c.
SparseMat endo_from_list(const Json& list, Index rows, Index cols, const std::string& what) {
    expect(list.is_array(), what + " must be an array of entries");
    SparseMat out(rows, cols);
    for (const Json& e : list) {
        expect(e.is_array() && e.size() == 3, what + ": entries must be [i, j, \"c\"]");
        const Index i = index_from(e[0], cols, what);
        const Index j = index_from(e[1], rows, what);
        out.add_at(j, i, scalar_from(e[2], what));
    }
    return out;
}

Json endo_to_list(const SparseMat& m) {
    std::vector<std::tuple<Index, Index, std::string>> items;
    for (const auto& [rc, v] : m.entries())
        items.emplace_back(rc.second, rc.first, format_rat(v));
    std::sort(items.begin(), items.end());
    Json list = Json::array();
    for (const auto& [i, j, c] : items)
        list.push_back(Json::array({i, j, c}));
    return list;
}

// [[i, j, k, "c"], ...] for a map into a two-leg tensor space: the entry
// means mat[j*inner + k, i] = c with j < left, k < inner, i < cols.
SparseMat split_row_from_list(const Json& list, Index left, Index inner, Index cols,
                              const std::string& what) {
    expect(list.is_array(), what + " must be an array of entries");
    SparseMat out(checked_mul(left, inner), cols);
    for (const Json& e : list) {
        expect(e.is_array() && e.size() == 4, what + ": entries must be [i, j, k, \"c\"]");
        const Index i = index_from(e[0], cols, what);
        const Index j = index_from(e[1], left, what);
        const Index k = index_from(e[2], inner, what);
        out.add_at(j * inner + k, i, scalar_from(e[3], what));
    }
    return out;
}

Json split_row_to_list(const SparseMat& m, Index inner) {
    std::vector<std::tuple<Index, Index, Index, std::string>> items;
    for (const auto& [rc, v] : m.entries())
        items.emplace_back(rc.second, rc.first / inner, rc.first % inner, format_rat(v));
    std::sort(items.begin(), items.end());
    Json list = Json::array();
    for (const auto& [i, j, k, c] : items)
        list.push_back(Json::array({i, j, k, c}));
    return list;
}

// [[i, j, k, "c"], ...] for a multiplication: coefficient of e_i in
// e_j * e_k, i.e. mat[i, j*d + k] = c.
SparseMat algebra_from_list(const Json& list, Index d, const std::string& what) {
    expect(list.is_array(), what + " must be an array of entries");
    SparseMat out(d, checked_pow(d, 2));
    for (const Json& e : list) {
        expect(e.is_array() && e.size() == 4, what + ": entries must be [i, j, k, \"c\"]");
        const Index i = index_from(e[0], d, what);
        const Index j = index_from(e[1], d, what);
        const Index k = index_from(e[2], d, what);
        out.add_at(i, j * d + k, scalar_from(e[3], what));
    }
    return out;
}

Json algebra_to_list(const SparseMat& m, Index d) {
    std::vector<std::tuple<Index, Index, Index, std::string>> items;
    for (const auto& [rc, v] : m.entries())
        items.emplace_back(rc.first, rc.second / d, rc.second % d, format_rat(v));
    std::sort(items.begin(), items.end());
    Json list = Json::array();
    for (const auto& [i, j, k, c] : items)
        list.push_back(Json::array({i, j, k, c}));
    return list;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << dump_json(j);
    if (!out)
        throw ParseError("write to " + path + " failed");
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

std::string kind_of(const Json& j) {
    const Json& k = field(j, "kind");
    expect(k.is_string(), "\"kind\" must be a string");
    return k.get<std::string>();
}

Json coder_pair_to_json(const CoderPair& cp) {
    Json j;
    j["kind"] = "coder_pair";
    j["dim"] = cp.c.dim;
    j["delta"] = split_row_to_list(cp.c.delta, cp.c.dim);
    j["psi"] = endo_to_list(cp.psi);
    return j;
}

CoderPair coder_pair_from_json(const Json& j) {
    expect(kind_of(j) == "coder_pair", "expected kind \"coder_pair\"");
    const Index d = dim_field(j, "dim");
    SparseMat delta = split_row_from_list(field(j, "delta"), d, d, d, "delta");
    SparseMat psi = j.contains("psi") ? endo_from_list(j.at("psi"), d, d, "psi")
                                      : SparseMat(d, d);
    return CoderPair(Coalgebra(d, std::move(delta)), std::move(psi));
}

Json bicomodule_pair_to_json(const BicomodulePair& mp) {
    Json j;
    j["kind"] = "bicomodule_pair";
    j["dim_m"] = mp.m.dim_m;
    j["rho_l"] = split_row_to_list(mp.m.rho_l, mp.m.dim_m);
    j["rho_r"] = split_row_to_list(mp.m.rho_r, mp.m.dim_c);
    j["psi_m"] = endo_to_list(mp.psi_m);
    return j;
}

BicomodulePair bicomodule_pair_from_json(const Json& j, const CoderPair& base) {
    expect(kind_of(j) == "bicomodule_pair", "expected kind \"bicomodule_pair\"");
    const Index m = dim_field(j, "dim_m");
    const Index d = base.c.dim;
    SparseMat rho_l = split_row_from_list(field(j, "rho_l"), d, m, m, "rho_l");
    SparseMat rho_r = split_row_from_list(field(j, "rho_r"), m, d, m, "rho_r");
    SparseMat psi_m = j.contains("psi_m") ? endo_from_list(j.at("psi_m"), m, m, "psi_m")
                                          : SparseMat(m, m);
    return BicomodulePair(base, Bicomodule(m, d, std::move(rho_l), std::move(rho_r)),
                          std::move(psi_m));
}

Json deformation_to_json(const Deformation& d) {
    Json j;
    j["kind"] = "deformation";
    j["order"] = d.order;
    j["base"] = coder_pair_to_json(d.base);
    Json deltas = Json::array();
    Json psis = Json::array();
    for (int k = 1; k <= d.order; ++k) {
        deltas.push_back(split_row_to_list(d.deltas[static_cast<std::size_t>(k)], d.base.c.dim));
        psis.push_back(endo_to_list(d.psis[static_cast<std::size_t>(k)]));
    }
    j["deltas"] = std::move(deltas);
    j["psis"] = std::move(psis);
    return j;
}

Deformation deformation_from_json(const Json& j) {
    expect(kind_of(j) == "deformation", "expected kind \"deformation\"");
    const Json& order_v = field(j, "order");
    expect(order_v.is_number_integer() && order_v.get<int>() >= 0,
           "\"order\" must be a non-negative integer");
    const int order = order_v.get<int>();
    CoderPair base = coder_pair_from_json(field(j, "base"));
    const Index d = base.c.dim;
    const Json& deltas_v = field(j, "deltas");
    const Json& psis_v = field(j, "psis");
    expect(deltas_v.is_array() && static_cast<int>(deltas_v.size()) == order,
           "\"deltas\" must list one entry set per order 1..n");
    expect(psis_v.is_array() && static_cast<int>(psis_v.size()) == order,
           "\"psis\" must list one entry set per order 1..n");
    std::vector<SparseMat> deltas{base.c.delta};
    std::vector<SparseMat> psis{base.psi};
    for (int k = 1; k <= order; ++k) {
        const std::string tag = " t^" + std::to_string(k);
        deltas.push_back(split_row_from_list(deltas_v[static_cast<std::size_t>(k - 1)], d, d, d,
                                             "deltas" + tag));
        psis.push_back(
            endo_from_list(psis_v[static_cast<std::size_t>(k - 1)], d, d, "psis" + tag));
    }
    return Deformation(std::move(base), std::move(deltas), std::move(psis));
}

Json gauge_to_json(const Gauge& g) {
    Json j;
    j["kind"] = "gauge";
    j["order"] = g.order;
    Json phis = Json::array();
    for (int k = 1; k <= g.order; ++k)
        phis.push_back(endo_to_list(g.phis[static_cast<std::size_t>(k)]));
    j["phis"] = std::move(phis);
    return j;
}

Gauge gauge_from_json(const Json& j, std::optional<Index> dim) {
    expect(kind_of(j) == "gauge", "expected kind \"gauge\"");
    const Json& order_v = field(j, "order");
    expect(order_v.is_number_integer() && order_v.get<int>() >= 0,
           "\"order\" must be a non-negative integer");
    const int order = order_v.get<int>();
    const Json& phis_v = field(j, "phis");
    expect(phis_v.is_array() && static_cast<int>(phis_v.size()) == order,
           "\"phis\" must list one entry set per order 1..n");
    Index d = dim.value_or(0);
    if (!dim) {
        // No dimension in the schema: infer the smallest space containing
        // every index mentioned.
        d = 1;
        for (const Json& list : phis_v) {
            expect(list.is_array(), "phis must hold entry arrays");
            for (const Json& e : list) {
                expect(e.is_array() && e.size() == 3, "phis: entries must be [i, j, \"c\"]");
                for (int pos = 0; pos < 2; ++pos) {
                    expect(e[static_cast<std::size_t>(pos)].is_number_integer(),
                           "phis: index must be an integer");
                    d = std::max(d, e[static_cast<std::size_t>(pos)].get<Index>() + 1);
                }
            }
        }
    }
    std::vector<SparseMat> phis{SparseMat::identity(d)};
    for (int k = 1; k <= order; ++k)
        phis.push_back(endo_from_list(phis_v[static_cast<std::size_t>(k - 1)], d, d,
                                      "phis t^" + std::to_string(k)));
    return Gauge(d, std::move(phis));
}

Json der_pair_to_json(const DerPair& a) {
    Json j;
    j["kind"] = "der_pair";
    j["dim"] = a.dim;
    j["mult"] = algebra_to_list(a.mult, a.dim);
    j["phi"] = endo_to_list(a.phi);
    return j;
}

DerPair der_pair_from_json(const Json& j) {
    expect(kind_of(j) == "der_pair", "expected kind \"der_pair\"");
    const Index d = dim_field(j, "dim");
    SparseMat mult = algebra_from_list(field(j, "mult"), d, "mult");
    SparseMat phi = j.contains("phi") ? endo_from_list(j.at("phi"), d, d, "phi")
                                      : SparseMat(d, d);
    return DerPair(d, std::move(mult), std::move(phi));
}

}  // namespace coderco
