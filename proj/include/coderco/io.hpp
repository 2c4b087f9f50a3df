#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coderco/deform.hpp"
#include "coderco/duality.hpp"

namespace coderco {

// Ordered JSON keeps object keys in insertion order, so writers control the
// exact byte layout. Entry lists are emitted sorted by their index tuples
// and scalars as lowest-term strings; outputs are byte-stable.
using Json = nlohmann::ordered_json;

// Throws ParseError with the position nlohmann reports on malformed input.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);

// The "kind" discriminator; ParseError when absent or not a string.
std::string kind_of(const Json& j);

// delta entries [i, j, k, "c"]: coefficient of e_j (x) e_k in Delta(e_i).
// psi entries [i, j, "c"]: coefficient of e_j in psi(e_i).
Json coder_pair_to_json(const CoderPair& cp);
CoderPair coder_pair_from_json(const Json& j);

// rho_l entries: coefficient of e_j (x) u_k in rho_l(u_i); rho_r entries:
// coefficient of u_j (x) e_k in rho_r(u_i). The file stores no base, so
// parsing needs the base Coder pair for context.
Json bicomodule_pair_to_json(const BicomodulePair& mp);
BicomodulePair bicomodule_pair_from_json(const Json& j, const CoderPair& base);

// Coefficient lists cover orders 1..n; order 0 is the embedded base.
Json deformation_to_json(const Deformation& d);
Deformation deformation_from_json(const Json& j);

// phis cover orders 1..n with phi_0 = Id implicit. The file stores no
// dimension; pass one, or it is inferred as 1 + the largest index used.
Json gauge_to_json(const Gauge& g);
Gauge gauge_from_json(const Json& j, std::optional<Index> dim = std::nullopt);

// mult entries [i, j, k, "c"]: coefficient of e_i in e_j * e_k. The same
// quadruples read as a coder_pair delta describe the transposed coproduct.
Json der_pair_to_json(const DerPair& a);
DerPair der_pair_from_json(const Json& j);

}  // namespace coderco
