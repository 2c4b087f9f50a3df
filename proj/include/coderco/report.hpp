#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coderco/sparse.hpp"

namespace coderco {

// Outcome of checking one defining identity: the exact matrix lhs - rhs,
// plus the tensor-leg dimensions of the target space so row indices can be
// decoded into tensor components when reporting.
struct LawReport {
    std::string law;
    SparseMat discrepancy;
    std::vector<Index> target_legs;

    bool ok() const { return discrepancy.is_zero(); }
};

struct ValidationReport {
    std::vector<LawReport> laws;

    bool ok() const;
    // One line per law; failing laws list up to max_entries decoded
    // discrepancy entries each.
    std::string describe(std::size_t max_entries = 8) const;
};

// Throws AxiomError carrying the describe() text when the report fails.
void require_valid(const ValidationReport& report, const std::string& what);

}  // namespace coderco
