#include "coderco/report.hpp"

#include <sstream>

#include "coderco/errors.hpp"

namespace coderco {

bool ValidationReport::ok() const {
    for (const auto& law : laws)
        if (!law.ok())
            return false;
    return true;
}

namespace {

// Decodes a flat row index into tensor components, big-endian.
std::string decode_row(Index row, const std::vector<Index>& legs) {
    if (legs.empty())
        return std::to_string(row);
    std::vector<Index> parts(legs.size());
    Index rest = row;
    for (std::size_t i = legs.size(); i-- > 0;) {
        parts[i] = rest % legs[i];
        rest /= legs[i];
    }
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

}  // namespace

std::string ValidationReport::describe(std::size_t max_entries) const {
    std::ostringstream os;
    for (const auto& law : laws) {
        if (law.ok()) {
            os << "ok   " << law.law << "\n";
            continue;
        }
        os << "FAIL " << law.law << ": " << law.discrepancy.nnz()
           << " nonzero discrepancy entries\n";
        std::size_t shown = 0;
        for (const auto& [rc, v] : law.discrepancy.entries()) {
            if (shown++ == max_entries) {
                os << "  ...\n";
                break;
            }
            os << "  input " << rc.second << " -> " << decode_row(rc.first, law.target_legs)
               << ": " << format_rat(v) << "\n";
        }
    }
    return os.str();
}

void require_valid(const ValidationReport& report, const std::string& what) {
    if (!report.ok())
        throw AxiomError(what + " failed validation:\n" + report.describe());
}

}  // namespace coderco
