#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "resgaps/catalog.hpp"

namespace resgaps {

/// One re-derived table cell next to its published value.
struct CheckedCell {
    std::string row;       // case id, critical integer or lattice label
    std::string field;
    std::string expected;  // as published
    std::string actual;    // recomputed
    bool ok = false;
};

struct VerifyReport {
    std::string target;
    std::vector<CheckedCell> cells;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// table2 table3 table4 table5 table9 table10 theorem-r5 one-gap
const std::vector<std::string_view>& verify_targets();

/// Throws Error(NotFound) for an unknown target or a missing catalog row.
VerifyReport verify_target(const Catalog& catalog, std::string_view target);

}  // namespace resgaps
