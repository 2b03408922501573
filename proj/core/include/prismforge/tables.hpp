#pragma once

#include <string>
#include <vector>

#include "prismforge/shapes.hpp"

namespace prismforge {

struct TableCheck {
    std::string label;
    bool pass = false;
    std::string detail;
};

/// Known table identifiers: "1", "2", "3", "4", "S5", "S6", "S7", "S8".
std::vector<std::string> table_ids();

/// Verifies every stored row of the given table (classification counts,
/// reconstruction identities, stated cosines). Throws on unknown id.
std::vector<TableCheck> check_table(const std::string& id);

}  // namespace prismforge
