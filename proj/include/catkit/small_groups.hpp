#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catkit/group.hpp"

namespace catkit {

struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

/// Canonical tables for every group of order <= 16, built once.
const std::vector<NamedGroup>& small_group_catalog();

/// Backtracking search over generator images; returns an isomorphism map
/// G -> H or nullopt.  Intended for desk-scale orders.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Catalog name ("Z4", "Z2xZ2", "S3", ...) for |g| <= 16, otherwise a
/// generic "order<N>" placeholder.
std::string isomorphism_label(const FiniteGroup& g);

} // namespace catkit
