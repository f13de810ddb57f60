#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catkit/category.hpp"

namespace catkit {

/// A finite topological space; opens are bitsets over points 0..point_count-1,
/// stored sorted ascending (so the empty set is first and X last).
struct FiniteSpace {
    int point_count = 0;
    std::vector<std::uint64_t> opens;

    std::uint64_t full() const {
        return point_count == 64 ? ~0ULL : (1ULL << point_count) - 1;
    }
    int open_index(std::uint64_t open) const; // -1 if absent
};

/// Validates closure under union/intersection and membership of {} and X.
/// NotATopology names the violating pair.
FiniteSpace make_space(int point_count,
                       const std::vector<std::vector<int>>& open_lists);

/// The category of open sets and inclusions, with intersection as a strict
/// monoidal product and X as the unit.
struct OpenSetCategory {
    FiniteSpace space;
    MonoidalCategory monoidal;
};
OpenSetCategory open_set_category(const FiniteSpace& x);

/// The functor f^-1 : opens(Y) -> opens(X) of a continuous point map
/// f : X -> Y; NotContinuous names the violating open.
Functor preimage_functor(const std::vector<int>& point_map,
                         const FiniteSpace& x, const FiniteSpace& y);

/// A family of opens indexed by a poset, full and faithful onto its image.
struct Cover {
    FiniteSpace space;
    int index_size = 0;
    std::vector<std::vector<bool>> leq; // poset relation on indices
    std::vector<int> assignment;        // index -> open index in space.opens
    bool is_cover = false;              // union of assigned opens == X
};

/// Builds a cover from a list of distinct opens with the inclusion order.
Cover cover_from_opens(const FiniteSpace& x,
                       const std::vector<std::vector<int>>& open_lists);
void validate_cover(const Cover& c);

/// A refinement of U by V: an order-preserving phi with V_j included in
/// U_phi(j), plus the inclusion morphisms in the open-set category.  The
/// least phi in lexicographic order is returned.
struct Refinement {
    std::vector<int> phi;
    std::vector<int> inclusions; // morphism ids in open_set_category(space)
};
std::optional<Refinement> refinement(const Cover& v, const Cover& u);

} // namespace catkit
