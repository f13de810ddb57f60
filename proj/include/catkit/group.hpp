#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catkit/errors.hpp"

namespace catkit {

/// A finite group given by its multiplication table over element indices
/// 0..order-1 with the identity pinned at index 0.  Immutable after
/// validation; `names` is cosmetic.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;        // row-major, table[a*order+b] = a*b
    std::vector<int> inverse;      // filled during validation
    std::vector<std::string> names;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
    /// a x a^-1
    int conj(int a, int x) const { return mul(mul(a, x), inverse[a]); }

    bool operator==(const FiniteGroup& o) const {
        return order == o.order && table == o.table;
    }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

    std::string name_of(int i) const;
};

/// Validates all four table invariants (identity at 0, Latin square,
/// associativity, inverses) and returns the group.  Errors name the first
/// violating index or triple: NoIdentityAtZero, NotLatinSquare,
/// NotAssociative, MissingInverse.
FiniteGroup from_table(const std::vector<std::vector<int>>& rows,
                       std::vector<std::string> names = {});
FiniteGroup from_flat_table(int order, std::vector<int> flat,
                            std::vector<std::string> names = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Dihedral group of order 2n (n >= 1); n = 3 gives S_3.
FiniteGroup dihedral_group(int n);
/// Dicyclic group of order 4n (n >= 1); n = 2 gives the quaternions Q8.
FiniteGroup dicyclic_group(int n);
/// Semidirect product N x| H. `action[h]` is the automorphism of N applied
/// by h; element (h, n) has index h*|N| + n.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action);
/// Quotient by a normal subgroup (given as a sorted element list).  Cosets
/// are indexed by their least member, identity coset first.
FiniteGroup quotient_group(const FiniteGroup& g,
                           const std::vector<int>& normal_subgroup);

bool is_abelian(const FiniteGroup& g);
int element_order(const FiniteGroup& g, int x);
/// Closure of a generating set (always contains the identity); sorted.
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& generators);
std::vector<int> commutator_subgroup(const FiniteGroup& g);
/// Invariant factors (ascending, each > 1) of a finite abelian group,
/// derived from element-order counts.  Throws if g is not abelian.
std::vector<int> abelian_invariants(const FiniteGroup& g);

/// A map of element indices; a homomorphism when check_hom holds.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> map;

    int apply(int x) const { return map[x]; }
    bool is_bijective() const;
};

bool check_hom(const GroupHom& f);
/// Validating constructor; throws NotAHomomorphism.
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map);
GroupHom identity_hom(const FiniteGroup& g);
/// g after f; sources/targets must match.
GroupHom compose_homs(const GroupHom& g, const GroupHom& f);
/// Conjugation x -> a x a^-1 as an (inner) automorphism.
GroupHom conjugation_hom(const FiniteGroup& g, int a);

/// All homomorphisms G -> H in lexicographic order of their map arrays.
/// Exhaustive search over map arrays with forced-assignment pruning; raises
/// SizeLimit when the visited candidate count exceeds the bound.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& G, const FiniteGroup& H,
                                     std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Partition of enumerate_homs(G,H) under target conjugation
/// g(x) = h f(x) h^-1.  Classes are listed by least member.
struct HomClasses {
    std::vector<GroupHom> homs;            // lexicographic
    std::vector<std::vector<int>> classes; // indices into homs, each ascending
};
HomClasses hom_conjugacy_classes(const FiniteGroup& G, const FiniteGroup& H,
                                 std::uint64_t max_candidates = kDefaultMaxCandidates);

struct AutomorphismInfo {
    std::vector<GroupHom> automorphisms; // lexicographic
    std::vector<bool> inner;             // marks conjugation maps
    int outer_class_count = 0;           // classes modulo inner automorphisms
};
AutomorphismInfo automorphisms(const FiniteGroup& g,
                               std::uint64_t max_candidates = kDefaultMaxCandidates);

} // namespace catkit
