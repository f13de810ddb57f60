#pragma once

#include <cstdint>
#include <vector>

#include "catkit/category.hpp"
#include "catkit/group.hpp"
#include "catkit/smith.hpp"

namespace catkit {

/// A finite abelian coefficient group ⊕ Z/d_i with a G-action.  Elements are
/// indexed in big-endian mixed radix (matching nested direct_product tables);
/// the action is stored both as permutations of element indices and as
/// integer matrices on the cyclic generators.
struct CoefficientModule {
    std::vector<int> cyclic_orders;
    int group_order = 1;
    std::vector<std::vector<int>> action;                 // per g: permutation of A
    std::vector<std::vector<std::vector<long long>>> action_matrix; // per g: r x r

    int size() const;
    int rank() const { return static_cast<int>(cyclic_orders.size()); }
    std::vector<int> tuple_of(int index) const;
    int index_of(const std::vector<int>& tuple) const;
    int add(int a, int b) const;
    int neg(int a) const;
    int scale(long long k, int a) const;
    int act(int g, int a) const { return action[g][a]; }
    bool action_is_trivial() const;
};

CoefficientModule trivial_module(const FiniteGroup& g, std::vector<int> orders);
/// Validates that each matrix defines an automorphism of A and that the
/// assignment is a homomorphism G -> Aut(A).
CoefficientModule module_from_matrices(
    const FiniteGroup& g, std::vector<int> orders,
    const std::vector<std::vector<std::vector<long long>>>& matrices);
/// The underlying abelian group as a multiplication table (index-compatible).
FiniteGroup group_from_module(const CoefficientModule& m);

/// A normalized bar cochain G^n -> A; the full |G|^n value table is stored,
/// entries at tuples containing the identity are zero.
struct Cochain {
    int degree = 0;
    int group_order = 1;
    std::vector<int> values; // |G|^degree entries, A-element indices

    int at(const std::vector<int>& args) const;
    bool is_zero() const;
};

Cochain zero_cochain(const FiniteGroup& g, int degree);
bool is_normalized(const Cochain& c);

/// (dc)(g_1,...,g_{n+1}) = g_1 c(g_2,...) + sum (-1)^i c(...,g_i g_{i+1},...)
/// + (-1)^{n+1} c(g_1,...,g_n).  Input degree at most kMaxCochainDegree.
inline constexpr int kMaxCochainDegree = 3;
Cochain coboundary(const FiniteGroup& g, const CoefficientModule& m,
                   const Cochain& c);

struct CohomologyResult {
    std::vector<long long> invariant_factors; // of H^n, ascending, each > 1
    BigInt cocycle_count;
    BigInt coboundary_count;
};

/// Exact Smith-normal-form path over the normalized bar complex.
CohomologyResult cohomology_group(int n, const FiniteGroup& g,
                                  const CoefficientModule& m);
/// Enumeration cross-check path; SizeLimit applies here only.
CohomologyResult cohomology_group_bruteforce(
    int n, const FiniteGroup& g, const CoefficientModule& m,
    std::uint64_t max_candidates = kDefaultMaxCandidates);

/// The linearized discrete categorification: objects = G, endomorphisms of
/// each object = A, tensor adds scalars over the group law, with associator
/// components alpha(a,b,c) scaling the identity.
MonoidalCategory scaled_discrete_cat(const FiniteGroup& g,
                                     const CoefficientModule& m,
                                     const Cochain& alpha);

struct AssociatorReport {
    std::vector<Cochain> pentagon_valid; // all passing normalized 3-cochains
    long long cocycle_count = 0;
    long long class_count = 0;       // modulo 3-coboundaries
    bool matches_cocycles = false;   // pentagon set == cocycle set
};

/// Enumerates all normalized 3-cochains, runs the pentagon check through the
/// monoidal machinery, and compares with the kernel of the coboundary.
/// Requires cyclic A with trivial action.
AssociatorReport associators(const FiniteGroup& g, const CoefficientModule& m,
                             std::uint64_t max_candidates = kDefaultMaxCandidates,
                             int threads = 1);

} // namespace catkit
