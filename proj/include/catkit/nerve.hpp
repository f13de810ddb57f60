#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catkit/category.hpp"
#include "catkit/group.hpp"
#include "catkit/smith.hpp"

namespace catkit {

/// Simplices up to a truncation degree with face and degeneracy index
/// tables.  An n-simplex of a nerve is stored as its chain of n composable
/// morphism ids (a 0-simplex as a single object id).
struct TruncatedSimplicialSet {
    int truncation = 0;
    std::vector<std::vector<std::vector<int>>> simplex_data; // [n][idx] = chain
    // face[n][i][idx] for 1 <= n <= truncation, 0 <= i <= n
    std::vector<std::vector<std::vector<int>>> face;
    // degeneracy[n][i][idx] for 0 <= n < truncation, 0 <= i <= n
    std::vector<std::vector<std::vector<int>>> degeneracy;

    int count(int n) const { return static_cast<int>(simplex_data[n].size()); }
};

/// All simplicial identities that stay inside the truncation.
bool check_simplicial_identities(const TruncatedSimplicialSet& s,
                                 std::string* first_violation = nullptr);

/// Degenerate flags per degree (degree 0 is all false).
std::vector<std::vector<bool>> degenerate_flags(const TruncatedSimplicialSet& s);

/// The nerve of a finite category: n-simplices are composable chains, the
/// inner faces compose, the outer ones drop an end, degeneracies insert
/// identities.
TruncatedSimplicialSet nerve(const FinCategory& c, int k,
                             std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Integer chain complex; boundary[n] maps degree n to degree n-1 for
/// 1 <= n <= top degree.
struct ChainComplex {
    std::vector<int> ranks;
    std::vector<IntMatrix> boundary; // boundary[0] is unused (empty)
};

/// Normalized complex: one generator per nondegenerate simplex, faces that
/// land on degenerate simplices are dropped.
ChainComplex normalized_chains(const TruncatedSimplicialSet& s);

struct HomologyResult {
    int free_rank = 0;
    std::vector<long long> torsion; // invariant factors > 1, ascending
};

/// H_n = ker d_n / im d_{n+1} by exact Smith normal form; throws
/// TruncationTooShallow when d_{n+1} is outside the complex.
HomologyResult homology(const ChainComplex& cx, int n);
std::string homology_to_string(const HomologyResult& h);

/// The degreewise maps of nerves induced by a functor; index maps are
/// verified to commute with faces and degeneracies.
struct SimplicialMap {
    std::vector<std::vector<int>> level_maps;
};
SimplicialMap induced_simplicial_map(const Functor& f,
                                     const TruncatedSimplicialSet& src,
                                     const TruncatedSimplicialSet& dst);

struct BarSpaces {
    TruncatedSimplicialSet eg; // nerve of the simplicial categorification
    TruncatedSimplicialSet bg; // nerve of the tautological categorification
    bool quotient_verified = false; // EG/G = BG, combinatorially
};

/// The bar construction at truncation k, with the covering-transformation
/// quotient check: the induced map EG -> BG is degreewise surjective and its
/// fibers are exactly the free left G-orbits.
BarSpaces bar_spaces(const FiniteGroup& g, int k,
                     std::uint64_t max_candidates = kDefaultMaxCandidates);

} // namespace catkit
