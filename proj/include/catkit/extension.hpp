#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catkit/category.hpp"
#include "catkit/group.hpp"

namespace catkit {

/// A short exact sequence 1 -> N -> E -> G -> 1.
struct GroupExtension {
    FiniteGroup N, E, G;
    GroupHom j; // N -> E, injective
    GroupHom p; // E -> G, surjective
};

/// Validates exactness: j injective, p surjective, image(j) = kernel(p),
/// |E| = |N|*|G|.  Errors: NotInjective, NotSurjective, ImageKernelMismatch.
GroupExtension build_extension(FiniteGroup n, FiniteGroup e, FiniteGroup g,
                               std::vector<int> j_map, std::vector<int> p_map);

enum class TrivialRole { Base, Fiber };
/// Base role: 1 -> G -> G -> 1 -> 1; fiber role: 1 -> 1 -> G -> G -> 1.
GroupExtension trivial_extension(const FiniteGroup& g, TrivialRole role);

/// Normalized sections s: G -> E with p∘s = id and s(1) = 1, ordered
/// lexicographically.
std::vector<std::vector<int>> enumerate_sections(const GroupExtension& ext);
void validate_section(const GroupExtension& ext, const std::vector<int>& s);

struct BundleCategorification {
    FinCategory cat;      // objects = E, one morphism inside each p-fiber
    MonoidalStructure mon;
    Functor fiber_functor; // strict monoidal onto the discrete base
};
BundleCategorification bundle_categorify(const GroupExtension& ext);

/// The functor over a section together with the unique monoidal structure
/// eta(x,y): S(xy) -> S(x)⊗S(y); the monoidality hexagon is verified.
struct SectionFunctor {
    Functor functor;
    std::vector<int> eta; // (x*|G|+y) -> morphism id in the bundle category
};
SectionFunctor section_monoidal_functor(const GroupExtension& ext,
                                        const std::vector<int>& s);

struct FactorSet {
    FiniteGroup G, N;
    std::vector<int> f; // f[x*|G|+y] in N, normalized

    int at(int x, int y) const { return f[x * G.order + y]; }
};

struct QuasiAction {
    FiniteGroup G, N;
    std::vector<std::vector<int>> maps; // per x in G an automorphism of N

    int act(int x, int n) const { return maps[x][n]; }
};

struct FactorSystem {
    FactorSet f;
    QuasiAction L;
};

/// f(x,y) = j^-1(s(x)s(y)s(xy)^-1) and L(x) = conjugation by s(x) pulled
/// back through j.  The returned pair always satisfies the twisted cocycle
/// law; FiberEscape is a defensive error.
FactorSystem factor_set(const GroupExtension& ext, const std::vector<int>& s);

/// f(ab,c) f(a,b) = L_a(f(b,c)) f(a,bc) for all a,b,c.
bool check_twisted_cocycle(const FactorSet& f, const QuasiAction& l);

/// The Schreier compatibility L(x) L(y) = C_{f(x,y)} L(xy).
bool check_action_compatibility(const FactorSet& f, const QuasiAction& l);

/// Weak-cohomology witness: a normalized gamma: G -> N with
///   f'(x,y) gamma(xy) = gamma(x) L(x)(gamma(y)) f(x,y)      and
///   L'(x) = C_{gamma(x)} ∘ L(x)
/// for all x, y; this is exactly the identity satisfied by
/// gamma(x) = s'(x) s(x)^-1 for two sections of one extension.
std::optional<std::vector<int>> weak_equivalent(
    const FactorSet& f, const QuasiAction& l, const FactorSet& f2,
    const QuasiAction& l2, std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Schreier reconstruction: E = N x G with
/// (m,x)(n,y) = (m L(x)(n) f(x,y), xy), element (m,x) at index x*|N|+m.
/// Preconditions checked: CocycleViolation, CompatibilityViolation.
GroupExtension crossed_product(const FiniteGroup& n, const FiniteGroup& g,
                               const QuasiAction& l, const FactorSet& f);

struct ExtensionClass {
    QuasiAction L;
    FactorSet f;
    std::string middle_group;
    int size = 0; // number of (L,f) pairs in the class
};

/// Enumerates all valid (L, f) pairs (L lexicographic over Aut(N)-valued
/// arrays, then f lexicographic), partitions them by weak equivalence and
/// returns the least representative of each class with the isomorphism type
/// of the middle group.
std::vector<ExtensionClass> classify_extensions(
    const FiniteGroup& g, const FiniteGroup& n, bool trivial_action_only = false,
    std::uint64_t max_candidates = kDefaultMaxCandidates, int threads = 1);

} // namespace catkit
