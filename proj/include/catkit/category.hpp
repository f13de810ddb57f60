#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catkit/errors.hpp"

namespace catkit {

/// A finite category: dense morphism list plus a partial composition table.
/// comp[g*m + f] = g∘f, defined exactly when tgt(f) = src(g), else -1.
struct FinCategory {
    int object_count = 0;
    std::vector<int> mor_src;
    std::vector<int> mor_tgt;
    std::vector<int> identity_at; // object -> identity morphism
    std::vector<int> comp;
    std::vector<std::string> object_names;   // optional
    std::vector<std::string> morphism_names; // optional

    int morphism_count() const { return static_cast<int>(mor_src.size()); }
    int src(int m) const { return mor_src[m]; }
    int tgt(int m) const { return mor_tgt[m]; }
    /// g∘f, or -1 when not composable.
    int compose(int g, int f) const {
        return comp[static_cast<std::size_t>(g) * mor_src.size() + f];
    }
    bool is_identity(int m) const { return identity_at[mor_src[m]] == m; }
    /// The unique morphism x -> y in a thin category; nullopt if none,
    /// first one if several.
    std::optional<int> hom_lookup(int x, int y) const;

    bool operator==(const FinCategory& o) const {
        return object_count == o.object_count && mor_src == o.mor_src &&
               mor_tgt == o.mor_tgt && identity_at == o.identity_at &&
               comp == o.comp;
    }

    std::string object_name(int i) const;
    std::string morphism_name(int m) const;
};

/// Builds and fully validates a category (identity laws, associativity,
/// composability domains).  Throws Error("InvalidCategory", ...).
FinCategory make_category(int object_count, std::vector<int> mor_src,
                          std::vector<int> mor_tgt, std::vector<int> identity_at,
                          std::vector<int> comp);
void validate_category(const FinCategory& c);

bool is_groupoid(const FinCategory& c);
std::optional<int> inverse_morphism(const FinCategory& c, int m);
/// At most one morphism between any ordered pair of objects.
bool is_thin(const FinCategory& c);

/// Graphviz export: objects as nodes, non-identity morphisms as labeled
/// edges, deterministic order.
std::string dot_export(const FinCategory& c);

struct Functor {
    FinCategory source;
    FinCategory target;
    std::vector<int> obj_map;
    std::vector<int> mor_map;
};

bool check_functor(const Functor& f, std::string* first_violation = nullptr);
Functor identity_functor(const FinCategory& c);
/// g after f.
Functor compose_functors(const Functor& g, const Functor& f);

struct NatTransformation {
    Functor source; // F
    Functor target; // G, parallel to F
    std::vector<int> components; // object of source cat -> morphism of target cat
};

bool check_natural(const NatTransformation& eta,
                   std::string* first_violation = nullptr);
NatTransformation identity_transformation(const Functor& f);
/// Vertical composite (second after first).
NatTransformation vertical_compose(const NatTransformation& second,
                                   const NatTransformation& first);

/// Strict-skeletal monoidal data over some FinCategory.  Unitors are
/// identities.  When tensor_mor is absent the category must be thin and the
/// tensor of morphisms is derived from src/tgt.  The optional associator maps
/// (a,b,c) to a morphism (a⊗b)⊗c -> a⊗(b⊗c).
struct MonoidalStructure {
    int unit = 0;
    std::vector<int> tensor_obj;                 // n*n
    std::optional<std::vector<int>> tensor_mor;  // m*m
    std::optional<std::vector<int>> associator;  // n*n*n -> morphism
};

struct MonoidalCategory {
    FinCategory cat;
    MonoidalStructure mon;
};

int tensor_objects(const FinCategory& c, const MonoidalStructure& m, int a, int b);
int tensor_morphisms(const FinCategory& c, const MonoidalStructure& m, int f, int g);

/// True iff the tensor is functorial and unital and either strictly
/// associative (no associator) or pentagon-coherent (associator present).
bool check_monoidal(const FinCategory& c, const MonoidalStructure& m,
                    std::string* first_violation = nullptr);

struct Pi0Result {
    std::vector<int> class_of; // object -> class, numbered by least member
    int class_count = 0;
    std::optional<std::vector<int>> monoid_table;
};

/// Isomorphism classes of objects; with monoidal data also the induced
/// monoid on classes (NotWellDefined if the tensor failed to descend).
Pi0Result pi0(const FinCategory& c, const MonoidalStructure* m = nullptr);

/// Searches for a natural isomorphism F => G by exhaustive component choice
/// with naturality pruning; components tried in ascending morphism order, so
/// the returned witness is deterministic.
std::optional<NatTransformation> functors_homotopic(
    const Functor& f, const Functor& g,
    std::uint64_t max_candidates = kDefaultMaxCandidates);

} // namespace catkit
