#pragma once

#include "catkit/category.hpp"
#include "catkit/group.hpp"

namespace catkit {

enum class Flavor { Tautological, Discrete, Simplicial };

Flavor flavor_from_string(const std::string& s);
std::string to_string(Flavor f);

/// One object, morphisms = group elements, composition = multiplication.
FinCategory tautological_cat(const FiniteGroup& g);

/// Objects = elements, identity morphisms only, group law as a strict
/// monoidal product.
MonoidalCategory discrete_cat(const FiniteGroup& g);

/// Objects = elements, exactly one morphism per ordered pair (x,y), indexed
/// x*|G|+y; strict monoidal, contractible.
MonoidalCategory simplicial_cat(const FiniteGroup& g);

/// The functor between categorifications induced by a group homomorphism.
Functor lift_hom(const GroupHom& f, Flavor flavor);

/// Natural isomorphism from the constant-at-base endofunctor of the
/// simplicial categorification to the identity functor.
NatTransformation contraction_homotopy(const FiniteGroup& g, int base);

/// The covering transformation: simplicial -> tautological, (x -> y) |-> y x^-1.
Functor covering_transformation(const FiniteGroup& g);

/// Checks the two displayed intertwining identities of the covering
/// transformation against left/right multiplication by identity morphisms.
bool check_biequivariance(const FiniteGroup& g);

} // namespace catkit
