#include "catkit/categorify.hpp"

#include <numeric>

namespace catkit {

Flavor flavor_from_string(const std::string& s) {
    if (s == "tautological") return Flavor::Tautological;
    if (s == "discrete") return Flavor::Discrete;
    if (s == "simplicial") return Flavor::Simplicial;
    throw Error("UnknownFlavor", "unknown categorification flavor '" + s + "'");
}

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::Tautological: return "tautological";
        case Flavor::Discrete: return "discrete";
        case Flavor::Simplicial: return "simplicial";
    }
    return "?";
}

FinCategory tautological_cat(const FiniteGroup& g) {
    FinCategory c;
    c.object_count = 1;
    c.mor_src.assign(g.order, 0);
    c.mor_tgt.assign(g.order, 0);
    c.identity_at = {0};
    c.comp = g.table; // composition is the group law
    c.object_names = {"*"};
    for (int i = 0; i < g.order; ++i) c.morphism_names.push_back(g.name_of(i));
    validate_category(c);
    return c;
}

MonoidalCategory discrete_cat(const FiniteGroup& g) {
    FinCategory c;
    c.object_count = g.order;
    c.mor_src.resize(g.order);
    std::iota(c.mor_src.begin(), c.mor_src.end(), 0);
    c.mor_tgt = c.mor_src;
    c.identity_at = c.mor_src;
    c.comp.assign(static_cast<std::size_t>(g.order) * g.order, -1);
    for (int i = 0; i < g.order; ++i) c.comp[i * g.order + i] = i;
    for (int i = 0; i < g.order; ++i) c.object_names.push_back(g.name_of(i));
    validate_category(c);

    MonoidalStructure m;
    m.unit = 0;
    m.tensor_obj = g.table;
    m.tensor_mor = g.table; // morphism ids coincide with object ids
    return {std::move(c), std::move(m)};
}

MonoidalCategory simplicial_cat(const FiniteGroup& g) {
    const int n = g.order;
    FinCategory c;
    c.object_count = n;
    const int mc = n * n; // morphism (x -> y) has id x*n + y
    c.mor_src.resize(mc);
    c.mor_tgt.resize(mc);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            c.mor_src[x * n + y] = x;
            c.mor_tgt[x * n + y] = y;
        }
    c.identity_at.resize(n);
    for (int x = 0; x < n; ++x) c.identity_at[x] = x * n + x;
    c.comp.assign(static_cast<std::size_t>(mc) * mc, -1);
    for (int m2 = 0; m2 < mc; ++m2)
        for (int m1 = 0; m1 < mc; ++m1)
            if (c.mor_tgt[m1] == c.mor_src[m2])
                c.comp[static_cast<std::size_t>(m2) * mc + m1] =
                    c.mor_src[m1] * n + c.mor_tgt[m2];
    for (int i = 0; i < n; ++i) c.object_names.push_back(g.name_of(i));
    validate_category(c);

    MonoidalStructure m;
    m.unit = 0;
    m.tensor_obj = g.table;
    if (n <= 16) {
        // stored tensor; recomputed through the thin rule for larger groups
        std::vector<int> tm(static_cast<std::size_t>(mc) * mc);
        for (int a = 0; a < mc; ++a)
            for (int b = 0; b < mc; ++b)
                tm[static_cast<std::size_t>(a) * mc + b] =
                    g.mul(c.mor_src[a], c.mor_src[b]) * n +
                    g.mul(c.mor_tgt[a], c.mor_tgt[b]);
        m.tensor_mor = std::move(tm);
    }
    return {std::move(c), std::move(m)};
}

Functor lift_hom(const GroupHom& f, Flavor flavor) {
    if (!check_hom(f))
        throw Error("NotAHomomorphism", "lift_hom requires a homomorphism");
    const int nG = f.source.order, nH = f.target.order;
    switch (flavor) {
        case Flavor::Tautological: {
            Functor out{tautological_cat(f.source), tautological_cat(f.target),
                        {0}, f.map};
            return out;
        }
        case Flavor::Discrete: {
            Functor out{discrete_cat(f.source).cat, discrete_cat(f.target).cat,
                        f.map, f.map};
            return out;
        }
        case Flavor::Simplicial: {
            Functor out{simplicial_cat(f.source).cat,
                        simplicial_cat(f.target).cat, f.map,
                        std::vector<int>(static_cast<std::size_t>(nG) * nG)};
            for (int x = 0; x < nG; ++x)
                for (int y = 0; y < nG; ++y)
                    out.mor_map[x * nG + y] = f.map[x] * nH + f.map[y];
            return out;
        }
    }
    throw Error("UnknownFlavor", "bad flavor");
}

NatTransformation contraction_homotopy(const FiniteGroup& g, int base) {
    if (base < 0 || base >= g.order)
        throw Error("OutOfRange", "base object out of range");
    const int n = g.order;
    FinCategory s = simplicial_cat(g).cat;
    Functor constant{s, s, std::vector<int>(n, base),
                     std::vector<int>(static_cast<std::size_t>(n) * n,
                                      base * n + base)};
    NatTransformation eta{std::move(constant), identity_functor(s),
                          std::vector<int>(n)};
    for (int x = 0; x < n; ++x) eta.components[x] = base * n + x;
    return eta;
}

Functor covering_transformation(const FiniteGroup& g) {
    const int n = g.order;
    Functor out{simplicial_cat(g).cat, tautological_cat(g),
                std::vector<int>(n, 0),
                std::vector<int>(static_cast<std::size_t>(n) * n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.mor_map[x * n + y] = g.mul(y, g.inv(x));
    return out;
}

bool check_biequivariance(const FiniteGroup& g) {
    auto [s, mon] = simplicial_cat(g);
    Functor r = covering_transformation(g);
    for (int a = 0; a < g.order; ++a) {
        int id_a = s.identity_at[a];
        for (int m = 0; m < s.morphism_count(); ++m) {
            int left = tensor_morphisms(s, mon, id_a, m);
            if (r.mor_map[left] != g.conj(a, r.mor_map[m])) return false;
            int right = tensor_morphisms(s, mon, m, id_a);
            if (r.mor_map[right] != r.mor_map[m]) return false;
        }
    }
    return true;
}

} // namespace catkit
