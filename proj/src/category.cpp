#include "catkit/category.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace catkit {

std::optional<int> FinCategory::hom_lookup(int x, int y) const {
    for (int m = 0; m < morphism_count(); ++m)
        if (mor_src[m] == x && mor_tgt[m] == y) return m;
    return std::nullopt;
}

std::string FinCategory::object_name(int i) const {
    if (i >= 0 && i < static_cast<int>(object_names.size()) &&
        !object_names[i].empty())
        return object_names[i];
    return "x" + std::to_string(i);
}

std::string FinCategory::morphism_name(int m) const {
    if (m >= 0 && m < static_cast<int>(morphism_names.size()) &&
        !morphism_names[m].empty())
        return morphism_names[m];
    return "m" + std::to_string(m);
}

void validate_category(const FinCategory& c) {
    const int n = c.object_count, m = c.morphism_count();
    auto fail = [](const std::string& why) {
        throw Error("InvalidCategory", why);
    };
    if (n < 0 || static_cast<int>(c.mor_tgt.size()) != m) fail("bad shapes");
    if (static_cast<int>(c.identity_at.size()) != n) fail("bad identity table");
    if (c.comp.size() != static_cast<std::size_t>(m) * m) fail("bad comp table");
    for (int i = 0; i < m; ++i)
        if (c.mor_src[i] < 0 || c.mor_src[i] >= n || c.mor_tgt[i] < 0 ||
            c.mor_tgt[i] >= n)
            fail("morphism " + std::to_string(i) + " endpoints out of range");
    for (int x = 0; x < n; ++x) {
        int id = c.identity_at[x];
        if (id < 0 || id >= m || c.src(id) != x || c.tgt(id) != x)
            fail("identity of object " + std::to_string(x) +
                 " is not an endomorphism");
    }
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int gf = c.compose(g, f);
            bool should = c.tgt(f) == c.src(g);
            if (should != (gf >= 0))
                fail("composability domain wrong at (" + std::to_string(g) +
                     "," + std::to_string(f) + ")");
            if (gf >= 0) {
                if (gf >= m) fail("comp entry out of range");
                if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
                    fail("composite endpoints wrong at (" + std::to_string(g) +
                         "," + std::to_string(f) + ")");
            }
        }
    for (int f = 0; f < m; ++f) {
        if (c.compose(c.identity_at[c.tgt(f)], f) != f)
            fail("left identity law fails at " + std::to_string(f));
        if (c.compose(f, c.identity_at[c.src(f)]) != f)
            fail("right identity law fails at " + std::to_string(f));
    }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (c.tgt(g) != c.src(h)) continue;
            int hg = c.compose(h, g);
            for (int f = 0; f < m; ++f) {
                if (c.tgt(f) != c.src(g)) continue;
                if (c.compose(h, c.compose(g, f)) != c.compose(hg, f))
                    fail("associativity fails at (" + std::to_string(h) + "," +
                         std::to_string(g) + "," + std::to_string(f) + ")");
            }
        }
}

FinCategory make_category(int object_count, std::vector<int> mor_src,
                          std::vector<int> mor_tgt, std::vector<int> identity_at,
                          std::vector<int> comp) {
    FinCategory c;
    c.object_count = object_count;
    c.mor_src = std::move(mor_src);
    c.mor_tgt = std::move(mor_tgt);
    c.identity_at = std::move(identity_at);
    c.comp = std::move(comp);
    validate_category(c);
    return c;
}

std::optional<int> inverse_morphism(const FinCategory& c, int m) {
    for (int g = 0; g < c.morphism_count(); ++g)
        if (c.src(g) == c.tgt(m) && c.tgt(g) == c.src(m) &&
            c.compose(g, m) == c.identity_at[c.src(m)] &&
            c.compose(m, g) == c.identity_at[c.tgt(m)])
            return g;
    return std::nullopt;
}

bool is_groupoid(const FinCategory& c) {
    for (int m = 0; m < c.morphism_count(); ++m)
        if (!inverse_morphism(c, m)) return false;
    return true;
}

bool is_thin(const FinCategory& c) {
    std::vector<int> seen(
        static_cast<std::size_t>(c.object_count) * c.object_count, 0);
    for (int m = 0; m < c.morphism_count(); ++m) {
        int& slot =
            seen[static_cast<std::size_t>(c.src(m)) * c.object_count + c.tgt(m)];
        if (slot++) return false;
    }
    return true;
}

std::string dot_export(const FinCategory& c) {
    std::ostringstream out;
    out << "digraph category {\n";
    for (int x = 0; x < c.object_count; ++x)
        out << "  o" << x << " [label=\"" << c.object_name(x) << "\"];\n";
    for (int m = 0; m < c.morphism_count(); ++m) {
        if (c.is_identity(m)) continue;
        out << "  o" << c.src(m) << " -> o" << c.tgt(m) << " [label=\""
            << c.morphism_name(m) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

bool check_functor(const Functor& f, std::string* first_violation) {
    auto report = [&](const std::string& why) {
        if (first_violation) *first_violation = why;
        return false;
    };
    const FinCategory& s = f.source;
    const FinCategory& t = f.target;
    if (static_cast<int>(f.obj_map.size()) != s.object_count)
        return report("object map has wrong length");
    if (static_cast<int>(f.mor_map.size()) != s.morphism_count())
        return report("morphism map has wrong length");
    for (int v : f.obj_map)
        if (v < 0 || v >= t.object_count)
            return report("object image out of range");
    for (int v : f.mor_map)
        if (v < 0 || v >= t.morphism_count())
            return report("morphism image out of range");
    for (int m = 0; m < s.morphism_count(); ++m) {
        if (t.src(f.mor_map[m]) != f.obj_map[s.src(m)] ||
            t.tgt(f.mor_map[m]) != f.obj_map[s.tgt(m)])
            return report("src/tgt not preserved at morphism " +
                          std::to_string(m));
    }
    for (int x = 0; x < s.object_count; ++x)
        if (f.mor_map[s.identity_at[x]] != t.identity_at[f.obj_map[x]])
            return report("identity not preserved at object " +
                          std::to_string(x));
    for (int g = 0; g < s.morphism_count(); ++g)
        for (int h = 0; h < s.morphism_count(); ++h) {
            if (s.tgt(h) != s.src(g)) continue;
            if (f.mor_map[s.compose(g, h)] !=
                t.compose(f.mor_map[g], f.mor_map[h]))
                return report("composition not preserved at (" +
                              std::to_string(g) + "," + std::to_string(h) + ")");
        }
    return true;
}

Functor identity_functor(const FinCategory& c) {
    Functor f{c, c, std::vector<int>(c.object_count),
              std::vector<int>(c.morphism_count())};
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    if (!(f.target == g.source))
        throw Error("NotComposable", "functor source/target mismatch");
    Functor out{f.source, g.target, std::vector<int>(f.obj_map.size()),
                std::vector<int>(f.mor_map.size())};
    for (std::size_t i = 0; i < f.obj_map.size(); ++i)
        out.obj_map[i] = g.obj_map[f.obj_map[i]];
    for (std::size_t i = 0; i < f.mor_map.size(); ++i)
        out.mor_map[i] = g.mor_map[f.mor_map[i]];
    return out;
}

bool check_natural(const NatTransformation& eta, std::string* first_violation) {
    auto report = [&](const std::string& why) {
        if (first_violation) *first_violation = why;
        return false;
    };
    const Functor& f = eta.source;
    const Functor& g = eta.target;
    if (!(f.source == g.source) || !(f.target == g.target))
        return report("functors are not parallel");
    const FinCategory& s = f.source;
    const FinCategory& t = f.target;
    if (static_cast<int>(eta.components.size()) != s.object_count)
        return report("component list has wrong length");
    for (int x = 0; x < s.object_count; ++x) {
        int c = eta.components[x];
        if (c < 0 || c >= t.morphism_count())
            return report("component out of range at object " +
                          std::to_string(x));
        if (t.src(c) != f.obj_map[x] || t.tgt(c) != g.obj_map[x])
            return report("component endpoints wrong at object " +
                          std::to_string(x));
    }
    for (int m = 0; m < s.morphism_count(); ++m) {
        int x = s.src(m), y = s.tgt(m);
        if (t.compose(g.mor_map[m], eta.components[x]) !=
            t.compose(eta.components[y], f.mor_map[m]))
            return report("naturality square fails at morphism " +
                          std::to_string(m));
    }
    return true;
}

NatTransformation identity_transformation(const Functor& f) {
    NatTransformation eta{f, f, std::vector<int>(f.source.object_count)};
    for (int x = 0; x < f.source.object_count; ++x)
        eta.components[x] = f.target.identity_at[f.obj_map[x]];
    return eta;
}

NatTransformation vertical_compose(const NatTransformation& second,
                                   const NatTransformation& first) {
    NatTransformation out{first.source, second.target,
                          std::vector<int>(first.components.size())};
    const FinCategory& t = first.source.target;
    for (std::size_t x = 0; x < first.components.size(); ++x)
        out.components[x] =
            t.compose(second.components[x], first.components[x]);
    return out;
}

int tensor_objects(const FinCategory& c, const MonoidalStructure& m, int a,
                   int b) {
    return m.tensor_obj[static_cast<std::size_t>(a) * c.object_count + b];
}

int tensor_morphisms(const FinCategory& c, const MonoidalStructure& m, int f,
                     int g) {
    if (m.tensor_mor) {
        return (*m.tensor_mor)[static_cast<std::size_t>(f) * c.morphism_count() +
                               g];
    }
    // thin rule: the unique morphism src(f)⊗src(g) -> tgt(f)⊗tgt(g)
    auto h = c.hom_lookup(tensor_objects(c, m, c.src(f), c.src(g)),
                          tensor_objects(c, m, c.tgt(f), c.tgt(g)));
    if (!h)
        throw Error("NotWellDefined",
                    "derived tensor of morphisms is undefined");
    return *h;
}

namespace {

bool check_associator(const FinCategory& c, const MonoidalStructure& m,
                      std::string* why) {
    auto report = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = c.object_count;
    const auto& alpha = *m.associator;
    if (alpha.size() != static_cast<std::size_t>(n) * n * n)
        return report("associator has wrong shape");
    auto at = [&](int a, int b, int cc) {
        return alpha[(static_cast<std::size_t>(a) * n + b) * n + cc];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                int comp = at(a, b, d);
                if (comp < 0 || comp >= c.morphism_count())
                    return report("associator component out of range");
                int lhs = tensor_objects(c, m, tensor_objects(c, m, a, b), d);
                int rhs = tensor_objects(c, m, a, tensor_objects(c, m, b, d));
                if (c.src(comp) != lhs || c.tgt(comp) != rhs)
                    return report("associator endpoints wrong at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(d) + ")");
                if (!inverse_morphism(c, comp))
                    return report("associator component not invertible");
            }
    // triangle with identity unitors
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!c.is_identity(at(a, m.unit, b)))
                return report("unit coherence fails at (" + std::to_string(a) +
                              ",unit," + std::to_string(b) + ")");
    // naturality in all three slots
    for (int f = 0; f < c.morphism_count(); ++f)
        for (int g = 0; g < c.morphism_count(); ++g)
            for (int h = 0; h < c.morphism_count(); ++h) {
                int left =
                    tensor_morphisms(c, m, tensor_morphisms(c, m, f, g), h);
                int right =
                    tensor_morphisms(c, m, f, tensor_morphisms(c, m, g, h));
                int before = at(c.src(f), c.src(g), c.src(h));
                int after = at(c.tgt(f), c.tgt(g), c.tgt(h));
                if (c.compose(after, left) != c.compose(right, before))
                    return report("associator is not natural at (" +
                                  std::to_string(f) + "," + std::to_string(g) +
                                  "," + std::to_string(h) + ")");
            }
    // pentagon
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (int e = 0; e < n; ++e) {
                    int ab = tensor_objects(c, m, a, b);
                    int de = tensor_objects(c, m, d, e);
                    int bd = tensor_objects(c, m, b, d);
                    int top = c.compose(at(a, b, de), at(ab, d, e));
                    int alpha_abd_id =
                        tensor_morphisms(c, m, at(a, b, d), c.identity_at[e]);
                    int id_alpha_bde =
                        tensor_morphisms(c, m, c.identity_at[a], at(b, d, e));
                    int bottom = c.compose(
                        id_alpha_bde, c.compose(at(a, bd, e), alpha_abd_id));
                    if (top != bottom)
                        return report("pentagon fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," +
                                      std::to_string(d) + "," +
                                      std::to_string(e) + ")");
                }
    return true;
}

} // namespace

bool check_monoidal(const FinCategory& c, const MonoidalStructure& m,
                    std::string* first_violation) {
    auto report = [&](const std::string& why) {
        if (first_violation) *first_violation = why;
        return false;
    };
    const int n = c.object_count;
    if (m.tensor_obj.size() != static_cast<std::size_t>(n) * n)
        return report("tensor_obj has wrong shape");
    for (int v : m.tensor_obj)
        if (v < 0 || v >= n) return report("tensor_obj entry out of range");
    if (m.unit < 0 || m.unit >= n) return report("unit out of range");
    for (int a = 0; a < n; ++a)
        if (tensor_objects(c, m, m.unit, a) != a ||
            tensor_objects(c, m, a, m.unit) != a)
            return report("unit law fails on object " + std::to_string(a));

    const int mc = c.morphism_count();
    for (int f = 0; f < mc; ++f)
        for (int g = 0; g < mc; ++g) {
            int fg;
            try {
                fg = tensor_morphisms(c, m, f, g);
            } catch (const Error&) {
                return report("tensor of morphisms undefined at (" +
                              std::to_string(f) + "," + std::to_string(g) + ")");
            }
            if (fg < 0 || fg >= mc)
                return report("tensor_mor entry out of range");
            if (c.src(fg) != tensor_objects(c, m, c.src(f), c.src(g)) ||
                c.tgt(fg) != tensor_objects(c, m, c.tgt(f), c.tgt(g)))
                return report("tensor_mor endpoints wrong at (" +
                              std::to_string(f) + "," + std::to_string(g) + ")");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (tensor_morphisms(c, m, c.identity_at[a], c.identity_at[b]) !=
                c.identity_at[tensor_objects(c, m, a, b)])
                return report("identities do not tensor to identities at (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
    for (int f = 0; f < mc; ++f) {
        if (tensor_morphisms(c, m, c.identity_at[m.unit], f) != f ||
            tensor_morphisms(c, m, f, c.identity_at[m.unit]) != f)
            return report("unit law fails on morphism " + std::to_string(f));
    }
    // interchange: (g∘f) ⊗ (g'∘f') = (g⊗g') ∘ (f⊗f')
    for (int f = 0; f < mc; ++f)
        for (int g = 0; g < mc; ++g) {
            if (c.tgt(f) != c.src(g)) continue;
            int gf = c.compose(g, f);
            for (int f2 = 0; f2 < mc; ++f2)
                for (int g2 = 0; g2 < mc; ++g2) {
                    if (c.tgt(f2) != c.src(g2)) continue;
                    int gf2 = c.compose(g2, f2);
                    if (tensor_morphisms(c, m, gf, gf2) !=
                        c.compose(tensor_morphisms(c, m, g, g2),
                                  tensor_morphisms(c, m, f, f2)))
                        return report("tensor is not functorial at ((" +
                                      std::to_string(g) + "," +
                                      std::to_string(f) + "),(" +
                                      std::to_string(g2) + "," +
                                      std::to_string(f2) + "))");
                }
        }

    if (!m.associator) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d)
                    if (tensor_objects(c, m, tensor_objects(c, m, a, b), d) !=
                        tensor_objects(c, m, a, tensor_objects(c, m, b, d)))
                        return report(
                            "strict associativity fails on objects (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(d) + ")");
        for (int f = 0; f < mc; ++f)
            for (int g = 0; g < mc; ++g)
                for (int h = 0; h < mc; ++h)
                    if (tensor_morphisms(c, m, tensor_morphisms(c, m, f, g),
                                         h) !=
                        tensor_morphisms(c, m, f, tensor_morphisms(c, m, g, h)))
                        return report(
                            "strict associativity fails on morphisms (" +
                            std::to_string(f) + "," + std::to_string(g) + "," +
                            std::to_string(h) + ")");
        return true;
    }
    return check_associator(c, m, first_violation);
}

Pi0Result pi0(const FinCategory& c, const MonoidalStructure* m) {
    const int n = c.object_count;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int mor = 0; mor < c.morphism_count(); ++mor) {
        if (!inverse_morphism(c, mor)) continue;
        int a = find(c.src(mor)), b = find(c.tgt(mor));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Pi0Result result;
    result.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int root = find(x);
        if (result.class_of[root] < 0)
            result.class_of[root] = result.class_count++;
        result.class_of[x] = result.class_of[root];
    }
    if (m) {
        const int k = result.class_count;
        std::vector<int> table(static_cast<std::size_t>(k) * k, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int cls = result.class_of[tensor_objects(c, *m, a, b)];
                int& slot =
                    table[static_cast<std::size_t>(result.class_of[a]) * k +
                          result.class_of[b]];
                if (slot < 0)
                    slot = cls;
                else if (slot != cls)
                    throw Error(
                        "NotWellDefined",
                        "tensor does not descend to isomorphism classes at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
            }
        int unit_class = result.class_of[m->unit];
        auto tab = [&](int a, int b) { return table[a * k + b]; };
        for (int a = 0; a < k; ++a) {
            if (tab(unit_class, a) != a || tab(a, unit_class) != a)
                throw Error("NotWellDefined",
                            "induced class monoid has no unit");
            for (int b = 0; b < k; ++b)
                for (int d = 0; d < k; ++d)
                    if (tab(tab(a, b), d) != tab(a, tab(b, d)))
                        throw Error("NotWellDefined",
                                    "induced class monoid is not associative");
        }
        result.monoid_table = std::move(table);
    }
    return result;
}

namespace {

struct HomotopySearch {
    const Functor& f;
    const Functor& g;
    const FinCategory& t;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    std::vector<int> components;
    std::vector<std::vector<int>> candidates;

    bool consistent(int upto) const {
        const FinCategory& s = f.source;
        for (int m = 0; m < s.morphism_count(); ++m) {
            int x = s.src(m), y = s.tgt(m);
            if (x > upto || y > upto) continue;
            if (t.compose(g.mor_map[m], components[x]) !=
                t.compose(components[y], f.mor_map[m]))
                return false;
        }
        return true;
    }

    bool run(int x) {
        if (x == f.source.object_count) return true;
        for (int cand : candidates[x]) {
            if (++visited > budget)
                throw SizeLimitError("natural isomorphism search exceeded " +
                                     std::to_string(budget) + " candidates");
            components[x] = cand;
            if (consistent(x) && run(x + 1)) return true;
        }
        components[x] = -1;
        return false;
    }
};

} // namespace

std::optional<NatTransformation> functors_homotopic(
    const Functor& f, const Functor& g, std::uint64_t max_candidates) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw Error("NotParallel", "functors are not parallel");
    const FinCategory& t = f.target;
    HomotopySearch search{f,  g, t, max_candidates, 0,
                          std::vector<int>(f.source.object_count, -1),
                          {}};
    search.candidates.resize(f.source.object_count);
    for (int x = 0; x < f.source.object_count; ++x)
        for (int m = 0; m < t.morphism_count(); ++m)
            if (t.src(m) == f.obj_map[x] && t.tgt(m) == g.obj_map[x] &&
                inverse_morphism(t, m))
                search.candidates[x].push_back(m);
    if (!search.run(0)) return std::nullopt;
    return NatTransformation{f, g, search.components};
}

} // namespace catkit
