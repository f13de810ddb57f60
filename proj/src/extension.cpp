#include "catkit/extension.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>

#include "catkit/categorify.hpp"
#include "catkit/small_groups.hpp"

namespace catkit {

GroupExtension build_extension(FiniteGroup n, FiniteGroup e, FiniteGroup g,
                               std::vector<int> j_map, std::vector<int> p_map) {
    GroupHom j{n, e, std::move(j_map)};
    GroupHom p{e, g, std::move(p_map)};
    if (!check_hom(j))
        throw Error("NotAHomomorphism", "j is not a homomorphism N -> E");
    if (!check_hom(p))
        throw Error("NotAHomomorphism", "p is not a homomorphism E -> G");

    std::vector<bool> hit(e.order, false);
    for (int x = 0; x < n.order; ++x) {
        if (hit[j.map[x]])
            throw Error("NotInjective", "j identifies two elements of N");
        hit[j.map[x]] = true;
    }
    std::vector<bool> reached(g.order, false);
    for (int x = 0; x < e.order; ++x) reached[p.map[x]] = true;
    for (int x = 0; x < g.order; ++x)
        if (!reached[x])
            throw Error("NotSurjective",
                        "p misses element " + std::to_string(x) + " of G");
    for (int x = 0; x < e.order; ++x) {
        bool in_image = hit[x];
        bool in_kernel = p.map[x] == 0;
        if (in_image != in_kernel)
            throw Error("ImageKernelMismatch",
                        "element " + std::to_string(x) +
                            " of E is in image(j) xor kernel(p)");
    }
    if (e.order != n.order * g.order)
        throw Error("ImageKernelMismatch", "|E| != |N| * |G|");
    return GroupExtension{std::move(n), std::move(e), std::move(g),
                          std::move(j), std::move(p)};
}

GroupExtension trivial_extension(const FiniteGroup& g, TrivialRole role) {
    FiniteGroup one = trivial_group();
    std::vector<int> id(g.order);
    std::iota(id.begin(), id.end(), 0);
    if (role == TrivialRole::Base) {
        // 1 -> G -> G -> 1 -> 1
        return build_extension(g, g, one, id, std::vector<int>(g.order, 0));
    }
    // 1 -> 1 -> G -> G -> 1
    return build_extension(one, g, g, {0}, id);
}

void validate_section(const GroupExtension& ext, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != ext.G.order)
        throw Error("InvalidSection", "section has wrong length");
    if (s[0] != 0)
        throw Error("InvalidSection", "section is not normalized (s(1) != 1)");
    for (int x = 0; x < ext.G.order; ++x) {
        if (s[x] < 0 || s[x] >= ext.E.order)
            throw Error("InvalidSection", "section value out of range");
        if (ext.p.map[s[x]] != x)
            throw Error("InvalidSection",
                        "p(s(" + std::to_string(x) + ")) != " + std::to_string(x));
    }
}

std::vector<std::vector<int>> enumerate_sections(const GroupExtension& ext) {
    std::vector<std::vector<int>> fibers(ext.G.order);
    for (int e = 0; e < ext.E.order; ++e) fibers[ext.p.map[e]].push_back(e);
    std::vector<std::vector<int>> sections;
    std::vector<int> s(ext.G.order);
    s[0] = 0;
    std::function<void(int)> rec = [&](int x) {
        if (x == ext.G.order) {
            sections.push_back(s);
            return;
        }
        for (int e : fibers[x]) {
            s[x] = e;
            rec(x + 1);
        }
    };
    rec(1);
    if (ext.G.order == 1) sections = {{0}};
    return sections;
}

BundleCategorification bundle_categorify(const GroupExtension& ext) {
    const FiniteGroup& e = ext.E;
    const int n = e.order;
    FinCategory c;
    c.object_count = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (ext.p.map[x] == ext.p.map[y]) {
                c.mor_src.push_back(x);
                c.mor_tgt.push_back(y);
            }
    const int mc = c.morphism_count();
    std::vector<int> pair_id(static_cast<std::size_t>(n) * n, -1);
    for (int m = 0; m < mc; ++m)
        pair_id[static_cast<std::size_t>(c.mor_src[m]) * n + c.mor_tgt[m]] = m;
    c.identity_at.resize(n);
    for (int x = 0; x < n; ++x)
        c.identity_at[x] = pair_id[static_cast<std::size_t>(x) * n + x];
    c.comp.assign(static_cast<std::size_t>(mc) * mc, -1);
    for (int m2 = 0; m2 < mc; ++m2)
        for (int m1 = 0; m1 < mc; ++m1)
            if (c.mor_tgt[m1] == c.mor_src[m2])
                c.comp[static_cast<std::size_t>(m2) * mc + m1] =
                    pair_id[static_cast<std::size_t>(c.mor_src[m1]) * n +
                            c.mor_tgt[m2]];
    for (int i = 0; i < n; ++i) c.object_names.push_back(e.name_of(i));
    validate_category(c);

    MonoidalStructure mon;
    mon.unit = 0;
    mon.tensor_obj = e.table;
    // tensor of morphisms is recovered through the thin rule

    auto base = discrete_cat(ext.G);
    Functor fiber{c, base.cat, ext.p.map, std::vector<int>(mc)};
    for (int m = 0; m < mc; ++m) fiber.mor_map[m] = ext.p.map[c.mor_src[m]];

    return BundleCategorification{std::move(c), std::move(mon),
                                  std::move(fiber)};
}

SectionFunctor section_monoidal_functor(const GroupExtension& ext,
                                        const std::vector<int>& s) {
    validate_section(ext, s);
    BundleCategorification bundle = bundle_categorify(ext);
    const FinCategory& b = bundle.cat;
    const int ng = ext.G.order;

    auto base = discrete_cat(ext.G);
    Functor functor{base.cat, b, s, std::vector<int>(ng)};
    for (int x = 0; x < ng; ++x) functor.mor_map[x] = b.identity_at[s[x]];
    std::string why;
    if (!check_functor(functor, &why))
        throw Error("InvalidSection", "section functor is broken: " + why);

    std::vector<int> eta(static_cast<std::size_t>(ng) * ng);
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < ng; ++y) {
            int from = s[ext.G.mul(x, y)];
            int to = ext.E.mul(s[x], s[y]);
            auto m = b.hom_lookup(from, to);
            if (!m)
                throw Error("FiberEscape",
                            "s(x)s(y) and s(xy) are in different fibers");
            eta[x * ng + y] = *m;
        }

    // monoidality hexagon, verified exhaustively
    for (int a = 0; a < ng; ++a)
        for (int m = 0; m < ng; ++m)
            for (int c2 = 0; c2 < ng; ++c2) {
                int am = ext.G.mul(a, m);
                int mc2 = ext.G.mul(m, c2);
                int left = b.compose(
                    tensor_morphisms(b, bundle.mon, eta[a * ng + m],
                                     b.identity_at[s[c2]]),
                    eta[am * ng + c2]);
                int right = b.compose(
                    tensor_morphisms(b, bundle.mon, b.identity_at[s[a]],
                                     eta[m * ng + c2]),
                    eta[a * ng + mc2]);
                if (left != right)
                    throw Error("NotWellDefined",
                                "monoidality diagram does not commute");
            }
    return SectionFunctor{std::move(functor), std::move(eta)};
}

FactorSystem factor_set(const GroupExtension& ext, const std::vector<int>& s) {
    validate_section(ext, s);
    const FiniteGroup& e = ext.E;
    const int ng = ext.G.order;
    std::vector<int> j_inverse(e.order, -1);
    for (int x = 0; x < ext.N.order; ++x) j_inverse[ext.j.map[x]] = x;

    FactorSet f{ext.G, ext.N, std::vector<int>(static_cast<std::size_t>(ng) * ng)};
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < ng; ++y) {
            int v = e.mul(e.mul(s[x], s[y]), e.inv(s[ext.G.mul(x, y)]));
            if (j_inverse[v] < 0)
                throw Error("FiberEscape",
                            "s(x)s(y)s(xy)^-1 is not in the image of j");
            f.f[x * ng + y] = j_inverse[v];
        }

    QuasiAction l{ext.G, ext.N, std::vector<std::vector<int>>(ng)};
    for (int x = 0; x < ng; ++x) {
        l.maps[x].resize(ext.N.order);
        for (int m = 0; m < ext.N.order; ++m) {
            int v = e.conj(s[x], ext.j.map[m]);
            if (j_inverse[v] < 0)
                throw Error("FiberEscape", "conjugation leaves the fiber");
            l.maps[x][m] = j_inverse[v];
        }
    }
    return FactorSystem{std::move(f), std::move(l)};
}

bool check_twisted_cocycle(const FactorSet& f, const QuasiAction& l) {
    const FiniteGroup& g = f.G;
    const FiniteGroup& n = f.N;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                int lhs = n.mul(f.at(g.mul(a, b), c), f.at(a, b));
                int rhs = n.mul(l.act(a, f.at(b, c)), f.at(a, g.mul(b, c)));
                if (lhs != rhs) return false;
            }
    return true;
}

bool check_action_compatibility(const FactorSet& f, const QuasiAction& l) {
    const FiniteGroup& g = f.G;
    const FiniteGroup& n = f.N;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int xy = g.mul(x, y);
            for (int m = 0; m < n.order; ++m)
                if (l.act(x, l.act(y, m)) !=
                    n.conj(f.at(x, y), l.act(xy, m)))
                    return false;
        }
    return true;
}

std::optional<std::vector<int>> weak_equivalent(const FactorSet& f,
                                                const QuasiAction& l,
                                                const FactorSet& f2,
                                                const QuasiAction& l2,
                                                std::uint64_t max_candidates) {
    const FiniteGroup& g = f.G;
    const FiniteGroup& n = f.N;
    std::uint64_t space = saturating_pow(n.order, g.order > 0 ? g.order - 1 : 0);
    if (space > max_candidates)
        throw SizeLimitError("gamma search space " + std::to_string(space) +
                             " exceeds bound");

    std::vector<int> gamma(g.order, 0);
    auto matches = [&]() {
        // L'(x) = C_gamma(x) ∘ L(x)
        for (int x = 0; x < g.order; ++x)
            for (int m = 0; m < n.order; ++m)
                if (l2.act(x, m) != n.conj(gamma[x], l.act(x, m))) return false;
        // f'(x,y) gamma(xy) = gamma(x) L(x)(gamma(y)) f(x,y)
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                int lhs = n.mul(f2.at(x, y), gamma[g.mul(x, y)]);
                int rhs = n.mul(n.mul(gamma[x], l.act(x, gamma[y])), f.at(x, y));
                if (lhs != rhs) return false;
            }
        return true;
    };

    std::function<std::optional<std::vector<int>>(int)> rec =
        [&](int x) -> std::optional<std::vector<int>> {
        if (x == g.order) {
            if (matches()) return gamma;
            return std::nullopt;
        }
        for (int v = 0; v < n.order; ++v) {
            gamma[x] = v;
            if (auto found = rec(x + 1)) return found;
        }
        gamma[x] = 0;
        return std::nullopt;
    };
    return rec(1);
}

GroupExtension crossed_product(const FiniteGroup& n, const FiniteGroup& g,
                               const QuasiAction& l, const FactorSet& f) {
    // preconditions, reported with the violating tuple
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                int lhs = n.mul(f.at(g.mul(a, b), c), f.at(a, b));
                int rhs = n.mul(l.act(a, f.at(b, c)), f.at(a, g.mul(b, c)));
                if (lhs != rhs)
                    throw Error("CocycleViolation",
                                "twisted cocycle law fails at (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
            }
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int m = 0; m < n.order; ++m)
                if (l.act(x, l.act(y, m)) !=
                    n.conj(f.at(x, y), l.act(g.mul(x, y), m)))
                    throw Error("CompatibilityViolation",
                                "L(x)L(y) != C_f(x,y) L(xy) at (" +
                                    std::to_string(x) + "," + std::to_string(y) +
                                    ")");

    const int order = n.order * g.order;
    auto index = [&](int x, int m) { return x * n.order + m; };
    std::vector<int> flat(static_cast<std::size_t>(order) * order);
    for (int x = 0; x < g.order; ++x)
        for (int m = 0; m < n.order; ++m)
            for (int y = 0; y < g.order; ++y)
                for (int m2 = 0; m2 < n.order; ++m2)
                    flat[index(x, m) * order + index(y, m2)] =
                        index(g.mul(x, y),
                              n.mul(n.mul(m, l.act(x, m2)), f.at(x, y)));
    FiniteGroup e = from_flat_table(order, std::move(flat));

    std::vector<int> j_map(n.order), p_map(order);
    for (int m = 0; m < n.order; ++m) j_map[m] = index(0, m);
    for (int x = 0; x < g.order; ++x)
        for (int m = 0; m < n.order; ++m) p_map[index(x, m)] = x;
    return build_extension(n, std::move(e), g, std::move(j_map),
                           std::move(p_map));
}

namespace {

// all maps G -> Aut(N) with L(1) = id, as automorphism indices
std::vector<std::vector<int>> action_candidates(const FiniteGroup& g,
                                                int aut_count) {
    std::vector<std::vector<int>> out;
    std::vector<int> choice(g.order, 0);
    std::function<void(int)> rec = [&](int x) {
        if (x == g.order) {
            out.push_back(choice);
            return;
        }
        for (int a = 0; a < aut_count; ++a) {
            choice[x] = a;
            rec(x + 1);
        }
    };
    rec(1);
    if (g.order == 1) out = {{0}};
    return out;
}

template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    if (threads <= 1 || total < 2) {
        fn(0, total, 0);
        return;
    }
    std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::future<void>> futures;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t begin = t * chunk;
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async,
                                     [&fn, begin, end, t] { fn(begin, end, t); }));
    }
    for (auto& f : futures) f.get();
}

} // namespace

std::vector<ExtensionClass> classify_extensions(const FiniteGroup& g,
                                                const FiniteGroup& n,
                                                bool trivial_action_only,
                                                std::uint64_t max_candidates,
                                                int threads) {
    auto aut_info = automorphisms(n, max_candidates);
    const auto& auts = aut_info.automorphisms; // lexicographic by map
    int aut_count = trivial_action_only ? 1 : static_cast<int>(auts.size());

    std::uint64_t f_space =
        saturating_pow(n.order, static_cast<std::uint64_t>(g.order - 1) *
                                    (g.order - 1));
    std::uint64_t l_space =
        saturating_pow(aut_count, g.order > 0 ? g.order - 1 : 0);
    if (f_space == ~0ULL || l_space == ~0ULL ||
        f_space > max_candidates / std::max<std::uint64_t>(1, l_space))
        throw SizeLimitError("candidate space of (L, f) pairs exceeds bound");

    std::vector<FactorSystem> valid;

    // free entries of a normalized f: pairs of non-identity arguments
    std::vector<std::pair<int, int>> free_slots;
    for (int x = 1; x < g.order; ++x)
        for (int y = 1; y < g.order; ++y) free_slots.emplace_back(x, y);

    for (const auto& l_choice : action_candidates(g, aut_count)) {
        QuasiAction l{g, n, {}};
        l.maps.resize(g.order);
        for (int x = 0; x < g.order; ++x) l.maps[x] = auts[l_choice[x]].map;

        // enumerate f tables lexicographically, in deterministic chunks
        std::uint64_t total = f_space;
        std::vector<std::vector<FactorSystem>> found(
            std::max(1, threads));
        parallel_chunks(total, threads, [&](std::uint64_t begin,
                                            std::uint64_t end, int slot) {
            FactorSet f{g, n,
                        std::vector<int>(
                            static_cast<std::size_t>(g.order) * g.order, 0)};
            for (std::uint64_t code = begin; code < end; ++code) {
                std::uint64_t rest = code;
                for (auto it = free_slots.rbegin(); it != free_slots.rend();
                     ++it) {
                    f.f[it->first * g.order + it->second] =
                        static_cast<int>(rest % n.order);
                    rest /= n.order;
                }
                if (check_twisted_cocycle(f, l) &&
                    check_action_compatibility(f, l))
                    found[slot].push_back(FactorSystem{f, l});
            }
        });
        for (auto& chunk : found)
            for (auto& sys : chunk) valid.push_back(std::move(sys));
    }

    // partition by weak equivalence
    std::vector<int> class_of(valid.size(), -1);
    std::vector<ExtensionClass> classes;
    for (std::size_t i = 0; i < valid.size(); ++i) {
        if (class_of[i] >= 0) continue;
        int cls = static_cast<int>(classes.size());
        class_of[i] = cls;
        ExtensionClass entry{valid[i].L, valid[i].f, "", 1};
        for (std::size_t k = i + 1; k < valid.size(); ++k) {
            if (class_of[k] >= 0) continue;
            if (weak_equivalent(valid[i].f, valid[i].L, valid[k].f, valid[k].L,
                                max_candidates)) {
                class_of[k] = cls;
                entry.size++;
            }
        }
        entry.middle_group =
            isomorphism_label(crossed_product(n, g, entry.L, entry.f).E);
        classes.push_back(std::move(entry));
    }
    return classes;
}

} // namespace catkit
