#include "catkit/small_groups.hpp"

#include <algorithm>
#include <map>

namespace catkit {

namespace {

std::vector<std::vector<int>> power_action(const std::vector<int>& base,
                                           int exponent_count) {
    // action[h] = base^h as maps
    int n = static_cast<int>(base.size());
    std::vector<std::vector<int>> action;
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    for (int h = 0; h < exponent_count; ++h) {
        action.push_back(cur);
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = base[cur[i]];
        cur = next;
    }
    return action;
}

std::vector<int> unit_multiplication_map(int modulus, int unit) {
    std::vector<int> map(modulus);
    for (int i = 0; i < modulus; ++i) map[i] = (i * unit) % modulus;
    return map;
}

std::vector<NamedGroup> build_catalog() {
    std::vector<NamedGroup> cat;
    auto add = [&](const std::string& name, FiniteGroup g) {
        cat.push_back({name, std::move(g)});
    };

    for (int n = 1; n <= 16; ++n) add("Z" + std::to_string(n), cyclic_group(n));

    const FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3),
                      z4 = cyclic_group(4), z8 = cyclic_group(8);
    const FiniteGroup k4 = direct_product(z2, z2);
    const FiniteGroup d4 = dihedral_group(4), q8 = dicyclic_group(2);

    add("Z2xZ2", k4);
    add("S3", dihedral_group(3));
    add("Z4xZ2", direct_product(z4, z2));
    add("Z2xZ2xZ2", direct_product(k4, z2));
    add("D4", d4);
    add("Q8", q8);
    add("Z3xZ3", direct_product(z3, z3));
    add("D5", dihedral_group(5));
    add("Z6xZ2", direct_product(cyclic_group(6), z2));
    add("D6", dihedral_group(6));
    add("Dic3", dicyclic_group(3));
    // A4 = K4 x| Z3, the generator cycling the three involutions
    add("A4", semidirect_product(k4, z3, power_action({0, 2, 3, 1}, 3)));
    add("D7", dihedral_group(7));

    // order 16
    add("Z4xZ4", direct_product(z4, z4));
    add("Z8xZ2", direct_product(z8, z2));
    add("Z4xZ2xZ2", direct_product(z4, k4));
    add("Z2xZ2xZ2xZ2", direct_product(k4, k4));
    add("D8", dihedral_group(8));
    add("Q16", dicyclic_group(4));
    add("SD16", semidirect_product(z8, z2,
                                   power_action(unit_multiplication_map(8, 3), 2)));
    add("M16", semidirect_product(z8, z2,
                                  power_action(unit_multiplication_map(8, 5), 2)));
    add("D4xZ2", direct_product(d4, z2));
    add("Q8xZ2", direct_product(q8, z2));
    // central product D4 o Z4: quotient of D4 x Z4 by <(r^2, 2)>
    {
        FiniteGroup prod = direct_product(d4, z4);
        int r2 = 2;                     // r^2 in dihedral indexing (j=0,k=2)
        int glued = r2 * 4 + 2;         // (r^2, 2)
        add("D4oZ4", quotient_group(prod, {0, glued}));
    }
    add("Z4:Z4",
        semidirect_product(z4, z4, power_action({0, 3, 2, 1}, 4)));
    add("K4:Z4",
        semidirect_product(k4, z4, power_action({0, 2, 1, 3}, 4)));

    return cat;
}

std::vector<int> order_profile(const FiniteGroup& g) {
    std::vector<int> profile(g.order);
    for (int x = 0; x < g.order; ++x) profile[x] = element_order(g, x);
    std::sort(profile.begin(), profile.end());
    return profile;
}

struct ClosureStep {
    int element;
    int parent;
    int gen;
    bool left; // element = gens[gen] * parent, else parent * gens[gen]
};

struct Generators {
    std::vector<int> gens;
    std::vector<ClosureStep> steps;
};

Generators generating_sequence(const FiniteGroup& g) {
    Generators result;
    std::vector<int> closure = {0};
    while (static_cast<int>(closure.size()) < g.order) {
        int next = -1;
        std::vector<bool> in(g.order, false);
        for (int x : closure) in[x] = true;
        for (int x = 0; x < g.order; ++x)
            if (!in[x]) {
                next = x;
                break;
            }
        result.gens.push_back(next);
        closure = subgroup_closure(g, result.gens);
    }
    // replayable BFS discovery of every non-identity element
    std::vector<int> discovered = {0};
    std::vector<bool> seen(g.order, false);
    seen[0] = true;
    for (std::size_t gi = 0; gi < result.gens.size(); ++gi) {
        int x = result.gens[gi];
        if (!seen[x]) {
            seen[x] = true;
            discovered.push_back(x);
            result.steps.push_back({x, 0, static_cast<int>(gi), false});
        }
    }
    for (std::size_t i = 0; i < discovered.size(); ++i) {
        for (std::size_t gi = 0; gi < result.gens.size(); ++gi) {
            int y = g.mul(discovered[i], result.gens[gi]);
            if (!seen[y]) {
                seen[y] = true;
                result.steps.push_back(
                    {y, discovered[i], static_cast<int>(gi), false});
                discovered.push_back(y);
            }
            y = g.mul(result.gens[gi], discovered[i]);
            if (!seen[y]) {
                seen[y] = true;
                result.steps.push_back(
                    {y, discovered[i], static_cast<int>(gi), true});
                discovered.push_back(y);
            }
        }
    }
    return result;
}

bool try_images(const FiniteGroup& g, const FiniteGroup& h,
                const Generators& gens, const std::vector<int>& images,
                std::vector<int>& map) {
    map.assign(g.order, -1);
    std::vector<bool> used(h.order, false);
    map[0] = 0;
    used[0] = true;
    for (const auto& step : gens.steps) {
        int gen_img = images[step.gen];
        int parent_img = map[step.parent];
        int img = step.left ? h.mul(gen_img, parent_img)
                            : h.mul(parent_img, gen_img);
        if (map[step.element] == -1) {
            if (used[img]) return false;
            map[step.element] = img;
            used[img] = true;
        } else if (map[step.element] != img) {
            return false;
        }
    }
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (map[g.mul(x, y)] != h.mul(map[x], map[y])) return false;
    return true;
}

bool search_images(const FiniteGroup& g, const FiniteGroup& h,
                   const Generators& gens,
                   const std::vector<std::vector<int>>& candidates,
                   std::vector<int>& images, std::size_t pos,
                   std::vector<int>& map) {
    if (pos == gens.gens.size()) return try_images(g, h, gens, images, map);
    for (int cand : candidates[pos]) {
        images[pos] = cand;
        if (search_images(g, h, gens, candidates, images, pos + 1, map))
            return true;
    }
    return false;
}

} // namespace

const std::vector<NamedGroup>& small_group_catalog() {
    static const std::vector<NamedGroup> catalog = build_catalog();
    return catalog;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h) {
    if (g.order != h.order) return std::nullopt;
    if (order_profile(g) != order_profile(h)) return std::nullopt;
    if (is_abelian(g) != is_abelian(h)) return std::nullopt;

    Generators gens = generating_sequence(g);
    std::vector<std::vector<int>> candidates(gens.gens.size());
    for (std::size_t i = 0; i < gens.gens.size(); ++i) {
        int ord = element_order(g, gens.gens[i]);
        for (int y = 1; y < h.order; ++y)
            if (element_order(h, y) == ord) candidates[i].push_back(y);
    }
    std::vector<int> images(gens.gens.size());
    std::vector<int> map;
    if (search_images(g, h, gens, candidates, images, 0, map)) return map;
    return std::nullopt;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    return find_isomorphism(g, h).has_value();
}

std::string isomorphism_label(const FiniteGroup& g) {
    if (g.order <= 16) {
        for (const auto& entry : small_group_catalog())
            if (entry.group.order == g.order && is_isomorphic(g, entry.group))
                return entry.name;
    }
    return "order" + std::to_string(g.order);
}

} // namespace catkit
