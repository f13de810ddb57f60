#include "catkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace catkit {

std::string FiniteGroup::name_of(int i) const {
    if (i >= 0 && i < static_cast<int>(names.size()) && !names[i].empty())
        return names[i];
    return "g" + std::to_string(i);
}

FiniteGroup from_flat_table(int order, std::vector<int> flat,
                            std::vector<std::string> names) {
    if (order <= 0)
        throw Error("NotLatinSquare", "group order must be positive");
    if (static_cast<int>(flat.size()) != order * order)
        throw Error("NotLatinSquare", "table is not " + std::to_string(order) +
                                          "x" + std::to_string(order));
    for (int i = 0; i < order * order; ++i)
        if (flat[i] < 0 || flat[i] >= order)
            throw Error("NotLatinSquare",
                        "entry out of range at position " + std::to_string(i));

    FiniteGroup g;
    g.order = order;
    g.table = std::move(flat);
    g.names = std::move(names);

    for (int i = 0; i < order; ++i) {
        if (g.mul(0, i) != i || g.mul(i, 0) != i)
            throw Error("NoIdentityAtZero",
                        "index 0 is not a two-sided identity at element " +
                            std::to_string(i));
    }
    for (int i = 0; i < order; ++i) {
        std::vector<bool> row(order, false), col(order, false);
        for (int j = 0; j < order; ++j) {
            int r = g.mul(i, j), c = g.mul(j, i);
            if (row[r])
                throw Error("NotLatinSquare", "row " + std::to_string(i) +
                                                  " repeats entry " +
                                                  std::to_string(r));
            if (col[c])
                throw Error("NotLatinSquare", "column " + std::to_string(i) +
                                                  " repeats entry " +
                                                  std::to_string(c));
            row[r] = col[c] = true;
        }
    }
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                    throw Error("NotAssociative",
                                "(" + std::to_string(i) + "," + std::to_string(j) +
                                    "," + std::to_string(k) + ") violates associativity");

    g.inverse.assign(order, -1);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j)
            if (g.mul(i, j) == 0 && g.mul(j, i) == 0) {
                g.inverse[i] = j;
                break;
            }
        if (g.inverse[i] < 0)
            throw Error("MissingInverse",
                        "element " + std::to_string(i) + " has no inverse");
    }
    return g;
}

FiniteGroup from_table(const std::vector<std::vector<int>>& rows,
                       std::vector<std::string> names) {
    int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw Error("NotLatinSquare", "table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat_table(n, std::move(flat), std::move(names));
}

FiniteGroup trivial_group() { return from_flat_table(1, {0}, {"e"}); }

FiniteGroup cyclic_group(int n) {
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
    return from_flat_table(n, std::move(flat));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    flat[idx(x1, y1) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return from_flat_table(n, std::move(flat));
}

// Elements s^j r^k, index j*n + k.
FiniteGroup dihedral_group(int n) {
    int m = 2 * n;
    std::vector<int> flat(static_cast<std::size_t>(m) * m);
    auto idx = [&](int j, int k) { return j * n + ((k % n) + n) % n; };
    for (int j1 = 0; j1 < 2; ++j1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int k2 = 0; k2 < n; ++k2) {
                    // s^j1 r^k1 s^j2 r^k2 = s^(j1+j2) r^(k2 +- k1)
                    int k = j2 == 0 ? k1 + k2 : k2 - k1;
                    flat[idx(j1, k1) * m + idx(j2, k2)] = idx((j1 + j2) % 2, k);
                }
    return from_flat_table(m, std::move(flat));
}

// Elements s^j r^k with r of order 2n and s^2 = r^n; index j*2n + k.
FiniteGroup dicyclic_group(int n) {
    int cyc = 2 * n, m = 4 * n;
    std::vector<int> flat(static_cast<std::size_t>(m) * m);
    auto idx = [&](int j, int k) { return j * cyc + ((k % cyc) + cyc) % cyc; };
    for (int j1 = 0; j1 < 2; ++j1)
        for (int k1 = 0; k1 < cyc; ++k1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int k2 = 0; k2 < cyc; ++k2) {
                    int j = (j1 + j2) % 2;
                    int k = j2 == 0 ? k1 + k2 : k2 - k1;
                    if (j1 == 1 && j2 == 1) k += n; // s^2 = r^n
                    flat[idx(j1, k1) * m + idx(j2, k2)] = idx(j, k);
                }
    return from_flat_table(m, std::move(flat));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action) {
    int m = n.order * h.order;
    std::vector<int> flat(static_cast<std::size_t>(m) * m);
    auto idx = [&](int x, int a) { return x * n.order + a; };
    for (int x = 0; x < h.order; ++x)
        for (int a = 0; a < n.order; ++a)
            for (int y = 0; y < h.order; ++y)
                for (int b = 0; b < n.order; ++b)
                    flat[idx(x, a) * m + idx(y, b)] =
                        idx(h.mul(x, y), n.mul(a, action[x][b]));
    return from_flat_table(m, std::move(flat));
}

FiniteGroup quotient_group(const FiniteGroup& g,
                           const std::vector<int>& normal_subgroup) {
    std::set<int> sub(normal_subgroup.begin(), normal_subgroup.end());
    // left cosets, keyed by least member
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int s : sub) coset_of[g.mul(x, s)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> flat(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            flat[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
    return from_flat_table(q, std::move(flat));
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

int element_order(const FiniteGroup& g, int x) {
    int y = x, k = 1;
    while (y != 0) {
        y = g.mul(y, x);
        ++k;
    }
    return k;
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& generators) {
    std::vector<bool> in(g.order, false);
    in[0] = true;
    std::vector<int> queue = {0};
    for (int x : generators)
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int x : generators) {
            int y = g.mul(queue[i], x);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
            y = g.mul(x, queue[i]);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(g, comms);
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
    if (!is_abelian(g)) throw Error("NotAbelian", "group is not abelian");
    // For each prime power p^k, #\{x : x^{p^k} = 1\} determines the p-type.
    std::map<int, std::vector<int>> lambdas; // prime -> partition, descending
    int n = g.order;
    std::vector<int> primes;
    int tmp = n;
    for (int p = 2; p * p <= tmp; ++p)
        if (tmp % p == 0) {
            primes.push_back(p);
            while (tmp % p == 0) tmp /= p;
        }
    if (tmp > 1) primes.push_back(tmp);

    auto pow_in_group = [&](int x, int e) {
        int y = 0;
        for (int i = 0; i < e; ++i) y = g.mul(y, x);
        return y;
    };

    for (int p : primes) {
        std::vector<int> exps; // e_k = log_p #{x : p^k x = 0}
        exps.push_back(0);
        int pk = 1;
        while (true) {
            pk *= p;
            int count = 0;
            for (int x = 0; x < n; ++x)
                if (pow_in_group(x, pk) == 0) ++count;
            int e = 0;
            while (count > 1) { // count is p^e by the structure theorem
                count /= p;
                ++e;
            }
            exps.push_back(e);
            if (exps[exps.size() - 1] == exps[exps.size() - 2]) break;
        }
        std::vector<int> lambda;
        for (std::size_t k = 1; k < exps.size(); ++k) {
            int parts_ge_k = exps[k] - exps[k - 1];
            // parts_ge_k = number of lambda_i >= k
            while (static_cast<int>(lambda.size()) < parts_ge_k) lambda.push_back(0);
            for (int i = 0; i < parts_ge_k; ++i) lambda[i]++;
        }
        std::sort(lambda.rbegin(), lambda.rend());
        if (!lambda.empty()) lambdas[p] = lambda;
    }

    std::size_t parts = 0;
    for (auto& [p, lam] : lambdas) parts = std::max(parts, lam.size());
    std::vector<int> factors;
    for (std::size_t j = 0; j < parts; ++j) {
        long long d = 1;
        for (auto& [p, lam] : lambdas)
            if (j < lam.size()) {
                for (int i = 0; i < lam[j]; ++i) d *= p;
            }
        if (d > 1) factors.push_back(static_cast<int>(d));
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

bool GroupHom::is_bijective() const {
    if (source.order != target.order) return false;
    std::vector<bool> hit(target.order, false);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool check_hom(const GroupHom& f) {
    if (static_cast<int>(f.map.size()) != f.source.order) return false;
    for (int v : f.map)
        if (v < 0 || v >= f.target.order) return false;
    if (f.map[0] != 0) return false;
    for (int x = 0; x < f.source.order; ++x)
        for (int y = 0; y < f.source.order; ++y)
            if (f.map[f.source.mul(x, y)] != f.target.mul(f.map[x], f.map[y]))
                return false;
    return true;
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map) {
    GroupHom f{std::move(source), std::move(target), std::move(map)};
    if (!check_hom(f))
        throw Error("NotAHomomorphism", "map does not preserve multiplication");
    return f;
}

GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<int> map(g.order);
    std::iota(map.begin(), map.end(), 0);
    return GroupHom{g, g, std::move(map)};
}

GroupHom compose_homs(const GroupHom& g, const GroupHom& f) {
    if (f.target != g.source)
        throw Error("NotComposable", "hom targets/sources do not match");
    std::vector<int> map(f.source.order);
    for (int x = 0; x < f.source.order; ++x) map[x] = g.map[f.map[x]];
    return GroupHom{f.source, g.target, std::move(map)};
}

GroupHom conjugation_hom(const FiniteGroup& g, int a) {
    std::vector<int> map(g.order);
    for (int x = 0; x < g.order; ++x) map[x] = g.conj(a, x);
    return GroupHom{g, g, std::move(map)};
}

namespace {

// DFS over map arrays in lexicographic order.  Assignments forced by
// already-placed products prune the naive |H|^|G| space to near nothing.
struct HomSearch {
    const FiniteGroup& G;
    const FiniteGroup& H;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    std::vector<int> map;
    std::vector<GroupHom>* out;

    bool consistent(int k) const {
        for (int i = 0; i <= k; ++i) {
            int p = G.mul(i, k);
            if (p <= k && map[p] != H.mul(map[i], map[k])) return false;
            p = G.mul(k, i);
            if (p <= k && map[p] != H.mul(map[k], map[i])) return false;
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (G.mul(i, j) == k && H.mul(map[i], map[j]) != map[k])
                    return false;
        return true;
    }

    void run(int k) {
        if (k == G.order) {
            out->push_back(GroupHom{G, H, map});
            return;
        }
        for (int v = 0; v < H.order; ++v) {
            if (++visited > budget)
                throw SizeLimitError("homomorphism search exceeded " +
                                     std::to_string(budget) + " candidates");
            map[k] = v;
            if (consistent(k)) run(k + 1);
        }
        map[k] = -1;
    }
};

} // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& G, const FiniteGroup& H,
                                     std::uint64_t max_candidates) {
    std::vector<GroupHom> out;
    HomSearch search{G, H, max_candidates, 0, std::vector<int>(G.order, -1), &out};
    search.map[0] = 0;
    if (!search.consistent(0)) return out;
    search.run(1);
    return out;
}

HomClasses hom_conjugacy_classes(const FiniteGroup& G, const FiniteGroup& H,
                                 std::uint64_t max_candidates) {
    HomClasses result;
    result.homs = enumerate_homs(G, H, max_candidates);

    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < result.homs.size(); ++i)
        index_of[result.homs[i].map] = static_cast<int>(i);

    std::vector<int> class_of(result.homs.size(), -1);
    for (std::size_t i = 0; i < result.homs.size(); ++i) {
        if (class_of[i] >= 0) continue;
        int cls = static_cast<int>(result.classes.size());
        std::vector<int> members;
        // orbit of hom i under conjugation by all h in H
        std::vector<int> stack = {static_cast<int>(i)};
        class_of[i] = cls;
        members.push_back(static_cast<int>(i));
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int h = 0; h < H.order; ++h) {
                std::vector<int> conj_map(G.order);
                for (int x = 0; x < G.order; ++x)
                    conj_map[x] = H.conj(h, result.homs[cur].map[x]);
                int j = index_of.at(conj_map);
                if (class_of[j] < 0) {
                    class_of[j] = cls;
                    members.push_back(j);
                    stack.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        result.classes.push_back(std::move(members));
    }
    return result;
}

AutomorphismInfo automorphisms(const FiniteGroup& g,
                               std::uint64_t max_candidates) {
    AutomorphismInfo info;
    auto classes = hom_conjugacy_classes(g, g, max_candidates);
    std::set<std::vector<int>> inner_maps;
    for (int a = 0; a < g.order; ++a)
        inner_maps.insert(conjugation_hom(g, a).map);

    for (const auto& cls : classes.classes) {
        bool bijective_class = false;
        for (int i : cls)
            if (classes.homs[i].is_bijective()) {
                bijective_class = true;
                break;
            }
        if (bijective_class) info.outer_class_count++;
    }
    for (auto& f : classes.homs)
        if (f.is_bijective()) {
            info.inner.push_back(inner_maps.count(f.map) > 0);
            info.automorphisms.push_back(std::move(f));
        }
    return info;
}

} // namespace catkit
