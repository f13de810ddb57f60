#include "catkit/nerve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "catkit/categorify.hpp"

namespace catkit {

namespace {

std::string chain_str(const std::vector<int>& chain) {
    std::string s = "(";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chain[i]);
    }
    return s + ")";
}

} // namespace

bool check_simplicial_identities(const TruncatedSimplicialSet& s,
                                 std::string* first_violation) {
    auto report = [&](const std::string& why) {
        if (first_violation) *first_violation = why;
        return false;
    };
    const int k = s.truncation;
    auto face = [&](int n, int i, int idx) { return s.face[n][i][idx]; };
    auto degen = [&](int n, int i, int idx) { return s.degeneracy[n][i][idx]; };

    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= k; ++n)
        for (int idx = 0; idx < s.count(n); ++idx)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(n - 1, i, face(n, j, idx)) !=
                        face(n - 1, j - 1, face(n, i, idx)))
                        return report("face identity fails at degree " +
                                      std::to_string(n) + " simplex " +
                                      std::to_string(idx));
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= k; ++n)
        for (int idx = 0; idx < s.count(n); ++idx)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    if (degen(n + 1, i, degen(n, j, idx)) !=
                        degen(n + 1, j + 1, degen(n, i, idx)))
                        return report("degeneracy identity fails at degree " +
                                      std::to_string(n));
    // d_i s_j relations
    for (int n = 0; n + 1 <= k; ++n)
        for (int idx = 0; idx < s.count(n); ++idx)
            for (int j = 0; j <= n; ++j) {
                int sj = degen(n, j, idx);
                for (int i = 0; i <= n + 1; ++i) {
                    int lhs = face(n + 1, i, sj);
                    if (i == j || i == j + 1) {
                        if (lhs != idx)
                            return report("d_i s_j != id at degree " +
                                          std::to_string(n));
                    } else if (i < j) {
                        if (n == 0) continue; // would leave the truncation
                        if (lhs != degen(n - 1, j - 1, face(n, i, idx)))
                            return report("d_i s_j != s_{j-1} d_i at degree " +
                                          std::to_string(n));
                    } else {
                        if (n == 0) continue;
                        if (lhs != degen(n - 1, j, face(n, i - 1, idx)))
                            return report("d_i s_j != s_j d_{i-1} at degree " +
                                          std::to_string(n));
                    }
                }
            }
    return true;
}

std::vector<std::vector<bool>> degenerate_flags(const TruncatedSimplicialSet& s) {
    std::vector<std::vector<bool>> flags(s.truncation + 1);
    for (int n = 0; n <= s.truncation; ++n)
        flags[n].assign(s.count(n), false);
    for (int n = 0; n < s.truncation; ++n)
        for (int i = 0; i <= n; ++i)
            for (int idx = 0; idx < s.count(n); ++idx)
                flags[n + 1][s.degeneracy[n][i][idx]] = true;
    return flags;
}

TruncatedSimplicialSet nerve(const FinCategory& c, int k,
                             std::uint64_t max_candidates) {
    if (k < 0) throw Error("OutOfRange", "truncation degree must be >= 0");
    TruncatedSimplicialSet s;
    s.truncation = k;
    s.simplex_data.resize(k + 1);
    s.face.resize(k + 1);
    s.degeneracy.resize(k + 1);

    std::vector<std::map<std::vector<int>, int>> index(k + 1);
    for (int x = 0; x < c.object_count; ++x) {
        index[0][{x}] = x;
        s.simplex_data[0].push_back({x});
    }
    for (int n = 1; n <= k; ++n) {
        // extend chains by one composable morphism, lexicographically
        for (const auto& chain : s.simplex_data[n - 1]) {
            int tail_object =
                n == 1 ? chain[0] : c.tgt(chain.back());
            for (int m = 0; m < c.morphism_count(); ++m) {
                if (c.src(m) != tail_object) continue;
                std::vector<int> next;
                if (n > 1) next = chain;
                next.push_back(m);
                index[n][next] = static_cast<int>(s.simplex_data[n].size());
                s.simplex_data[n].push_back(std::move(next));
                if (s.simplex_data[n].size() > max_candidates)
                    throw SizeLimitError("nerve has more than " +
                                         std::to_string(max_candidates) +
                                         " simplices in degree " +
                                         std::to_string(n));
            }
        }
    }

    auto object_at = [&](const std::vector<int>& chain, int n, int i) {
        // the i-th vertex of an n-chain
        if (n == 0) return chain[0];
        return i == 0 ? c.src(chain[0]) : c.tgt(chain[i - 1]);
    };

    for (int n = 1; n <= k; ++n) {
        s.face[n].assign(n + 1, std::vector<int>(s.count(n)));
        for (int idx = 0; idx < s.count(n); ++idx) {
            const auto& chain = s.simplex_data[n][idx];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> result;
                if (n == 1) {
                    result = {i == 0 ? c.tgt(chain[0]) : c.src(chain[0])};
                } else if (i == 0) {
                    result.assign(chain.begin() + 1, chain.end());
                } else if (i == n) {
                    result.assign(chain.begin(), chain.end() - 1);
                } else {
                    result = chain;
                    result[i - 1] = c.compose(chain[i], chain[i - 1]);
                    result.erase(result.begin() + i);
                }
                s.face[n][i][idx] = index[n - 1].at(result);
            }
        }
    }
    for (int n = 0; n < k; ++n) {
        s.degeneracy[n].assign(n + 1, std::vector<int>(s.count(n)));
        for (int idx = 0; idx < s.count(n); ++idx) {
            const auto& chain = s.simplex_data[n][idx];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> result;
                if (n == 0) {
                    result = {c.identity_at[chain[0]]};
                } else {
                    result = chain;
                    result.insert(result.begin() + i,
                                  c.identity_at[object_at(chain, n, i)]);
                }
                s.degeneracy[n][i][idx] = index[n + 1].at(result);
            }
        }
    }

    std::string why;
    if (!check_simplicial_identities(s, &why))
        throw Error("InternalError", "nerve identities broken: " + why);
    return s;
}

ChainComplex normalized_chains(const TruncatedSimplicialSet& s) {
    auto flags = degenerate_flags(s);
    const int k = s.truncation;
    ChainComplex cx;
    cx.ranks.resize(k + 1);
    cx.boundary.resize(k + 1);

    // nondegenerate index per degree
    std::vector<std::vector<int>> nondeg_index(k + 1);
    for (int n = 0; n <= k; ++n) {
        nondeg_index[n].assign(s.count(n), -1);
        int r = 0;
        for (int idx = 0; idx < s.count(n); ++idx)
            if (!flags[n][idx]) nondeg_index[n][idx] = r++;
        cx.ranks[n] = r;
    }
    for (int n = 1; n <= k; ++n) {
        IntMatrix d(cx.ranks[n - 1], cx.ranks[n]);
        for (int idx = 0; idx < s.count(n); ++idx) {
            int col = nondeg_index[n][idx];
            if (col < 0) continue;
            for (int i = 0; i <= n; ++i) {
                int f = s.face[n][i][idx];
                int row = nondeg_index[n - 1][f];
                if (row < 0) continue; // degenerate face contributes zero
                d.at(row, col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        cx.boundary[n] = std::move(d);
    }
    // dd = 0 sanity
    for (int n = 2; n <= k; ++n) {
        IntMatrix prod = multiply(cx.boundary[n - 1], cx.boundary[n]);
        for (const auto& v : prod.data)
            if (v != 0)
                throw Error("InternalError", "boundary squared is not zero");
    }
    return cx;
}

HomologyResult homology(const ChainComplex& cx, int n) {
    const int top = static_cast<int>(cx.ranks.size()) - 1;
    if (n < 0 || n > top)
        throw Error("OutOfRange", "degree outside the complex");
    if (n + 1 > top)
        throw Error("TruncationTooShallow",
                    "boundary into degree " + std::to_string(n) +
                        " needs truncation >= " + std::to_string(n + 1));
    int rank_dn = 0;
    if (n >= 1) rank_dn = smith_normal_form(cx.boundary[n]).rank;
    SmithResult up = smith_normal_form(cx.boundary[n + 1]);

    HomologyResult h;
    h.free_rank = cx.ranks[n] - rank_dn - up.rank;
    for (const BigInt& d : up.diagonal)
        if (d > 1) h.torsion.push_back(static_cast<long long>(d));
    return h;
}

std::string homology_to_string(const HomologyResult& h) {
    std::ostringstream out;
    bool first = true;
    if (h.free_rank == 1) {
        out << "Z";
        first = false;
    } else if (h.free_rank > 1) {
        out << "Z^" << h.free_rank;
        first = false;
    }
    for (long long d : h.torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

SimplicialMap induced_simplicial_map(const Functor& f,
                                     const TruncatedSimplicialSet& src,
                                     const TruncatedSimplicialSet& dst) {
    if (src.truncation != dst.truncation)
        throw Error("OutOfRange", "truncations do not match");
    const int k = src.truncation;
    SimplicialMap map;
    map.level_maps.resize(k + 1);

    std::vector<std::map<std::vector<int>, int>> dst_index(k + 1);
    for (int n = 0; n <= k; ++n)
        for (int idx = 0; idx < dst.count(n); ++idx)
            dst_index[n][dst.simplex_data[n][idx]] = idx;

    for (int n = 0; n <= k; ++n) {
        map.level_maps[n].resize(src.count(n));
        for (int idx = 0; idx < src.count(n); ++idx) {
            std::vector<int> image;
            const auto& chain = src.simplex_data[n][idx];
            if (n == 0) {
                image = {f.obj_map[chain[0]]};
            } else {
                for (int m : chain) image.push_back(f.mor_map[m]);
            }
            auto it = dst_index[n].find(image);
            if (it == dst_index[n].end())
                throw Error("InternalError",
                            "functor image " + chain_str(image) +
                                " is not a simplex of the target nerve");
            map.level_maps[n][idx] = it->second;
        }
    }

    // the induced map must commute with faces and degeneracies
    for (int n = 1; n <= k; ++n)
        for (int i = 0; i <= n; ++i)
            for (int idx = 0; idx < src.count(n); ++idx)
                if (dst.face[n][i][map.level_maps[n][idx]] !=
                    map.level_maps[n - 1][src.face[n][i][idx]])
                    throw Error("InternalError",
                                "induced map does not commute with faces");
    for (int n = 0; n < k; ++n)
        for (int i = 0; i <= n; ++i)
            for (int idx = 0; idx < src.count(n); ++idx)
                if (dst.degeneracy[n][i][map.level_maps[n][idx]] !=
                    map.level_maps[n + 1][src.degeneracy[n][i][idx]])
                    throw Error("InternalError",
                                "induced map does not commute with degeneracies");
    return map;
}

BarSpaces bar_spaces(const FiniteGroup& g, int k, std::uint64_t max_candidates) {
    BarSpaces result;
    auto simp = simplicial_cat(g);
    result.eg = nerve(simp.cat, k, max_candidates);
    result.bg = nerve(tautological_cat(g), k, max_candidates);

    Functor r = covering_transformation(g);
    SimplicialMap quotient = induced_simplicial_map(r, result.eg, result.bg);

    // vertices of an EG simplex determine it; the left action translates them
    auto object_tuple = [&](const std::vector<int>& chain, int n) {
        std::vector<int> objs;
        if (n == 0) {
            objs = {chain[0]};
        } else {
            objs.push_back(simp.cat.src(chain[0]));
            for (int m : chain) objs.push_back(simp.cat.tgt(m));
        }
        return objs;
    };

    result.quotient_verified = true;
    for (int n = 0; n <= k; ++n) {
        std::map<std::vector<int>, int> eg_index;
        for (int idx = 0; idx < result.eg.count(n); ++idx)
            eg_index[object_tuple(result.eg.simplex_data[n][idx], n)] = idx;

        // fibers of the quotient map
        std::map<int, std::vector<int>> fibers;
        for (int idx = 0; idx < result.eg.count(n); ++idx)
            fibers[quotient.level_maps[n][idx]].push_back(idx);
        if (static_cast<int>(fibers.size()) != result.bg.count(n)) {
            result.quotient_verified = false; // not surjective
            continue;
        }
        for (const auto& [image, fiber] : fibers) {
            if (static_cast<int>(fiber.size()) != g.order)
                result.quotient_verified = false;
            // the fiber is one free orbit of the G-action the covering
            // transformation is invariant under (translation on the side
            // that R kills; the other side acts by conjugation)
            int base = fiber[0];
            auto base_objs =
                object_tuple(result.eg.simplex_data[n][base], n);
            std::vector<int> orbit;
            for (int a = 0; a < g.order; ++a) {
                std::vector<int> translated(base_objs.size());
                for (std::size_t i = 0; i < base_objs.size(); ++i)
                    translated[i] = g.mul(base_objs[i], a);
                int target = eg_index.at(translated);
                orbit.push_back(target);
                if (a != 0 && target == base)
                    result.quotient_verified = false; // stabilizer not free
            }
            std::sort(orbit.begin(), orbit.end());
            std::vector<int> fiber_sorted = fiber;
            std::sort(fiber_sorted.begin(), fiber_sorted.end());
            if (orbit != fiber_sorted) result.quotient_verified = false;
        }
    }
    return result;
}

} // namespace catkit
