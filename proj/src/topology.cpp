#include "catkit/topology.hpp"

#include <algorithm>
#include <functional>

namespace catkit {

namespace {

std::string open_str(std::uint64_t open, int points) {
    std::string s = "{";
    bool first = true;
    for (int p = 0; p < points; ++p)
        if (open >> p & 1) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
    return s + "}";
}

std::uint64_t bitset_of(const std::vector<int>& points, int point_count) {
    std::uint64_t b = 0;
    for (int p : points) {
        if (p < 0 || p >= point_count)
            throw Error("NotATopology", "point " + std::to_string(p) +
                                            " is out of range");
        b |= 1ULL << p;
    }
    return b;
}

} // namespace

int FiniteSpace::open_index(std::uint64_t open) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), open);
    if (it == opens.end() || *it != open) return -1;
    return static_cast<int>(it - opens.begin());
}

FiniteSpace make_space(int point_count,
                       const std::vector<std::vector<int>>& open_lists) {
    if (point_count < 0 || point_count > 64)
        throw Error("NotATopology", "supported point counts are 0..64");
    FiniteSpace x;
    x.point_count = point_count;
    for (const auto& open : open_lists)
        x.opens.push_back(bitset_of(open, point_count));
    std::sort(x.opens.begin(), x.opens.end());
    x.opens.erase(std::unique(x.opens.begin(), x.opens.end()), x.opens.end());

    if (x.open_index(0) < 0)
        throw Error("NotATopology", "the empty set is not open");
    if (x.open_index(x.full()) < 0)
        throw Error("NotATopology", "the full set is not open");
    for (std::uint64_t u : x.opens)
        for (std::uint64_t v : x.opens) {
            if (x.open_index(u | v) < 0)
                throw Error("NotATopology",
                            "union of " + open_str(u, point_count) + " and " +
                                open_str(v, point_count) + " is not open");
            if (x.open_index(u & v) < 0)
                throw Error("NotATopology",
                            "intersection of " + open_str(u, point_count) +
                                " and " + open_str(v, point_count) +
                                " is not open");
        }
    return x;
}

OpenSetCategory open_set_category(const FiniteSpace& x) {
    const int n = static_cast<int>(x.opens.size());
    FinCategory c;
    c.object_count = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((x.opens[a] & x.opens[b]) == x.opens[a]) { // a subset of b
                c.mor_src.push_back(a);
                c.mor_tgt.push_back(b);
            }
    const int mc = c.morphism_count();
    std::vector<int> pair_id(static_cast<std::size_t>(n) * n, -1);
    for (int m = 0; m < mc; ++m)
        pair_id[static_cast<std::size_t>(c.mor_src[m]) * n + c.mor_tgt[m]] = m;
    c.identity_at.resize(n);
    for (int a = 0; a < n; ++a)
        c.identity_at[a] = pair_id[static_cast<std::size_t>(a) * n + a];
    c.comp.assign(static_cast<std::size_t>(mc) * mc, -1);
    for (int m2 = 0; m2 < mc; ++m2)
        for (int m1 = 0; m1 < mc; ++m1)
            if (c.mor_tgt[m1] == c.mor_src[m2])
                c.comp[static_cast<std::size_t>(m2) * mc + m1] =
                    pair_id[static_cast<std::size_t>(c.mor_src[m1]) * n +
                            c.mor_tgt[m2]];
    for (int a = 0; a < n; ++a)
        c.object_names.push_back(open_str(x.opens[a], x.point_count));
    validate_category(c);

    MonoidalStructure mon;
    mon.unit = x.open_index(x.full());
    mon.tensor_obj.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mon.tensor_obj[static_cast<std::size_t>(a) * n + b] =
                x.open_index(x.opens[a] & x.opens[b]);
    return OpenSetCategory{x, MonoidalCategory{std::move(c), std::move(mon)}};
}

Functor preimage_functor(const std::vector<int>& point_map,
                         const FiniteSpace& x, const FiniteSpace& y) {
    if (static_cast<int>(point_map.size()) != x.point_count)
        throw Error("NotContinuous", "point map has wrong length");
    for (int v : point_map)
        if (v < 0 || v >= y.point_count)
            throw Error("NotContinuous", "point image out of range");

    auto preimage = [&](std::uint64_t open_y) {
        std::uint64_t result = 0;
        for (int p = 0; p < x.point_count; ++p)
            if (open_y >> point_map[p] & 1) result |= 1ULL << p;
        return result;
    };
    for (std::uint64_t open_y : y.opens)
        if (x.open_index(preimage(open_y)) < 0)
            throw Error("NotContinuous",
                        "preimage of " + open_str(open_y, y.point_count) +
                            " is not open");

    auto source = open_set_category(y).monoidal.cat;
    auto target = open_set_category(x).monoidal.cat;
    Functor f{source, target, std::vector<int>(source.object_count),
              std::vector<int>(source.morphism_count())};
    for (int a = 0; a < source.object_count; ++a)
        f.obj_map[a] = x.open_index(preimage(y.opens[a]));
    for (int m = 0; m < source.morphism_count(); ++m) {
        auto image = target.hom_lookup(f.obj_map[source.src(m)],
                                       f.obj_map[source.tgt(m)]);
        if (!image)
            throw Error("NotContinuous", "preimage does not preserve the order");
        f.mor_map[m] = *image;
    }
    return f;
}

Cover cover_from_opens(const FiniteSpace& x,
                       const std::vector<std::vector<int>>& open_lists) {
    Cover c;
    c.space = x;
    c.index_size = static_cast<int>(open_lists.size());
    std::uint64_t covered = 0;
    for (const auto& open : open_lists) {
        std::uint64_t b = bitset_of(open, x.point_count);
        int idx = x.open_index(b);
        if (idx < 0)
            throw Error("InvalidCover",
                        open_str(b, x.point_count) + " is not an open set");
        c.assignment.push_back(idx);
        covered |= b;
    }
    c.leq.assign(c.index_size, std::vector<bool>(c.index_size, false));
    for (int i = 0; i < c.index_size; ++i)
        for (int j = 0; j < c.index_size; ++j)
            c.leq[i][j] = (x.opens[c.assignment[i]] & x.opens[c.assignment[j]]) ==
                          x.opens[c.assignment[i]];
    c.is_cover = covered == x.full();
    validate_cover(c);
    return c;
}

void validate_cover(const Cover& c) {
    for (int i = 0; i < c.index_size; ++i)
        for (int j = 0; j < c.index_size; ++j) {
            if (i != j && c.assignment[i] == c.assignment[j])
                throw Error("InvalidCover", "assignment is not injective");
            bool included =
                (c.space.opens[c.assignment[i]] & c.space.opens[c.assignment[j]]) ==
                c.space.opens[c.assignment[i]];
            // full and faithful onto the image: i <= j iff U_i included in U_j
            if (c.leq[i][j] != included)
                throw Error("InvalidCover",
                            "index poset does not match inclusions at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (c.is_cover) {
        std::uint64_t covered = 0;
        for (int idx : c.assignment) covered |= c.space.opens[idx];
        if (covered != c.space.full())
            throw Error("InvalidCover", "flagged cover does not cover X");
    }
}

std::optional<Refinement> refinement(const Cover& v, const Cover& u) {
    if (!(v.space.opens == u.space.opens) ||
        v.space.point_count != u.space.point_count)
        throw Error("InvalidCover", "covers live on different spaces");
    const FiniteSpace& x = v.space;

    // candidates per index of V, in ascending order
    std::vector<std::vector<int>> candidates(v.index_size);
    for (int j = 0; j < v.index_size; ++j)
        for (int i = 0; i < u.index_size; ++i)
            if ((x.opens[v.assignment[j]] & x.opens[u.assignment[i]]) ==
                x.opens[v.assignment[j]])
                candidates[j].push_back(i);

    std::vector<int> phi(v.index_size, -1);
    std::function<bool(int)> rec = [&](int j) {
        if (j == v.index_size) return true;
        for (int cand : candidates[j]) {
            bool ok = true;
            for (int j2 = 0; j2 < j && ok; ++j2) {
                if (v.leq[j2][j] && !u.leq[phi[j2]][cand]) ok = false;
                if (v.leq[j][j2] && !u.leq[cand][phi[j2]]) ok = false;
            }
            if (!ok) continue;
            phi[j] = cand;
            if (rec(j + 1)) return true;
        }
        phi[j] = -1;
        return false;
    };
    if (!rec(0)) return std::nullopt;

    auto cat = open_set_category(x).monoidal.cat;
    Refinement r;
    r.phi = phi;
    for (int j = 0; j < v.index_size; ++j) {
        auto m = cat.hom_lookup(v.assignment[j], u.assignment[phi[j]]);
        r.inclusions.push_back(*m);
    }
    return r;
}

} // namespace catkit
