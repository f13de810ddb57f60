#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/categorify.hpp"
#include "catkit/extension.hpp"
#include "catkit/nerve.hpp"
#include "catkit/small_groups.hpp"

using namespace catkit;

namespace {

// S^1 as a hand-built simplicial set: one vertex, one nondegenerate edge,
// degenerate simplices above, truncated at 2.
TruncatedSimplicialSet circle_model() {
    TruncatedSimplicialSet s;
    s.truncation = 2;
    s.simplex_data = {{{0}}, {{0}, {1}}, {{0}, {1}, {2}}};
    s.face.resize(3);
    s.degeneracy.resize(3);
    // degree 1: 0 = e, 1 = s0(v)
    s.face[1] = {{0, 0}, {0, 0}};
    // degree 2: 0 = s0(e), 1 = s1(e), 2 = s0(s0 v)
    s.face[2] = {{0, 1, 1}, {0, 0, 1}, {1, 0, 1}};
    s.degeneracy[0] = {{1}};
    s.degeneracy[1] = {{0, 2}, {1, 2}};
    return s;
}

std::vector<long long> h1_of_bg(const FiniteGroup& g) {
    auto cx = normalized_chains(nerve(tautological_cat(g), 3));
    auto h = homology(cx, 1);
    CHECK(h.free_rank == 0);
    return h.torsion;
}

} // namespace

TEST_CASE("hand-built circle passes the simplicial identities") {
    auto s = circle_model();
    std::string why;
    CHECK(check_simplicial_identities(s, &why));

    auto flags = degenerate_flags(s);
    CHECK(flags[1] == std::vector<bool>{false, true});
    CHECK(flags[2] == std::vector<bool>{true, true, true});

    auto cx = normalized_chains(s);
    CHECK(cx.ranks == std::vector<int>{1, 1, 0});
    CHECK(cx.boundary[1].at(0, 0) == 0); // both faces agree

    auto h1 = homology(cx, 1);
    CHECK(h1.free_rank == 1);
    CHECK(h1.torsion.empty());
    auto h0 = homology(cx, 0);
    CHECK(h0.free_rank == 1);
}

TEST_CASE("nerve counts") {
    auto z2 = cyclic_group(2);
    auto bg = nerve(tautological_cat(z2), 3);
    for (int n = 0; n <= 3; ++n) CHECK(bg.count(n) == (1 << n));

    // nondegenerate chains avoid the identity morphism
    auto flags = degenerate_flags(bg);
    for (int n = 0; n <= 3; ++n) {
        int nondeg = 0;
        for (int i = 0; i < bg.count(n); ++i)
            if (!flags[n][i]) ++nondeg;
        CHECK(nondeg == 1); // (|G|-1)^n = 1
    }

    auto s3 = dihedral_group(3);
    auto bgs3 = nerve(tautological_cat(s3), 2);
    auto flags3 = degenerate_flags(bgs3);
    int nondeg2 = 0;
    for (int i = 0; i < bgs3.count(2); ++i)
        if (!flags3[2][i]) ++nondeg2;
    CHECK(nondeg2 == 25); // (6-1)^2

    auto eg = nerve(simplicial_cat(z2).cat, 2);
    CHECK(eg.count(2) == 8); // 2 * 2 * 2 composable chains

    auto point = nerve(tautological_cat(trivial_group()), 4);
    auto point_flags = degenerate_flags(point);
    for (int n = 0; n <= 4; ++n) {
        CHECK(point.count(n) == 1);
        if (n > 0) CHECK(point_flags[n][0]);
    }
}

TEST_CASE("every constructed nerve passes the simplicial identities") {
    for (const auto& g :
         {cyclic_group(2), cyclic_group(3), cyclic_group(4), dihedral_group(3)}) {
        CHECK(check_simplicial_identities(nerve(tautological_cat(g), 3)));
        CHECK(check_simplicial_identities(nerve(simplicial_cat(g).cat, 2)));
        CHECK(check_simplicial_identities(nerve(discrete_cat(g).cat, 3)));
    }
}

TEST_CASE("boundary squared is zero") {
    for (const auto& g : {cyclic_group(2), cyclic_group(3)}) {
        auto cx = normalized_chains(nerve(simplicial_cat(g).cat, 3));
        for (int n = 2; n <= 3; ++n) {
            IntMatrix prod = multiply(cx.boundary[n - 1], cx.boundary[n]);
            for (const auto& v : prod.data) CHECK(v == 0);
        }
    }
}

TEST_CASE("H_1 of the classifying space is the abelianization") {
    CHECK(h1_of_bg(cyclic_group(2)) == std::vector<long long>{2});
    CHECK(h1_of_bg(cyclic_group(3)) == std::vector<long long>{3});
    CHECK(h1_of_bg(cyclic_group(4)) == std::vector<long long>{4});
    CHECK(h1_of_bg(direct_product(cyclic_group(2), cyclic_group(2))) ==
          std::vector<long long>{2, 2});
    CHECK(h1_of_bg(dihedral_group(3)) == std::vector<long long>{2});

    // cross-check through the group-theoretic abelianization
    for (const auto& g : {cyclic_group(4), dihedral_group(3), dicyclic_group(2)}) {
        auto quotient = quotient_group(g, commutator_subgroup(g));
        std::vector<long long> expected;
        for (int d : abelian_invariants(quotient)) expected.push_back(d);
        CHECK(h1_of_bg(g) == expected);
    }
}

TEST_CASE("H_3 of B(Z/2) at truncation 4") {
    auto cx = normalized_chains(nerve(tautological_cat(cyclic_group(2)), 4));
    CHECK(cx.ranks == std::vector<int>{1, 1, 1, 1, 1});
    auto h3 = homology(cx, 3);
    CHECK(h3.free_rank == 0);
    CHECK(h3.torsion == std::vector<long long>{2});
}

TEST_CASE("EG is acyclic in low degrees") {
    for (const auto& g :
         {cyclic_group(2), cyclic_group(3), cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2))}) {
        auto cx = normalized_chains(nerve(simplicial_cat(g).cat, 3));
        auto h1 = homology(cx, 1);
        CHECK(h1.free_rank == 0);
        CHECK(h1.torsion.empty());
        auto h2 = homology(cx, 2);
        CHECK(h2.free_rank == 0);
        CHECK(h2.torsion.empty());
        auto h0 = homology(cx, 0);
        CHECK(h0.free_rank == 1);
        CHECK(h0.torsion.empty());
    }
}

TEST_CASE("homology needs one degree of headroom") {
    auto cx = normalized_chains(nerve(tautological_cat(cyclic_group(2)), 2));
    CHECK_NOTHROW(homology(cx, 1));
    CHECK_THROWS_WITH_AS(homology(cx, 2),
                         doctest::Contains("TruncationTooShallow"), Error);
}

TEST_CASE("homology report strings") {
    CHECK(homology_to_string(HomologyResult{1, {}}) == "Z");
    CHECK(homology_to_string(HomologyResult{0, {2}}) == "Z/2");
    CHECK(homology_to_string(HomologyResult{2, {2, 4}}) == "Z^2 + Z/2 + Z/4");
    CHECK(homology_to_string(HomologyResult{0, {}}) == "0");
}

TEST_CASE("functors induce simplicial maps of nerves") {
    auto z4 = cyclic_group(4), z2 = cyclic_group(2);
    auto quotient = make_hom(z4, z2, {0, 1, 0, 1});
    {
        auto src = nerve(tautological_cat(z4), 3);
        auto dst = nerve(tautological_cat(z2), 3);
        CHECK_NOTHROW(induced_simplicial_map(
            lift_hom(quotient, Flavor::Tautological), src, dst));
    }
    {
        auto src = nerve(simplicial_cat(z4).cat, 2);
        auto dst = nerve(simplicial_cat(z2).cat, 2);
        CHECK_NOTHROW(induced_simplicial_map(
            lift_hom(quotient, Flavor::Simplicial), src, dst));
    }
    {
        auto src = nerve(discrete_cat(z4).cat, 2);
        auto dst = nerve(discrete_cat(z2).cat, 2);
        CHECK_NOTHROW(induced_simplicial_map(lift_hom(quotient, Flavor::Discrete),
                                             src, dst));
    }
}

TEST_CASE("bar construction and the quotient EG/G = BG") {
    for (const auto& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                          direct_product(cyclic_group(2), cyclic_group(2)),
                          dihedral_group(3)}) {
        auto bar = bar_spaces(g, 2);
        CHECK(bar.quotient_verified);
        for (int n = 0; n <= 2; ++n) {
            CHECK(bar.eg.count(n) ==
                  static_cast<int>(saturating_pow(g.order, n + 1)));
            CHECK(bar.bg.count(n) ==
                  static_cast<int>(saturating_pow(g.order, n)));
        }
    }
    auto bar = bar_spaces(cyclic_group(2), 3);
    CHECK(bar.quotient_verified);
}

TEST_CASE("nerve size limit") {
    CHECK_THROWS_AS(nerve(simplicial_cat(dihedral_group(3)).cat, 4, 100),
                    SizeLimitError);
}
