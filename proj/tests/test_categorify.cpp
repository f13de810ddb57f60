#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "catkit/categorify.hpp"
#include "catkit/group.hpp"

using namespace catkit;

TEST_CASE("tautological categorification") {
    auto z2 = cyclic_group(2);
    auto c = tautological_cat(z2);
    CHECK(c.object_count == 1);
    CHECK(c.morphism_count() == 2);
    CHECK(c.compose(1, 1) == 0); // the non-identity morphism is self-inverse
    CHECK(is_groupoid(c));

    auto z3 = cyclic_group(3);
    CHECK(tautological_cat(z3).compose(1, 1) == 2);

    auto s3 = dihedral_group(3);
    auto cs3 = tautological_cat(s3);
    CHECK(cs3.morphism_count() == 6);
    CHECK(cs3.comp == s3.table);
}

TEST_CASE("discrete categorification") {
    auto z2 = cyclic_group(2);
    auto [c, m] = discrete_cat(z2);
    CHECK(c.object_count == 2);
    CHECK(c.morphism_count() == 2);
    CHECK(m.tensor_obj == std::vector<int>{0, 1, 1, 0});
    CHECK(check_monoidal(c, m));

    auto z4 = cyclic_group(4);
    auto [c4, m4] = discrete_cat(z4);
    CHECK(c4.morphism_count() == 4);
    auto res = pi0(c4, &m4);
    REQUIRE(res.monoid_table.has_value());
    CHECK(*res.monoid_table == z4.table);
}

TEST_CASE("simplicial categorification") {
    auto z2 = cyclic_group(2);
    auto [c, m] = simplicial_cat(z2);
    CHECK(c.morphism_count() == 4);
    CHECK(is_groupoid(c));
    CHECK(pi0(c).class_count == 1);

    auto z3 = cyclic_group(3);
    auto [c3, m3] = simplicial_cat(z3);
    // (0->1) then (1->2) composes to (0->2)
    int m01 = 0 * 3 + 1, m12 = 1 * 3 + 2, m02 = 0 * 3 + 2;
    CHECK(c3.compose(m12, m01) == m02);

    auto s3 = dihedral_group(3);
    auto [cs, ms] = simplicial_cat(s3);
    CHECK(cs.morphism_count() == 36);
    CHECK(check_monoidal(cs, ms));
}

TEST_CASE("lift_hom across all flavors") {
    auto z4 = cyclic_group(4), z2 = cyclic_group(2), z3 = cyclic_group(3);

    for (Flavor fl :
         {Flavor::Tautological, Flavor::Discrete, Flavor::Simplicial}) {
        Functor id = lift_hom(identity_hom(z4), fl);
        CHECK(id.obj_map == identity_functor(id.source).obj_map);
        CHECK(id.mor_map == identity_functor(id.source).mor_map);
    }

    auto quotient = make_hom(z4, z2, {0, 1, 0, 1});
    Functor taut = lift_hom(quotient, Flavor::Tautological);
    CHECK(taut.mor_map == std::vector<int>{0, 1, 0, 1});
    CHECK(check_functor(taut));

    auto trivial = make_hom(z2, z3, {0, 0});
    Functor simp = lift_hom(trivial, Flavor::Simplicial);
    CHECK(check_functor(simp));
    for (int v : simp.obj_map) CHECK(v == 0);
    for (int v : simp.mor_map) CHECK(v == 0); // the unique 0 -> 0 morphism

    GroupHom not_a_hom{z2, z3, {0, 1}};
    CHECK_THROWS_WITH_AS(lift_hom(not_a_hom, Flavor::Discrete),
                         doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("lift_hom: discrete/simplicial lifts strictly preserve tensors") {
    auto z4 = cyclic_group(4), z2 = cyclic_group(2);
    auto f = make_hom(z4, z2, {0, 1, 0, 1});
    {
        auto src = discrete_cat(z4);
        auto dst = discrete_cat(z2);
        Functor F = lift_hom(f, Flavor::Discrete);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(F.obj_map[tensor_objects(src.cat, src.mon, a, b)] ==
                      tensor_objects(dst.cat, dst.mon, F.obj_map[a],
                                     F.obj_map[b]));
    }
    {
        auto src = simplicial_cat(z4);
        auto dst = simplicial_cat(z2);
        Functor F = lift_hom(f, Flavor::Simplicial);
        for (int a = 0; a < src.cat.morphism_count(); ++a)
            for (int b = 0; b < src.cat.morphism_count(); ++b)
                CHECK(F.mor_map[tensor_morphisms(src.cat, src.mon, a, b)] ==
                      tensor_morphisms(dst.cat, dst.mon, F.mor_map[a],
                                       F.mor_map[b]));
    }
}

TEST_CASE("functoriality of the lifts") {
    auto z4 = cyclic_group(4), z2 = cyclic_group(2);
    auto quotient = make_hom(z4, z2, {0, 1, 0, 1});
    auto inclusion = make_hom(z2, z4, {0, 2});
    auto composite = compose_homs(quotient, inclusion); // z2 -> z2
    for (Flavor fl :
         {Flavor::Tautological, Flavor::Discrete, Flavor::Simplicial}) {
        Functor lhs = lift_hom(composite, fl);
        Functor rhs =
            compose_functors(lift_hom(quotient, fl), lift_hom(inclusion, fl));
        CHECK(lhs.obj_map == rhs.obj_map);
        CHECK(lhs.mor_map == rhs.mor_map);
    }
}

TEST_CASE("discrete categorification is faithful and full on homs") {
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto homs = enumerate_homs(z2, z4);
    std::set<std::vector<int>> images;
    for (const auto& h : homs)
        images.insert(lift_hom(h, Flavor::Discrete).obj_map);
    CHECK(images.size() == homs.size()); // faithful

    // fullness: strict monoidal endofunctors of D_G correspond to homs
    auto src = discrete_cat(z2);
    auto dst = discrete_cat(z4);
    int found = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<int> obj = {a, b};
            Functor cand{src.cat, dst.cat, obj, obj};
            if (!check_functor(cand)) continue;
            bool strict = true;
            for (int x = 0; x < 2 && strict; ++x)
                for (int y = 0; y < 2 && strict; ++y)
                    if (cand.obj_map[tensor_objects(src.cat, src.mon, x, y)] !=
                        tensor_objects(dst.cat, dst.mon, cand.obj_map[x],
                                       cand.obj_map[y]))
                        strict = false;
            if (!strict) continue;
            ++found;
            CHECK(check_hom(GroupHom{z2, z4, cand.obj_map}));
        }
    CHECK(found == static_cast<int>(homs.size()));
}

TEST_CASE("contraction homotopy") {
    auto z2 = cyclic_group(2);
    auto eta = contraction_homotopy(z2, 0);
    CHECK(eta.components == std::vector<int>{0 * 2 + 0, 0 * 2 + 1});
    CHECK(check_natural(eta));

    auto s3 = dihedral_group(3);
    auto eta3 = contraction_homotopy(s3, 3);
    CHECK(eta3.components.size() == 6);
    CHECK(check_natural(eta3));
    for (int comp : eta3.components)
        CHECK(inverse_morphism(eta3.source.target, comp).has_value());

    for (int base = 0; base < 4; ++base)
        CHECK(check_natural(contraction_homotopy(cyclic_group(4), base)));
}

TEST_CASE("covering transformation") {
    auto z3 = cyclic_group(3);
    Functor r = covering_transformation(z3);
    CHECK(check_functor(r));
    CHECK(r.mor_map[1 * 3 + 2] == 1); // (1 -> 2) |-> 2 - 1 = 1

    auto s3 = dihedral_group(3);
    Functor rs = covering_transformation(s3);
    CHECK(check_functor(rs));
    for (int x = 0; x < 6; ++x) CHECK(rs.mor_map[x * 6 + x] == 0);
    // composite chains map to products of images
    const auto& cat = rs.source;
    for (int m1 = 0; m1 < cat.morphism_count(); ++m1)
        for (int m2 = 0; m2 < cat.morphism_count(); ++m2) {
            if (cat.tgt(m1) != cat.src(m2)) continue;
            CHECK(rs.mor_map[cat.compose(m2, m1)] ==
                  s3.mul(rs.mor_map[m2], rs.mor_map[m1]));
        }
}

TEST_CASE("covering transformation is natural in the group") {
    auto z4 = cyclic_group(4), z2 = cyclic_group(2);
    auto s3 = dihedral_group(3);
    std::vector<GroupHom> test_homs = {
        make_hom(z4, z2, {0, 1, 0, 1}),
        make_hom(z2, s3, {0, 3}),
        identity_hom(z2),
    };
    for (const auto& f : test_homs) {
        Functor lhs = compose_functors(lift_hom(f, Flavor::Tautological),
                                       covering_transformation(f.source));
        Functor rhs = compose_functors(covering_transformation(f.target),
                                       lift_hom(f, Flavor::Simplicial));
        CHECK(lhs.obj_map == rhs.obj_map);
        CHECK(lhs.mor_map == rhs.mor_map);
    }
}

TEST_CASE("biequivariance of the covering transformation") {
    CHECK(check_biequivariance(cyclic_group(4)));
    CHECK(check_biequivariance(dihedral_group(3)));
    for (int n = 1; n <= 6; ++n) CHECK(check_biequivariance(cyclic_group(n)));

    // the left-action identity reduces to equality for abelian groups
    auto z4 = cyclic_group(4);
    auto [s, mon] = simplicial_cat(z4);
    Functor r = covering_transformation(z4);
    for (int a = 0; a < 4; ++a)
        for (int m = 0; m < s.morphism_count(); ++m)
            CHECK(r.mor_map[tensor_morphisms(s, mon, s.identity_at[a], m)] ==
                  r.mor_map[m]);
}

TEST_CASE("tautological homotopy classes agree with hom conjugacy classes") {
    auto z2 = cyclic_group(2);
    auto s3 = dihedral_group(3);
    auto classes = hom_conjugacy_classes(z2, s3);
    for (std::size_t i = 0; i < classes.homs.size(); ++i)
        for (std::size_t j = 0; j < classes.homs.size(); ++j) {
            bool same_class = false;
            for (const auto& cls : classes.classes) {
                bool has_i = std::find(cls.begin(), cls.end(),
                                       static_cast<int>(i)) != cls.end();
                bool has_j = std::find(cls.begin(), cls.end(),
                                       static_cast<int>(j)) != cls.end();
                if (has_i && has_j) same_class = true;
            }
            auto eta = functors_homotopic(
                lift_hom(classes.homs[i], Flavor::Tautological),
                lift_hom(classes.homs[j], Flavor::Tautological));
            CHECK(eta.has_value() == same_class);
        }
}
