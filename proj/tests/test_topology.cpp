#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/topology.hpp"

using namespace catkit;

namespace {

FiniteSpace sierpinski() { return make_space(2, {{}, {0}, {0, 1}}); }
FiniteSpace discrete_two() { return make_space(2, {{}, {0}, {1}, {0, 1}}); }

} // namespace

TEST_CASE("make_space validates topologies") {
    CHECK_NOTHROW(sierpinski());
    CHECK_NOTHROW(discrete_two());
    CHECK_NOTHROW(make_space(1, {{}, {0}}));

    CHECK_THROWS_WITH_AS(make_space(2, {{0}, {0, 1}}),
                         doctest::Contains("NotATopology"), Error);
    // {0} and {1} open but their union {0,1} missing
    CHECK_THROWS_WITH_AS(make_space(3, {{}, {0}, {1}, {0, 1, 2}}),
                         doctest::Contains("NotATopology"), Error);
}

TEST_CASE("open set category of the Sierpinski space") {
    auto osc = open_set_category(sierpinski());
    const auto& c = osc.monoidal.cat;
    CHECK(c.object_count == 3);
    CHECK(c.morphism_count() == 6); // 3 identities + 3 inclusions
    CHECK(is_thin(c));
    CHECK(check_monoidal(c, osc.monoidal.mon));
    CHECK(osc.monoidal.mon.unit == 2); // X is the last open in sorted order

    // tensor is intersection, unital at X
    for (int a = 0; a < 3; ++a) {
        CHECK(tensor_objects(c, osc.monoidal.mon, a, 2) == a);
        CHECK(tensor_objects(c, osc.monoidal.mon, 2, a) == a);
    }
}

TEST_CASE("open set category of the discrete two-point space") {
    auto osc = open_set_category(discrete_two());
    const auto& c = osc.monoidal.cat;
    CHECK(c.object_count == 4);
    // {0} and {1} intersect in the empty set
    int a = osc.space.open_index(1), b = osc.space.open_index(2);
    int empty = osc.space.open_index(0);
    CHECK(tensor_objects(c, osc.monoidal.mon, a, b) == empty);
    CHECK(is_thin(c));
    CHECK(check_monoidal(c, osc.monoidal.mon));
}

TEST_CASE("preimage functors") {
    auto sier = sierpinski();
    auto disc = discrete_two();

    // identity map is a functor
    auto id = preimage_functor({0, 1}, sier, sier);
    CHECK(check_functor(id));
    for (std::size_t i = 0; i < id.obj_map.size(); ++i)
        CHECK(id.obj_map[i] == static_cast<int>(i));

    // constant map onto the open point of Sierpinski
    auto constant = preimage_functor({0, 0}, disc, sier);
    CHECK(check_functor(constant));
    // preimage of {} is {}, of {0} and X is the whole source
    CHECK(constant.obj_map[0] == disc.open_index(0));
    CHECK(constant.obj_map[1] == disc.open_index(3));
    CHECK(constant.obj_map[2] == disc.open_index(3));

    // the identity point map from Sierpinski to the discrete space is not
    // continuous: the preimage of {1} is {1}, closed in Sierpinski
    CHECK_THROWS_WITH_AS(preimage_functor({0, 1}, sier, disc),
                         doctest::Contains("NotContinuous"), Error);

    // preimages preserve intersections on the nose
    auto osc_src = open_set_category(sier).monoidal;
    auto osc_dst = open_set_category(disc).monoidal;
    auto f = preimage_functor({0, 0}, disc, sier);
    for (int a = 0; a < osc_src.cat.object_count; ++a)
        for (int b = 0; b < osc_src.cat.object_count; ++b)
            CHECK(f.obj_map[tensor_objects(osc_src.cat, osc_src.mon, a, b)] ==
                  tensor_objects(osc_dst.cat, osc_dst.mon, f.obj_map[a],
                                 f.obj_map[b]));
}

TEST_CASE("contravariant functoriality of preimages") {
    auto sier = sierpinski();
    auto three = make_space(3, {{}, {0}, {0, 1}, {0, 1, 2}});
    // f: three -> sier collapsing 1,2 to the closed point; g = id on sier
    std::vector<int> f = {0, 1, 1};
    std::vector<int> g = {0, 1};
    // (g o f)^-1 = f^-1 o g^-1
    auto composite = preimage_functor(f, three, sier); // g is the identity
    auto lhs = compose_functors(preimage_functor(f, three, sier),
                                preimage_functor(g, sier, sier));
    CHECK(lhs.obj_map == composite.obj_map);
    CHECK(lhs.mor_map == composite.mor_map);
}

TEST_CASE("covers and refinements") {
    auto sier = sierpinski();
    auto v = cover_from_opens(sier, {{0}, {0, 1}});
    CHECK(v.is_cover);
    auto u = cover_from_opens(sier, {{0, 1}});
    CHECK(u.is_cover);

    // V refines U with the constant map
    auto r = refinement(v, u);
    REQUIRE(r.has_value());
    CHECK(r->phi == std::vector<int>{0, 0});

    // identity refinement
    auto rr = refinement(v, v);
    REQUIRE(rr.has_value());
    CHECK(rr->phi == std::vector<int>{0, 1});
    auto cat = open_set_category(sier).monoidal.cat;
    for (std::size_t j = 0; j < rr->inclusions.size(); ++j)
        CHECK(cat.is_identity(rr->inclusions[j]));

    // U = {{0}} does not admit a refinement map from V' = {X}
    auto not_cover = cover_from_opens(sier, {{0}});
    CHECK_FALSE(not_cover.is_cover);
    auto whole = cover_from_opens(sier, {{0, 1}});
    CHECK_FALSE(refinement(whole, not_cover).has_value());

    CHECK_THROWS_AS(cover_from_opens(sier, {{0}, {0}}), Error);
    CHECK_THROWS_AS(cover_from_opens(sier, {{1}}), Error);
}

TEST_CASE("refinement is reflexive and transitive") {
    auto disc = discrete_two();
    auto a = cover_from_opens(disc, {{0}, {1}});
    auto b = cover_from_opens(disc, {{0}, {1}, {0, 1}});
    auto c = cover_from_opens(disc, {{0, 1}});

    CHECK(refinement(a, a).has_value());
    CHECK(refinement(b, b).has_value());
    REQUIRE(refinement(a, b).has_value());
    REQUIRE(refinement(b, c).has_value());
    CHECK(refinement(a, c).has_value());
}
