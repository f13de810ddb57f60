#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "catkit/cohomology.hpp"
#include "catkit/extension.hpp"

using namespace catkit;

namespace {

Cochain random_cochain(const FiniteGroup& g, const CoefficientModule& m,
                       int degree, std::mt19937& rng) {
    Cochain c = zero_cochain(g, degree);
    std::uniform_int_distribution<int> dist(0, m.size() - 1);
    // fill only identity-free tuples to stay normalized
    std::vector<int> args(degree, 1);
    std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t idx) {
        if (pos == degree) {
            c.values[idx] = dist(rng);
            return;
        }
        for (int v = 1; v < g.order; ++v) rec(pos + 1, idx * g.order + v);
    };
    if (degree == 0)
        c.values[0] = dist(rng);
    else
        rec(0, 0);
    return c;
}

} // namespace

TEST_CASE("coefficient module arithmetic") {
    auto z6 = cyclic_group(6);
    auto m = trivial_module(z6, {2, 3});
    CHECK(m.size() == 6);
    CHECK(m.index_of({1, 2}) == 5);
    CHECK(m.tuple_of(5) == std::vector<int>{1, 2});
    CHECK(m.add(m.index_of({1, 1}), m.index_of({1, 2})) == m.index_of({0, 0}));
    CHECK(m.neg(m.index_of({1, 1})) == m.index_of({1, 2}));
    CHECK(m.scale(2, m.index_of({1, 1})) == m.index_of({0, 2}));

    // the derived group table matches nested direct products
    CHECK(group_from_module(m) ==
          direct_product(cyclic_group(2), cyclic_group(3)));
}

TEST_CASE("module_from_matrices validates") {
    auto z2 = cyclic_group(2);
    // inversion on Z/4
    auto m = module_from_matrices(z2, {4}, {{{1}}, {{3}}});
    CHECK(m.act(1, 1) == 3);
    CHECK(m.act(1, 2) == 2);
    CHECK_FALSE(m.action_is_trivial());

    // x -> 2x on Z/4 is not bijective
    CHECK_THROWS_AS(module_from_matrices(z2, {4}, {{{1}}, {{2}}}), Error);
    // inversion is not an action of Z/3 (order 2 vs 3)
    CHECK_THROWS_AS(
        module_from_matrices(cyclic_group(3), {4}, {{{1}}, {{3}}, {{1}}}),
        Error);
}

TEST_CASE("coboundary formula on the standard examples") {
    auto z2 = cyclic_group(2);
    auto m = trivial_module(z2, {2});

    Cochain zero = zero_cochain(z2, 2);
    CHECK(coboundary(z2, m, zero).is_zero());

    // 1-cochain gamma with gamma(1) = 1: (d gamma)(1,1) = 1 + 1 - 0 = 0
    Cochain gamma = zero_cochain(z2, 1);
    gamma.values[1] = 1;
    Cochain dgamma = coboundary(z2, m, gamma);
    CHECK(dgamma.at({1, 1}) == 0);
    CHECK(dgamma.is_zero());
}

TEST_CASE("d after d is zero") {
    std::mt19937 rng(42);
    auto z4 = cyclic_group(4);
    auto m = trivial_module(z4, {2});
    for (int degree = 0; degree <= 2; ++degree)
        for (int trial = 0; trial < 10; ++trial) {
            Cochain c = random_cochain(z4, m, degree, rng);
            CHECK(coboundary(z4, m, coboundary(z4, m, c)).is_zero());
        }

    // with a nontrivial action as well
    auto z2 = cyclic_group(2);
    auto act = module_from_matrices(z2, {3}, {{{1}}, {{2}}});
    for (int degree = 0; degree <= 2; ++degree)
        for (int trial = 0; trial < 10; ++trial) {
            Cochain c = random_cochain(z2, act, degree, rng);
            CHECK(coboundary(z2, act, coboundary(z2, act, c)).is_zero());
        }
}

TEST_CASE("coboundaries of normalized cochains stay normalized") {
    std::mt19937 rng(7);
    auto z3 = cyclic_group(3);
    auto m = trivial_module(z3, {4});
    for (int degree = 0; degree <= 3; ++degree)
        for (int trial = 0; trial < 5; ++trial) {
            Cochain c = random_cochain(z3, m, degree, rng);
            CHECK(is_normalized(c));
            CHECK(is_normalized(coboundary(z3, m, c)));
        }
}

TEST_CASE("cohomology of small groups: both paths agree with known answers") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);

    struct Case {
        int n;
        FiniteGroup g;
        CoefficientModule m;
        std::vector<long long> expected;
    };
    std::vector<Case> cases;
    cases.push_back({2, z2, trivial_module(z2, {2}), {2}});
    cases.push_back({2, z3, trivial_module(z3, {3}), {3}});
    cases.push_back({2, z3, trivial_module(z3, {2}), {}});
    cases.push_back({3, z2, trivial_module(z2, {2}), {2}});
    cases.push_back({1, z2, trivial_module(z2, {2}), {2}});
    cases.push_back({0, z2, trivial_module(z2, {2}), {2}});

    for (const auto& c : cases) {
        auto linear = cohomology_group(c.n, c.g, c.m);
        auto brute = cohomology_group_bruteforce(c.n, c.g, c.m);
        CHECK(linear.invariant_factors == c.expected);
        CHECK(brute.invariant_factors == c.expected);
        CHECK(linear.cocycle_count == brute.cocycle_count);
        CHECK(linear.coboundary_count == brute.coboundary_count);
    }
}

TEST_CASE("frozen cocycle and coboundary counts") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);

    auto r = cohomology_group(2, z2, trivial_module(z2, {2}));
    CHECK(r.cocycle_count == 2);
    CHECK(r.coboundary_count == 1);

    r = cohomology_group(2, z3, trivial_module(z3, {3}));
    CHECK(r.cocycle_count == 9);
    CHECK(r.coboundary_count == 3);

    r = cohomology_group(3, z2, trivial_module(z2, {2}));
    CHECK(r.cocycle_count == 2);
    CHECK(r.coboundary_count == 1);
}

TEST_CASE("|Z| = |B| * |H| on groups of order <= 4") {
    std::vector<FiniteGroup> groups = {
        cyclic_group(2), cyclic_group(3), cyclic_group(4),
        direct_product(cyclic_group(2), cyclic_group(2))};
    for (const auto& g : groups)
        for (int n = 0; n <= 2; ++n) {
            auto m = trivial_module(g, {2});
            auto linear = cohomology_group(n, g, m);
            auto brute = cohomology_group_bruteforce(n, g, m);
            CHECK(linear.cocycle_count == brute.cocycle_count);
            CHECK(linear.coboundary_count == brute.coboundary_count);
            BigInt h = 1;
            for (long long d : linear.invariant_factors) h *= d;
            CHECK(linear.cocycle_count == linear.coboundary_count * h);
        }
}

TEST_CASE("cohomology with a nontrivial action") {
    auto z2 = cyclic_group(2);
    auto inv3 = module_from_matrices(z2, {3}, {{{1}}, {{2}}});
    for (int n = 0; n <= 2; ++n) {
        auto linear = cohomology_group(n, z2, inv3);
        auto brute = cohomology_group_bruteforce(n, z2, inv3);
        CHECK(linear.invariant_factors == brute.invariant_factors);
        CHECK(linear.cocycle_count == brute.cocycle_count);
    }
    // H^1(Z/2, Z/3 with inversion) = 0 and H^2 = 0
    CHECK(cohomology_group(1, z2, inv3).invariant_factors.empty());
    CHECK(cohomology_group(2, z2, inv3).invariant_factors.empty());

    // H^2(Z/2, Z/4 with inversion) = Z/2
    auto inv4 = module_from_matrices(z2, {4}, {{{1}}, {{3}}});
    auto linear = cohomology_group(2, z2, inv4);
    auto brute = cohomology_group_bruteforce(2, z2, inv4);
    CHECK(linear.invariant_factors == std::vector<long long>{2});
    CHECK(brute.invariant_factors == std::vector<long long>{2});
}

TEST_CASE("twisted cocycle law matches degree-2 coboundary for abelian kernels") {
    auto z2 = cyclic_group(2);
    auto inv3 = module_from_matrices(z2, {3}, {{{1}}, {{2}}});
    auto n_group = group_from_module(inv3);
    QuasiAction l{z2, n_group, inv3.action};

    // all normalized 2-cochain tables
    for (int t = 0; t < 3; ++t) {
        Cochain c = zero_cochain(z2, 2);
        c.values[1 * 2 + 1] = t;
        FactorSet f{z2, n_group, c.values};
        CHECK(check_twisted_cocycle(f, l) == coboundary(z2, inv3, c).is_zero());
    }

    auto z3 = cyclic_group(3);
    auto m33 = trivial_module(z3, {3});
    auto n33 = group_from_module(m33);
    QuasiAction l33{z3, n33, m33.action};
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Cochain c = random_cochain(z3, m33, 2, rng);
        FactorSet f{z3, n33, c.values};
        CHECK(check_twisted_cocycle(f, l33) ==
              coboundary(z3, m33, c).is_zero());
    }
}

TEST_CASE("scaled discrete categorification and the pentagon") {
    auto z2 = cyclic_group(2);
    auto m = trivial_module(z2, {2});

    auto trivial = scaled_discrete_cat(z2, m, zero_cochain(z2, 3));
    CHECK(check_monoidal(trivial.cat, trivial.mon));

    auto report = associators(z2, m);
    CHECK(report.pentagon_valid.size() == 2);
    CHECK(report.cocycle_count == 2);
    CHECK(report.class_count == 2);
    CHECK(report.matches_cocycles);

    auto m3 = trivial_module(z2, {3});
    auto report3 = associators(z2, m3);
    CHECK(report3.pentagon_valid.size() == 1);
    CHECK(report3.pentagon_valid[0].is_zero());
    CHECK(report3.class_count == 1);
    CHECK(report3.matches_cocycles);
}

TEST_CASE("associator enumeration is deterministic across thread counts") {
    auto z2 = cyclic_group(2);
    auto m = trivial_module(z2, {2});
    auto a = associators(z2, m, kDefaultMaxCandidates, 1);
    auto b = associators(z2, m, kDefaultMaxCandidates, 4);
    REQUIRE(a.pentagon_valid.size() == b.pentagon_valid.size());
    for (std::size_t i = 0; i < a.pentagon_valid.size(); ++i)
        CHECK(a.pentagon_valid[i].values == b.pentagon_valid[i].values);
}

TEST_CASE("size limits") {
    auto z4 = cyclic_group(4);
    auto m = trivial_module(z4, {4});
    CHECK_THROWS_AS(cohomology_group_bruteforce(3, z4, m, 1000), SizeLimitError);
    CHECK_THROWS_AS(associators(z4, m, 100), SizeLimitError);
}
