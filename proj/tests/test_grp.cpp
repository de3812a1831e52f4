#include "doctest.h"
#include "equilift/grp.hpp"

#include <algorithm>
#include <set>

using namespace equilift;
using namespace equilift::grp;

namespace {

std::vector<int> class_sizes(const std::vector<std::vector<Elt>>& classes) {
    std::vector<int> sizes;
    for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("cyclic groups") {
    auto z5 = FiniteGroup::cyclic(5);
    CHECK(z5.order() == 5);
    CHECK(z5.identity() == 0);
    CHECK(z5.mul(3, 4) == 2);
    CHECK(z5.inv(2) == 3);
    CHECK(z5.is_abelian());
    CHECK(z5.element_order(1) == 5);
    CHECK(z5.name(3) == "3");
    CHECK(z5.display_name() == "Z5");
}

TEST_CASE("symmetric group S3 structure") {
    auto s3 = FiniteGroup::symmetric(3);
    REQUIRE(s3.order() == 6);
    // lexicographic permutation order fixes the element numbering
    CHECK(s3.name(0) == "e");
    CHECK(s3.name(1) == "(23)");
    CHECK(s3.name(2) == "(12)");
    CHECK(s3.name(3) == "(123)");
    CHECK(s3.name(4) == "(132)");
    CHECK(s3.name(5) == "(13)");
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.element_order(3) == 3);
    CHECK(s3.element_order(1) == 2);
    // (12)(23) = (123): apply (23) then (12)
    CHECK(s3.mul(2, 1) == 3);
    CHECK(s3.mul(1, 2) == 4);
    CHECK(s3.inv(3) == 4);
    CHECK(s3.center() == std::vector<Elt>{0});
}

TEST_CASE("quaternion group") {
    auto q8 = FiniteGroup::quaternion8();
    REQUIRE(q8.order() == 8);
    const Elt one = 0, minus_one = 1, i = 2, j = 4, k = 6;
    CHECK(q8.mul(i, i) == minus_one);
    CHECK(q8.mul(j, j) == minus_one);
    CHECK(q8.mul(k, k) == minus_one);
    CHECK(q8.mul(i, j) == k);
    CHECK(q8.mul(j, i) == q8.inv(k));
    CHECK(q8.element_order(minus_one) == 2);
    CHECK(q8.element_order(i) == 4);
    CHECK(q8.center() == std::vector<Elt>{one, minus_one});
    CHECK(q8.name(7) == "-k");
}

TEST_CASE("products and the named constructor") {
    auto v4 = FiniteGroup::named("V4");
    CHECK(v4.order() == 4);
    CHECK(v4.is_abelian());
    for (Elt x = 0; x < 4; ++x) CHECK(v4.mul(x, x) == 0);

    auto z6 = FiniteGroup::named("Z2xZ3");
    CHECK(z6.order() == 6);
    CHECK(z6.name(4) == "(1,1)");
    CHECK(isomorphism(z6, FiniteGroup::cyclic(6)).has_value());
    CHECK_FALSE(isomorphism(FiniteGroup::named("Z2xZ2"), FiniteGroup::cyclic(4)).has_value());

    auto s3z2 = FiniteGroup::named("S3xZ2");
    CHECK(s3z2.order() == 12);

    CHECK_THROWS_AS(FiniteGroup::named("F99"), input_error);
    CHECK_THROWS_AS(FiniteGroup::named("S5"), input_error);
    CHECK_THROWS_AS(FiniteGroup::named(""), input_error);
}

TEST_CASE("table validation rejects junk") {
    // not associative: x*y = x (left projection) has no identity
    std::vector<std::vector<Elt>> proj = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(proj), input_error);
    std::vector<std::vector<Elt>> ragged = {{0, 1}, {1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(ragged), input_error);
    std::vector<std::vector<Elt>> oob = {{0, 1}, {1, 5}};
    CHECK_THROWS_AS(FiniteGroup::from_table(oob), input_error);
    // valid table round-trips
    auto z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.name(0) == "e");
}

TEST_CASE("centralizers") {
    auto s3 = FiniteGroup::symmetric(3);
    // elements commuting with (123)
    CHECK(centralizer(s3, {3}) == std::vector<Elt>{0, 3, 4});
    // elements commuting with (12)
    CHECK(centralizer(s3, {2}) == std::vector<Elt>{0, 2});
    // centralizer of everything = center
    std::vector<Elt> all = {0, 1, 2, 3, 4, 5};
    CHECK(centralizer(s3, all) == s3.center());

    auto q8 = FiniteGroup::quaternion8();
    CHECK(centralizer(q8, {2}) == std::vector<Elt>{0, 1, 2, 3});
}

TEST_CASE("conjugacy classes") {
    auto s3 = FiniteGroup::symmetric(3);
    auto cls = conjugacy_classes(s3);
    CHECK(class_sizes(cls) == std::vector<int>{1, 2, 3});
    CHECK(cls[0] == std::vector<Elt>{0});

    auto q8 = FiniteGroup::quaternion8();
    CHECK(class_sizes(conjugacy_classes(q8)) == std::vector<int>{1, 1, 2, 2, 2});

    auto s4 = FiniteGroup::symmetric(4);
    CHECK(class_sizes(conjugacy_classes(s4)) == std::vector<int>{1, 3, 6, 6, 8});

    // classes partition the group
    std::set<Elt> covered;
    for (const auto& c : conjugacy_classes(s4))
        for (Elt x : c) covered.insert(x);
    CHECK(static_cast<int>(covered.size()) == s4.order());
}

TEST_CASE("automorphism groups") {
    SUBCASE("Z3: one nontrivial automorphism, all outer") {
        auto a = automorphism_group(FiniteGroup::cyclic(3));
        CHECK(a.group.order() == 2);
        CHECK(a.inner == std::vector<int>{0});
        CHECK(a.outer_classes.size() == 2);
    }
    SUBCASE("S3 is complete: Aut = Inn") {
        auto a = automorphism_group(FiniteGroup::symmetric(3));
        CHECK(a.group.order() == 6);
        CHECK(a.inner.size() == 6);
        CHECK(a.outer_classes.size() == 1);
        CHECK(isomorphism(a.group, FiniteGroup::symmetric(3)).has_value());
    }
    SUBCASE("V4 has symmetric automorphism group") {
        auto a = automorphism_group(FiniteGroup::klein_four());
        CHECK(a.group.order() == 6);
        CHECK(a.inner.size() == 1);
        CHECK(isomorphism(a.group, FiniteGroup::symmetric(3)).has_value());
    }
    SUBCASE("Q8: full symmetric group on the axes") {
        auto q8 = FiniteGroup::quaternion8();
        auto a = automorphism_group(q8);
        CHECK(a.group.order() == 24);
        CHECK(a.inner.size() == 4);
        CHECK(a.outer_classes.size() == 6);
        CHECK(isomorphism(a.group, FiniteGroup::symmetric(4)).has_value());
    }
    SUBCASE("counting identities hold") {
        for (const char* name : {"Z4", "V4", "S3", "Q8"}) {
            auto g = FiniteGroup::named(name);
            auto a = automorphism_group(g);
            CHECK(a.group.order() ==
                  static_cast<int>(a.inner.size() * a.outer_classes.size()));
            CHECK(static_cast<int>(a.inner.size()) ==
                  g.order() / static_cast<int>(g.center().size()));
            // every recorded permutation really is an automorphism
            for (const auto& p : a.perms) {
                for (Elt x = 0; x < g.order(); ++x)
                    for (Elt y = 0; y < g.order(); ++y)
                        REQUIRE(p[g.mul(x, y)] == g.mul(p[x], p[y]));
            }
        }
    }
    SUBCASE("worker count does not change the result") {
        auto a1 = automorphism_group(FiniteGroup::quaternion8(), 1);
        auto a4 = automorphism_group(FiniteGroup::quaternion8(), 4);
        CHECK(a1.perms == a4.perms);
        CHECK(a1.inner == a4.inner);
        CHECK(a1.outer_classes == a4.outer_classes);
    }
}

TEST_CASE("subgroups and closure") {
    auto z6 = FiniteGroup::cyclic(6);
    auto subs = z6.subgroups();
    REQUIRE(subs.size() == 4);
    CHECK(subs[0] == std::vector<Elt>{0});
    CHECK(subs[1] == std::vector<Elt>{0, 3});
    CHECK(subs[2] == std::vector<Elt>{0, 2, 4});
    CHECK(subs[3].size() == 6);

    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.subgroups().size() == 6);
    auto q8 = FiniteGroup::quaternion8();
    CHECK(q8.subgroups().size() == 6);
    CHECK(FiniteGroup::klein_four().subgroups().size() == 5);
    CHECK(FiniteGroup::symmetric(4).subgroups().size() == 30);

    CHECK(s3.subgroup_closure({3}) == std::vector<Elt>{0, 3, 4});
    CHECK(s3.contains_subgroup({0, 3, 4}));
    CHECK_FALSE(s3.contains_subgroup({0, 3}));
    CHECK_FALSE(s3.contains_subgroup({3, 4}));

    for (const char* name : {"Z6", "S3", "Q8", "S4"}) {
        auto g = FiniteGroup::named(name);
        auto gens = g.generating_set();
        CHECK(static_cast<int>(g.subgroup_closure(gens).size()) == g.order());
        CHECK(gens.size() <= 3);
    }
}

TEST_CASE("homomorphisms") {
    auto z6 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(6));
    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    auto red = Hom::make(z6, z3, {0, 1, 2, 0, 1, 2});
    CHECK(red(4) == 1);
    CHECK(red.kernel() == std::vector<Elt>{0, 3});
    CHECK(red.is_surjective());
    CHECK_FALSE(red.is_injective());
    CHECK_THROWS_AS(Hom::make(z6, z3, {0, 1, 2, 0, 1, 1}), input_error);
    CHECK_THROWS_AS(Hom::make(z6, z3, {0, 1}), input_error);

    auto idh = Hom::identity(z3);
    auto comp = Hom::compose(idh, red);
    CHECK(comp.map == red.map);
}

TEST_CASE("group actions") {
    auto z2 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
    auto swap2 = GAction::make(z2, 2, {{0, 1}, {1, 0}});
    CHECK(swap2.is_free());
    CHECK(swap2.orbit_count() == 1);

    auto fix = GAction::make(z2, 3, {{0, 1, 2}, {0, 2, 1}});
    CHECK_FALSE(fix.is_free());
    CHECK(fix.orbit_count() == 2);
    CHECK(fix.orbits() == std::vector<int>{0, 1, 1});

    // identity must act trivially
    CHECK_THROWS_AS(GAction::make(z2, 2, {{1, 0}, {0, 1}}), input_error);
    // action must respect the group law ((g.g).x = g.(g.x))
    auto z4 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(4));
    CHECK_THROWS_AS(
        GAction::make(z4, 2, {{0, 1}, {1, 0}, {0, 1}, {0, 1}}), input_error);
}

TEST_CASE("subgroup re-indexing") {
    auto q8 = FiniteGroup::quaternion8();
    auto sub = subgroup_as_group(q8, {0, 1});
    CHECK(sub.group.order() == 2);
    CHECK(sub.group.name(1) == "-1");
    CHECK(sub.embedding == std::vector<Elt>{0, 1});
    CHECK(sub.index_in_sub[1] == 1);
    CHECK(sub.index_in_sub[2] == -1);
    CHECK(isomorphism(sub.group, FiniteGroup::cyclic(2)).has_value());
    CHECK_THROWS_AS(subgroup_as_group(q8, {0, 2}), input_error);
}

TEST_CASE("isomorphism scan") {
    CHECK(isomorphism(FiniteGroup::symmetric(4), FiniteGroup::symmetric(4)).has_value());
    CHECK_FALSE(
        isomorphism(FiniteGroup::quaternion8(), FiniteGroup::named("Z2xZ4")).has_value());
    auto iso = isomorphism(FiniteGroup::named("Z3xZ2"), FiniteGroup::cyclic(6));
    REQUIRE(iso.has_value());
    auto a = FiniteGroup::named("Z3xZ2");
    auto b = FiniteGroup::cyclic(6);
    for (Elt x = 0; x < 6; ++x)
        for (Elt y = 0; y < 6; ++y)
            CHECK((*iso)[a.mul(x, y)] == b.mul((*iso)[x], (*iso)[y]));
}
