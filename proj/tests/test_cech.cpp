#include "doctest.h"

#include "equilift/cech.hpp"
#include "equilift/common.hpp"
#include "equilift/grp.hpp"

#include <algorithm>
#include <optional>
#include <vector>

using namespace equilift;
using namespace equilift::cech;

namespace {

NervePtr triangle_filled() { return Nerve::complete(3, true); }

// Checks the gauge identity b_ij = lambda_i a_ij lambda_j^-1 on every pair.
bool gauge_relates(const Cocycle1& a, const Cocycle1& b, const std::vector<Elt>& lam) {
    const auto& n = *a.nerve();
    const auto& h = *a.group();
    for (const auto& [i, j] : n.pairs()) {
        Elt want = h.mul(h.mul(lam[i], a.g(i, j)), h.inv(lam[j]));
        if (b.g(i, j) != want) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("nerve shapes and spanning forest") {
    auto c3 = Nerve::cycle(3);
    CHECK(c3->charts() == 3);
    CHECK(c3->pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(c3->triples().empty());
    CHECK(c3->components() == 1);
    CHECK(c3->tree_pairs() == std::vector<int>{0, 1});
    CHECK(c3->cotree_pairs() == std::vector<int>{2});
    CHECK(c3->tree_parent() == std::vector<int>{-1, 0, 0});
    CHECK(c3->bfs_order() == std::vector<int>{0, 1, 2});

    auto p4 = Nerve::path(4);
    CHECK(p4->pairs().size() == 3);
    CHECK(p4->cotree_pairs().empty());

    auto k4 = Nerve::complete(4, false);
    CHECK(k4->pairs().size() == 6);
    CHECK(k4->cotree_pairs().size() == 3);
    CHECK(k4->four_cliques().empty());

    auto k4t = Nerve::complete(4, true);
    CHECK(k4t->triples().size() == 4);
    REQUIRE(k4t->four_cliques().size() == 1);
    CHECK(k4t->four_cliques()[0] == std::array<int, 4>{0, 1, 2, 3});
    CHECK(Nerve::complete(5, true)->four_cliques().size() == 5);

    CHECK(c3->pair_index(1, 2) == 2);
    CHECK(c3->pair_index(2, 1) == 2);
    CHECK(c3->pair_index(0, 0) == -1);

    auto disc = Nerve::make(4, {{0, 1}, {2, 3}}, {});
    CHECK(disc->components() == 2);
    CHECK(disc->component_of(0) == disc->component_of(1));
    CHECK(disc->component_of(0) != disc->component_of(2));
    CHECK(disc->cotree_pairs().empty());
}

TEST_CASE("nerve validation") {
    CHECK_THROWS_AS(Nerve::make(2, {{0, 0}}, {}), input_error);
    CHECK_THROWS_AS(Nerve::make(2, {{0, 2}}, {}), input_error);
    CHECK_THROWS_AS(Nerve::make(2, {{0, 1}, {1, 0}}, {}), input_error);  // dup
    // Triple whose 2-subsets are not all pairs.
    CHECK_THROWS_AS(Nerve::make(3, {{0, 1}, {0, 2}}, {{{0, 1, 2}}}), input_error);
    // Unordered input is normalized.
    auto n = Nerve::make(3, {{2, 1}, {1, 0}, {2, 0}}, {{{2, 1, 0}}});
    CHECK(n->pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(n->triples() == std::vector<std::array<int, 3>>{{0, 1, 2}});
}

TEST_CASE("transition chains and the composition-rule check") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto nerve = triangle_filled();

    // Pairs (0,1),(0,2),(1,2).  All three overlaps flipped: the walk
    // 2 -> 0 -> 1 -> 2 composes to the nontrivial element.
    auto bad = Chain1::make(nerve, z2, {1, 1, 1});
    CHECK(bad.g(0, 1) == 1);
    CHECK(bad.g(1, 0) == 1);  // own inverse in Z2
    CHECK(bad.g(1, 1) == 0);
    CHECK_THROWS_AS(bad.g(0, 3), input_error);
    auto chk = is_cocycle(bad);
    CHECK(!chk.ok);
    REQUIRE(chk.failing.size() == 1);
    CHECK(chk.failing[0] == std::array<int, 3>{0, 1, 2});
    CHECK(chk.defects[0] == 1);
    CHECK_THROWS_AS(Cocycle1::make(bad), input_error);

    // Flipping only two of the three overlaps closes up.
    auto good = Chain1::make(nerve, z2, {1, 1, 0});
    CHECK(is_cocycle(good).ok);
    auto coc = Cocycle1::make(good);
    CHECK(coc.g(2, 0) == 1);

    // Without the triple there is no condition to violate.
    auto open_chain = Chain1::make(Nerve::cycle(3), z2, {1, 1, 1});
    CHECK(is_cocycle(open_chain).ok);

    CHECK_THROWS_AS(Chain1::make(nerve, z2, {1, 1}), input_error);
    CHECK_THROWS_AS(Chain1::make(nerve, z2, {1, 1, 5}), input_error);
}

TEST_CASE("degree-2 values: orientation and the 4-clique condition") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto z4 = grp::share(grp::FiniteGroup::cyclic(4));

    auto single = Cocycle2::make(triangle_filled(), *z4, {1});
    CHECK(single.c(0, 1, 2) == 1);
    CHECK(single.c(1, 2, 0) == 1);  // even permutation
    CHECK(single.c(2, 1, 0) == 3);  // odd permutation inverts
    CHECK(single.c(1, 0, 2) == 3);

    auto k4t = Nerve::complete(4, true);
    // Triples (012),(013),(023),(123): alternating sum must vanish.
    CHECK_THROWS_AS(Cocycle2::make(k4t, *z2, {1, 0, 0, 0}), input_error);
    auto ok = Cocycle2::make(k4t, *z2, {1, 1, 0, 0});
    CHECK(ok.values == std::vector<Elt>{1, 1, 0, 0});

    auto s3 = grp::share(grp::FiniteGroup::symmetric(3));
    CHECK_THROWS_AS(Cocycle2::make(triangle_filled(), *s3, {3}), input_error);
}

TEST_CASE("defect of a chain lands in the band") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto bad = Chain1::make(triangle_filled(), z2, {1, 1, 1});
    auto tc = two_cocycle_of_chain(bad, {0, 1});
    CHECK(tc.band.group.order() == 2);
    // Defect c_012 = g(2,0) g(0,1) g(1,2) = 1+1+1 = 1.
    CHECK(tc.cocycle.values == std::vector<Elt>{1});

    auto z4 = grp::share(grp::FiniteGroup::cyclic(4));
    auto odd = Chain1::make(triangle_filled(), z4, {1, 0, 0});
    // Defect 1 lies outside the index-2 subgroup {0,2}.
    CHECK_THROWS_AS(two_cocycle_of_chain(odd, {0, 2}), input_error);
    auto even = Chain1::make(triangle_filled(), z4, {2, 0, 0});
    auto tc2 = two_cocycle_of_chain(even, {0, 2});
    CHECK(tc2.band.embedding == std::vector<Elt>{0, 2});
    CHECK(tc2.cocycle.values == std::vector<Elt>{1});  // subgroup-local index of 2

    CHECK_THROWS_AS(two_cocycle_of_chain(bad, {1}), input_error);  // not a subgroup
}

TEST_CASE("gauge equivalence of degree-1 cocycles") {
    auto s3 = grp::share(grp::FiniteGroup::symmetric(3));
    auto c3 = Nerve::cycle(3);
    // Holonomy of the cycle is the single cotree value when the tree is
    // trivial; here it is carried by g_01.
    auto a = Cocycle1::make(Chain1::make(c3, s3, {3, 0, 0}));  // holonomy (123)
    auto b = Cocycle1::make(Chain1::make(c3, s3, {4, 0, 0}));  // holonomy (132)
    auto t = Cocycle1::make(Chain1::make(c3, s3, {2, 0, 0}));  // holonomy (12)

    CHECK(holonomy(a, {0, 1, 2}) == 3);
    CHECK(holonomy(b, {0, 1, 2}) == 4);

    auto self = cohomologous1(a, a);
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<Elt>{0, 0, 0});

    auto w = cohomologous1(a, b);
    REQUIRE(w.has_value());
    CHECK(gauge_relates(a, b, *w));
    CHECK(cohomologous1(b, a).has_value());

    // Different cycle structure: never conjugate, no witness.
    CHECK(!cohomologous1(a, t).has_value());
    CHECK(!cohomologous1(t, a).has_value());

    CHECK_THROWS_AS(cohomologous1(a, Cocycle1::make(Chain1::make(
                            c3, grp::share(grp::FiniteGroup::cyclic(6)), {1, 0, 0}))),
                    input_error);
}

TEST_CASE("gauge group and holonomy subgroup") {
    auto s3 = grp::share(grp::FiniteGroup::symmetric(3));
    auto c3 = Nerve::cycle(3);

    auto trivial = Cocycle1::make(Chain1::make(c3, s3, {0, 0, 0}));
    auto gg = gauge_group(trivial);
    CHECK(gg.size() == 6);  // all constant gauges
    for (const auto& lam : gg) CHECK(gauge_relates(trivial, trivial, lam));

    auto rot = Cocycle1::make(Chain1::make(c3, s3, {0, 0, 3}));  // g_12 = (123)
    CHECK(holonomy_group(rot, 0) == std::vector<Elt>{0, 3, 4});
    auto ggr = gauge_group(rot);
    CHECK(ggr.size() == 3);  // centralizer of (123)
    for (const auto& lam : ggr) {
        CHECK(gauge_relates(rot, rot, lam));
        CHECK(lam[0] == lam[1]);  // constant along the tree
        CHECK((lam[0] == 0 || lam[0] == 3 || lam[0] == 4));
    }

    auto flip = Cocycle1::make(Chain1::make(c3, s3, {0, 0, 2}));  // g_12 = (12)
    CHECK(holonomy_group(flip, 1) == std::vector<Elt>{0, 2});
    CHECK(gauge_group(flip).size() == 2);

    // Two components, trivial transitions: one free constant per component.
    auto disc = Nerve::make(4, {{0, 1}, {2, 3}}, {});
    auto z3 = grp::share(grp::FiniteGroup::cyclic(3));
    auto dc = Cocycle1::make(Chain1::make(disc, z3, {0, 0}));
    CHECK(gauge_group(dc).size() == 9);
}

TEST_CASE("degree-1 classification on small nerves") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto z3 = grp::share(grp::FiniteGroup::cyclic(3));
    auto s3 = grp::share(grp::FiniteGroup::symmetric(3));
    auto c3 = Nerve::cycle(3);

    auto r2 = h1_classes(c3, z2);
    CHECK(r2.count == 2);
    REQUIRE(r2.reps.size() == 2);
    CHECK(r2.reps[0].chain.values == std::vector<Elt>{0, 0, 0});
    CHECK(r2.reps[1].chain.values == std::vector<Elt>{0, 0, 1});

    auto r3 = h1_classes(c3, z3);
    CHECK(r3.count == 3);
    CHECK(r3.reps[2].chain.values == std::vector<Elt>{0, 0, 2});

    // Nonabelian: classes of a single loop = conjugacy classes.
    auto rs = h1_classes(c3, s3);
    CHECK(rs.count == 3);
    REQUIRE(rs.reps.size() == 3);
    CHECK(rs.reps[0].chain.values == std::vector<Elt>{0, 0, 0});
    CHECK(rs.reps[1].chain.values == std::vector<Elt>{0, 0, 1});
    CHECK(rs.reps[2].chain.values == std::vector<Elt>{0, 0, 3});
    for (size_t i = 0; i < rs.reps.size(); ++i)
        for (size_t j = i + 1; j < rs.reps.size(); ++j)
            CHECK(!cohomologous1(rs.reps[i], rs.reps[j]).has_value());

    // Trees carry no classes.
    CHECK(h1_classes(Nerve::path(4), s3).count == 1);

    // Three independent loops over an abelian group: 2^3 classes.
    auto k4 = Nerve::complete(4, false);
    auto rk = h1_classes(k4, z2);
    CHECK(rk.count == 8);
    for (const auto& rep : rk.reps) CHECK(is_cocycle(rep.chain).ok);

    // Worker count must not change the outcome.
    auto par = h1_classes(c3, s3, ExecPolicy::make(4));
    CHECK(par.count == rs.count);
    REQUIRE(par.reps.size() == rs.reps.size());
    for (size_t i = 0; i < par.reps.size(); ++i)
        CHECK(par.reps[i].chain.values == rs.reps[i].chain.values);

    // Enumeration explosion is refused, not attempted.
    CHECK_THROWS_AS(h1_classes(Nerve::complete(6, false), grp::share(grp::FiniteGroup::cyclic(6))),
                    unsupported_error);
}

TEST_CASE("glued realization: points, attachments, orbit counts") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));

    // Two charts, trivial transition: two disjoint glued sheets.
    auto p2 = Nerve::path(2);
    auto split = glue(Cocycle1::make(Chain1::make(p2, z2, {0})));
    CHECK(split.regions == 3);
    CHECK(split.points == 6);
    CHECK(split.gluing_orbit_count() == 2);
    CHECK(split.action.is_free());
    CHECK(split.region_charts(0) == std::vector<int>{0});
    CHECK(split.region_charts(2) == std::vector<int>{0, 1});

    // Circle of three charts with one flip: the edges join into a single
    // band (the gluing has one connected orbit).
    auto c3 = Nerve::cycle(3);
    auto mobius = Cocycle1::make(Chain1::make(c3, z2, {0, 1, 0}));
    CHECK(holonomy(mobius, {0, 1, 2}) == 1);
    auto ts = glue(mobius);
    CHECK(ts.points == 12);
    CHECK(ts.gluing_orbit_count() == 1);

    auto cyl = Cocycle1::make(Chain1::make(c3, z2, {0, 0, 0}));
    CHECK(glue(cyl).gluing_orbit_count() == 2);

    // Round trip through the attachment tables.
    CHECK(extract_transitions(ts) == mobius);
    auto s3 = grp::share(grp::FiniteGroup::symmetric(3));
    auto rot = Cocycle1::make(Chain1::make(c3, s3, {3, 2, 0}));
    CHECK(extract_transitions(glue(rot)) == rot);

    // Coordinates round-trip.
    for (int pt = 0; pt < ts.points; ++pt)
        CHECK(ts.point_id(ts.region_of(pt), ts.fiber_coord(pt)) == pt);
}

TEST_CASE("degree-2 classification") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto z4 = grp::share(grp::FiniteGroup::cyclic(4));

    // One triple: both values occur as defects of pair-cochains, so the
    // two cocycles collapse to a single class.
    auto r1 = h2_classes(triangle_filled(), *z2);
    CHECK(r1.count == 1);
    REQUIRE(r1.reps.size() == 1);
    CHECK(r1.reps[0].values == std::vector<Elt>{0});

    // No triples at all: only the empty cocycle.
    CHECK(h2_classes(Nerve::cycle(3), *z2).count == 1);
    CHECK(h2_classes(Nerve::path(3), *z4).count == 1);

    // Full 4-chart clique: 8 cocycles, all of them defects.
    auto rk = h2_classes(Nerve::complete(4, true), *z2);
    CHECK(rk.count == 1);

    CHECK(h2_classes(triangle_filled(), *z4).count == 1);

    CHECK_THROWS_AS(h2_classes(triangle_filled(), grp::FiniteGroup::symmetric(3)),
                    unsupported_error);

    auto par = h2_classes(Nerve::complete(4, true), *z2, ExecPolicy::make(4));
    CHECK(par.count == rk.count);
}

TEST_CASE("band corrections match degree-2 coboundary witnesses") {
    auto z2 = grp::share(grp::FiniteGroup::cyclic(2));
    auto z4 = grp::share(grp::FiniteGroup::cyclic(4));
    auto tri = triangle_filled();
    auto k4t = Nerve::complete(4, true);

    auto verify_equivalence = [](const Chain1& h, const std::vector<Elt>& band) {
        const auto& g = *h.group;
        std::optional<TwoCocycle> tc;
        try {
            tc = two_cocycle_of_chain(h, band);
        } catch (const input_error&) {
            return;  // defect outside the band: nothing to compare
        }
        auto mu = band_correction(h, band);
        auto w = two_coboundary_witness(tc->cocycle);
        REQUIRE(mu.has_value() == w.has_value());
        if (mu) {
            // mu is band-valued and h*mu closes up.
            std::vector<Elt> corrected(h.values.size());
            for (size_t p = 0; p < h.values.size(); ++p) {
                CHECK(std::find(band.begin(), band.end(), (*mu)[p]) != band.end());
                corrected[p] = g.mul(h.values[p], (*mu)[p]);
            }
            CHECK(is_cocycle(Chain1::make(h.nerve, h.group, corrected)).ok);
        }
        if (w) {
            // The witness reproduces the cocycle as its own defect.
            const auto& bg = tc->cocycle.band;
            const auto& triples = h.nerve->triples();
            for (size_t t = 0; t < triples.size(); ++t) {
                auto [i, j, k] = triples[t];
                auto val = [&](int x, int y) {
                    int p = h.nerve->pair_index(x, y);
                    Elt v = (*w)[p];
                    return (x < y) ? v : bg.inv(v);
                };
                Elt d = bg.mul(bg.mul(val(k, i), val(i, j)), val(j, k));
                CHECK(d == tc->cocycle.values[t]);
            }
        }
    };

    // Simplest positive case: the fully flipped triangle is correctable.
    auto bad = Chain1::make(tri, z2, {1, 1, 1});
    CHECK(band_correction(bad, {0, 1}).has_value());
    verify_equivalence(bad, {0, 1});

    // Exhaustive sweep: every Z2 chain on the filled triangle and 4-clique.
    for (int code = 0; code < 8; ++code)
        verify_equivalence(Chain1::make(tri, z2, {code & 1, (code >> 1) & 1, (code >> 2) & 1}),
                           {0, 1});
    for (int code = 0; code < 64; ++code) {
        std::vector<Elt> v(6);
        for (int p = 0; p < 6; ++p) v[p] = (code >> p) & 1;
        verify_equivalence(Chain1::make(k4t, z2, v), {0, 1});
    }

    // Ambient group bigger than the band: only chains with even defects
    // compare; the rest raise on conversion and are skipped.
    for (int code = 0; code < 4096; ++code) {
        std::vector<Elt> v(6);
        int c = code;
        for (int p = 0; p < 6; ++p) { v[p] = c & 3; c >>= 2; }
        verify_equivalence(Chain1::make(k4t, z4, v), {0, 2});
    }
}
