#include "doctest.h"

#include "equilift/common.hpp"
#include "equilift/ext.hpp"
#include "equilift/grp.hpp"

#include <algorithm>

using namespace equilift;
using namespace equilift::ext;

namespace {

// 1 -> Z3 -> S3 -> Z2 -> 1 with the 3-cycle kernel and the sign map.
// S3 numbering: 0:e 1:(23) 2:(12) 3:(123) 4:(132) 5:(13).
Extension s3_over_z2() {
    auto l = grp::share(grp::FiniteGroup::cyclic(3));
    auto m = grp::share(grp::FiniteGroup::symmetric(3));
    auto n = grp::share(grp::FiniteGroup::cyclic(2));
    auto incl = grp::Hom::make(l, m, {0, 3, 4});
    auto proj = grp::Hom::make(m, n, {0, 1, 1, 0, 0, 1});
    return Extension::make({l, m, n, incl, proj});
}

// 1 -> Z2 -> Q8 -> V4 -> 1 with the central kernel {1,-1}.
// Q8 numbering: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; V4: 0:e 1:a 2:b 3:c.
Extension q8_over_v4() {
    auto l = grp::share(grp::FiniteGroup::cyclic(2));
    auto m = grp::share(grp::FiniteGroup::quaternion8());
    auto n = grp::share(grp::FiniteGroup::klein_four());
    auto incl = grp::Hom::make(l, m, {0, 1});
    auto proj = grp::Hom::make(m, n, {0, 0, 1, 1, 2, 2, 3, 3});
    return Extension::make({l, m, n, incl, proj});
}

grp::GAction trivial_action(const grp::FiniteGroup& n, const grp::FiniteGroup& l) {
    std::vector<int> id(l.order());
    for (int x = 0; x < l.order(); ++x) id[x] = x;
    return grp::GAction::make(grp::share(n), l.order(),
                              std::vector<std::vector<int>>(n.order(), id));
}

}  // namespace

TEST_CASE("exactness verdicts with witnesses") {
    CHECK(check_exact(s3_over_z2().data()).empty());
    CHECK(check_exact(q8_over_v4().data()).empty());

    // Quotient too big: only surjectivity fails.
    {
        auto l = grp::share(grp::FiniteGroup::cyclic(3));
        auto n = grp::share(grp::FiniteGroup::cyclic(2));
        ExtensionData d{l, l, n, grp::Hom::identity(l),
                        grp::Hom::make(l, n, {0, 0, 0})};
        auto issues = check_exact(d);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].condition == "surjectivity");
        CHECK(issues[0].witness == std::vector<Elt>{1});
        CHECK_THROWS_AS(Extension::make(d), input_error);
    }

    // Non-injective inclusion.
    {
        auto l = grp::share(grp::FiniteGroup::cyclic(4));
        auto m = grp::share(grp::FiniteGroup::cyclic(2));
        auto n = grp::share(grp::FiniteGroup::trivial());
        ExtensionData d{l, m, n, grp::Hom::make(l, m, {0, 1, 0, 1}),
                        grp::Hom::make(m, n, {0, 0})};
        auto issues = check_exact(d);
        REQUIRE(issues.size() == 2);
        for (const auto& is : issues) CHECK(is.condition == "injectivity");
        CHECK(issues[0].witness == std::vector<Elt>{0, 2});
    }

    // Image strictly inside the kernel.
    {
        auto l = grp::share(grp::FiniteGroup::cyclic(2));
        auto m = grp::share(grp::FiniteGroup::cyclic(4));
        ExtensionData d{l, m, m, grp::Hom::make(l, m, {0, 2}),
                        grp::Hom::identity(m)};
        auto issues = check_exact(d);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].condition == "exactness");
        CHECK(issues[0].witness == std::vector<Elt>{2});
    }

    // Non-normal image (and hence also a kernel/image gap).
    {
        auto l = grp::share(grp::FiniteGroup::cyclic(2));
        auto m = grp::share(grp::FiniteGroup::symmetric(3));
        auto n = grp::share(grp::FiniteGroup::trivial());
        ExtensionData d{l, m, n, grp::Hom::make(l, m, {0, 2}),
                        grp::Hom::make(m, n, {0, 0, 0, 0, 0, 0})};
        auto issues = check_exact(d);
        bool saw_normality = false;
        for (const auto& is : issues)
            if (is.condition == "normality") saw_normality = true;
        CHECK(saw_normality);
    }

    // Wiring mismatches are input errors, not issue reports.
    {
        auto l = grp::share(grp::FiniteGroup::cyclic(2));
        auto m = grp::share(grp::FiniteGroup::cyclic(4));
        ExtensionData d{l, m, l, grp::Hom::make(l, l, {0, 1}),
                        grp::Hom::make(m, l, {0, 1, 0, 1})};
        CHECK_THROWS_AS(check_exact(d), input_error);
    }
}

TEST_CASE("sections: canonical, enumerated, validated") {
    auto e = s3_over_z2();
    auto s = canonical_section(e);
    CHECK(s.map == std::vector<Elt>{0, 1});
    CHECK(s.normalized);
    CHECK(is_homomorphic(e, s));  // (23) is an involution

    auto all = normalized_sections(e);
    REQUIRE(all.size() == 3);  // s(1) in {(23),(12),(13)}
    CHECK(all[0].map == std::vector<Elt>{0, 1});
    CHECK(all[1].map == std::vector<Elt>{0, 2});
    CHECK(all[2].map == std::vector<Elt>{0, 5});
    for (const auto& sec : all) CHECK(is_homomorphic(e, sec));

    CHECK(normalized_sections(q8_over_v4()).size() == 8);

    CHECK_THROWS_AS(Section::make(e, {0}), input_error);
    CHECK_THROWS_AS(Section::make(e, {0, 3}), input_error);  // (123) is even
    auto nn = Section::make(e, {3, 1});
    CHECK(!nn.normalized);
}

TEST_CASE("factor sets of the quaternion extension are nontrivial") {
    auto e = q8_over_v4();
    auto s = canonical_section(e);
    CHECK(s.map == std::vector<Elt>{0, 2, 4, 6});  // 1, i, j, k
    CHECK(!is_homomorphic(e, s));
    auto fs = factor_set(e, s);
    CHECK(fs.c[0][0] == 0);
    CHECK(fs.c[1][1] == 1);  // i*i = -1
    CHECK(fs.c[1][2] == 0);  // i*j = k exactly
    CHECK(fs.c[2][1] == 1);  // j*i = -k
    CHECK(!is_coboundary(e, fs).has_value());

    // Every normalized section fails to split Q8: nontrivial factor set,
    // never a coboundary.
    for (const auto& sec : normalized_sections(e)) {
        auto f = factor_set(e, sec);
        bool nontrivial = false;
        for (const auto& row : f.c)
            for (Elt v : row) nontrivial = nontrivial || v != 0;
        CHECK(nontrivial);
        CHECK(!is_coboundary(e, f).has_value());
    }
}

TEST_CASE("factor sets of the symmetric-group extension are coboundaries") {
    auto e = s3_over_z2();
    for (const auto& sec : normalized_sections(e)) {
        auto f = factor_set(e, sec);
        for (const auto& row : f.c)
            for (Elt v : row) CHECK(v == 0);  // homomorphic sections
        auto w = is_coboundary(e, f);
        REQUIRE(w.has_value());
        CHECK(*w == std::vector<Elt>{0, 0});
    }

    // A non-normalized section gives a genuinely nontrivial factor set
    // that is still a coboundary.
    auto nn = Section::make(e, {3, 1});  // s(0) = (123), s(1) = (23)
    auto f = factor_set(e, nn);
    CHECK(f.c[0][0] == 1);
    CHECK(f.c[0][1] == 1);
    CHECK(f.c[1][0] == 2);
    CHECK(f.c[1][1] == 2);
    auto w = is_coboundary(e, f);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Elt>{1, 0});
}

TEST_CASE("complements and splitting classes") {
    auto e = s3_over_z2();
    auto ks = complements(e);
    REQUIRE(ks.size() == 3);
    CHECK(ks[0] == std::vector<Elt>{0, 1});
    CHECK(ks[1] == std::vector<Elt>{0, 2});
    CHECK(ks[2] == std::vector<Elt>{0, 5});
    CHECK(splitting_from_complement(e, ks[0]) == std::vector<Elt>{0, 1});

    auto sc = splitting_classes(e);
    CHECK(sc.reps.size() == 1);
    REQUIRE(sc.orbits.size() == 1);
    CHECK(sc.orbits[0] == std::vector<int>{0, 1, 2});  // all three conjugate

    CHECK(complements(q8_over_v4()).empty());
    CHECK_THROWS_AS(splitting_classes(q8_over_v4()), input_error);

    // Direct products always split through the second factor.
    auto z2 = grp::FiniteGroup::cyclic(2);
    auto dp = direct_product_extension(z2, z2);
    auto dks = complements(dp);
    REQUIRE(dks.size() == 2);
    CHECK(dks[0] == std::vector<Elt>{0, 1});  // {e} x N
    CHECK(dks[1] == std::vector<Elt>{0, 3});  // the diagonal
    auto dsc = splitting_classes(dp);
    CHECK(dsc.reps.size() == 2);  // abelian: conjugation cannot merge them

    CHECK_THROWS_AS(splitting_from_complement(e, {0, 3}), input_error);
}

TEST_CASE("degree-1 classification for group actions") {
    auto z2 = grp::FiniteGroup::cyclic(2);
    auto z3 = grp::FiniteGroup::cyclic(3);

    auto t22 = h1(z2, z2, trivial_action(z2, z2));
    CHECK(t22.count == 2);
    REQUIRE(t22.reps.size() == 2);
    CHECK(t22.reps[0] == std::vector<Elt>{0, 0});
    CHECK(t22.reps[1] == std::vector<Elt>{0, 1});

    CHECK(h1(z2, z3, trivial_action(z2, z3)).count == 1);

    // Inversion action: three crossed homomorphisms, all principal.
    auto inv = grp::GAction::make(grp::share(z2), 3, {{0, 1, 2}, {0, 2, 1}});
    auto r = h1(z2, z3, inv);
    CHECK(r.count == 1);
    CHECK(r.reps[0] == std::vector<Elt>{0, 0});

    // A permutation action that is not by automorphisms is refused.
    auto swap01 = grp::GAction::make(grp::share(z2), 3, {{0, 1, 2}, {1, 0, 2}});
    CHECK_THROWS_AS(h1(z2, z3, swap01), input_error);

    // Worker invariance.
    auto par = h1(z2, z3, inv, ExecPolicy::make(4));
    CHECK(par.count == r.count);
    CHECK(par.reps == r.reps);
}

TEST_CASE("splitting classes match degree-1 classes of the induced action") {
    // Split extensions: the class count equals h1 for the action induced
    // by any splitting.
    auto e = s3_over_z2();
    auto split_sec = Section::make(e, splittings(e).front());
    auto act = induced_action(e, split_sec);
    // (23) inverts the 3-cycles.
    CHECK(act.act[1] == std::vector<int>{0, 2, 1});
    CHECK(h1(*e.N(), *e.L(), act).count ==
          static_cast<int>(splitting_classes(e).reps.size()));

    auto z2 = grp::FiniteGroup::cyclic(2);
    auto z3 = grp::FiniteGroup::cyclic(3);
    for (const auto* l : {&z2, &z3}) {
        auto dp = direct_product_extension(*l, z2);
        auto sec = Section::make(dp, splittings(dp).front());
        CHECK(h1(*dp.N(), *dp.L(), induced_action(dp, sec)).count ==
              static_cast<int>(splitting_classes(dp).reps.size()));
    }
}

TEST_CASE("outer conjugation data") {
    // Kernel Z3: the quotient involution acts by the unique outer flip.
    auto oa = outer_action(s3_over_z2());
    CHECK(oa.aut.group.order() == 2);
    CHECK(oa.class_of == std::vector<int>{0, 1});
    CHECK(oa.homomorphic);

    // Central kernel: the action collapses entirely.
    auto oq = outer_action(q8_over_v4());
    CHECK(oq.aut.group.order() == 1);
    CHECK(oq.class_of == std::vector<int>{0, 0, 0, 0});
    CHECK(oq.homomorphic);
}

TEST_CASE("section changes twist the factor set by a coboundary") {
    for (auto e : {s3_over_z2(), q8_over_v4()}) {
        auto secs = normalized_sections(e);
        const auto& l = *e.L();
        const auto& n = *e.N();
        for (const auto& s1 : secs)
            for (const auto& s2 : secs) {
                auto c1 = factor_set(e, s1);
                auto c2 = factor_set(e, s2);
                auto b = section_difference(e, s1, s2);
                auto act = induced_action(e, s1);
                for (Elt x = 0; x < n.order(); ++x)
                    for (Elt y = 0; y < n.order(); ++y) {
                        Elt want = l.mul(l.mul(l.mul(b[x], act(x, b[y])), c1.c[x][y]),
                                         l.inv(b[n.mul(x, y)]));
                        CHECK(c2.c[x][y] == want);
                    }
            }
    }
}
