#include <gtest/gtest.h>

#include "hfcone/detectors.hpp"
#include "hfcone/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_complex.hpp"

using namespace hfcone;

namespace {

LaurentPoly poly(std::vector<int> e) { return LaurentPoly::from_exponents(std::move(e)); }

std::vector<int> support_of(const std::set<int>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(SphereObstruction, Fixtures) {
    EXPECT_EQ(sphere_obstruction({fixtures::unknot()}).kind, VerdictKind::DoesNotFire);

    auto t = sphere_obstruction({fixtures::trefoil()});
    EXPECT_EQ(t.kind, VerdictKind::Fires);
    EXPECT_EQ(t.int_at("s"), 0);
    EXPECT_EQ(t.int_at("novikov_dim"), 2);

    EXPECT_EQ(sphere_obstruction({fixtures::trefoil_mirror()}).kind, VerdictKind::Fires);
    EXPECT_EQ(sphere_obstruction({fixtures::y1sigma()}).kind, VerdictKind::DoesNotFire);
}

TEST(DimensionVerdict, ThreeOutcomes) {
    EXPECT_EQ(theorem1_verdict(1, 1).str_at("outcome"), "unknotted");
    EXPECT_EQ(theorem1_verdict(1, 1).kind, VerdictKind::Fires);
    EXPECT_EQ(theorem1_verdict(5, 3).str_at("outcome"), "inconclusive");
    EXPECT_EQ(theorem1_verdict(5, 3).kind, VerdictKind::Inconclusive);
    EXPECT_EQ(theorem1_verdict(3, 5).str_at("outcome"), "impossible");
    EXPECT_THROW(theorem1_verdict(0, 1), Error);
}

TEST(Genus, Fixtures) {
    EXPECT_EQ(genus({fixtures::unknot()}), 0);
    EXPECT_EQ(genus({fixtures::trefoil()}), 1);
    EXPECT_EQ(genus({fixtures::trefoil_mirror()}), 1);
    EXPECT_EQ(genus({fixtures::figure_eight()}), 1);
    EXPECT_EQ(genus({fixtures::y1sigma()}), 0);
    EXPECT_EQ(genus({fixtures::unknot(), fixtures::trefoil()}), 1);
}

TEST(Genus, BoundedByTopGradingAndZeroIffVZeroIso) {
    for (const auto& c : testgen::corpus(100, 17)) {
        const int g = genus({c});
        EXPECT_LE(g, c.a_max());
        EXPECT_EQ(g == 0, build_v_hat(c, 0).induces_isomorphism());
    }
}

TEST(Alexander, Fixtures) {
    auto u = alexander_polynomial(fixtures::unknot());
    EXPECT_EQ(u.polynomial, poly({0}));
    EXPECT_TRUE(u.trivial_mod_2);

    auto t = alexander_polynomial(fixtures::trefoil());
    EXPECT_EQ(t.polynomial, poly({-1, 0, 1}));
    EXPECT_FALSE(t.trivial_mod_2);
    EXPECT_EQ(t.hfk_dims, (std::map<int, std::size_t>{{-1, 1}, {0, 1}, {1, 1}}));

    EXPECT_TRUE(alexander_polynomial(fixtures::y1sigma()).trivial_mod_2);
    EXPECT_EQ(alexander_polynomial(fixtures::figure_eight()).polynomial, poly({-1, 0, 1}));
}

// The Euler characteristic only needs generator counts per Alexander grading.
TEST(Alexander, AgreesWithGeneratorCount) {
    auto complexes = fixtures::all();
    for (auto& c : testgen::corpus(100, 18)) complexes.push_back(std::move(c));
    for (const auto& c : complexes) {
        EXPECT_EQ(alexander_polynomial(c).polynomial.support(), support_of(oracle::alexander_support_by_count(c)));
    }
}

TEST(PropRed1, Examples) {
    auto y = prop_red1_obstruction({{Rational(-1), 1}}, true);
    EXPECT_EQ(y.kind, VerdictKind::Fires);
    EXPECT_EQ(y.str_at("grading"), "-1");
    EXPECT_EQ(prop_red1_obstruction({}, true).kind, VerdictKind::DoesNotFire);
    EXPECT_EQ(prop_red1_obstruction({{Rational(-1), 2}}, true).kind, VerdictKind::DoesNotFire);
    EXPECT_THROW(prop_red1_obstruction({{Rational(-1), 1}}, false), NotHomologySphere);
    EXPECT_EQ(hat_dim_from_red1(1), 3);
}

TEST(PropRed1, FromComputedReducedHomology) {
    auto v = prop_red1_obstruction(hf_red_graded(fixtures::y1sigma()).dims, true);
    EXPECT_EQ(v.kind, VerdictKind::Fires);
    EXPECT_EQ(v.str_at("grading"), "-1");
}

TEST(Prop0Surgery, Fixtures) {
    EXPECT_EQ(check_prop_0surgery({fixtures::unknot()}).kind, VerdictKind::Fires);

    auto t = check_prop_0surgery({fixtures::trefoil()});
    EXPECT_EQ(t.kind, VerdictKind::DoesNotFire);
    EXPECT_EQ(t.str_at("clause"), "b");
    EXPECT_EQ(t.int_at("s"), 0);

    auto m = check_prop_0surgery({fixtures::trefoil_mirror()});
    EXPECT_EQ(m.kind, VerdictKind::DoesNotFire);
    EXPECT_EQ(m.str_at("clause"), "c");
    EXPECT_EQ(m.int_at("s"), 0);

    EXPECT_EQ(check_prop_0surgery({fixtures::y1sigma()}).kind, VerdictKind::Fires);
}

TEST(Prop0Surgery, FiresOnlyWithTrivialAlexander) {
    auto complexes = fixtures::all();
    for (auto& c : testgen::corpus(150, 19)) complexes.push_back(std::move(c));
    for (const auto& c : complexes) {
        if (check_prop_0surgery({c}).kind == VerdictKind::Fires) {
            EXPECT_TRUE(alexander_polynomial(c).trivial_mod_2);
        }
    }
}
