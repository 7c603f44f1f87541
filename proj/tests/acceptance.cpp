// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hfcone/detectors.hpp"
#include "hfcone/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"
#include "support/random_complex.hpp"

using namespace hfcone;

namespace {

/// Collects mismatches for one criterion.
class Check {
public:
    template <class A, class B>
    void equal(const std::string& what, const A& got, const B& want) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            problems_.push_back(os.str());
        }
    }

    void that(const std::string& what, bool ok) {
        if (!ok) problems_.push_back(what);
    }

    [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

std::string kind(const Verdict& v) { return to_string(v.kind); }

void unknot_pipeline(Check& k) {
    const auto c = derive_flip(fixtures::unknot());
    k.equal("cone total s=0", cone_homology_hat(c, 0).total_dim, 2U);
    for (int s = -3; s <= 3; ++s) k.equal("novikov_dim s=" + std::to_string(s), novikov_dim(c, s), 0U);
    k.equal("genus", genus({c}), 0);
    k.that("Alexander polynomial trivial", alexander_polynomial(c).trivial_mod_2);
    k.equal("prop0check", kind(check_prop_0surgery({c})), std::string("Fires"));
}

void trefoil_pipeline(Check& k) {
    const auto c = derive_flip(fixtures::trefoil());
    for (int s = -2; s <= 2; ++s) {
        const std::size_t want = s == 0 ? 2 : 0;
        k.equal("cone total s=" + std::to_string(s), cone_homology_hat(c, s).total_dim, want);
        k.equal("oracle cone total s=" + std::to_string(s), oracle::direct_cone_dim(c, s), want);
    }
    k.equal("rank (v0+h0)_*", cone_homology_hat(c, 0).rank_v_plus_h, 0U);
    for (int s : {-1, 0, 1}) {
        const std::size_t want = s == 0 ? 2 : 0;
        k.equal("novikov_dim s=" + std::to_string(s), novikov_dim(c, s), want);
        k.equal("oracle novikov_dim s=" + std::to_string(s), oracle::direct_novikov_dim(c, s), want);
    }
    k.equal("genus", genus({c}), 1);
    k.equal("Alexander polynomial", alexander_polynomial(c).polynomial.str(), std::string("T + 1 + T^-1"));
    k.equal("Alexander oracle support size", oracle::alexander_support_by_count(c).size(), 3U);
    auto v = sphere_obstruction({c});
    k.equal("sphere obstruction", kind(v), std::string("Fires"));
    k.equal("sphere obstruction s", v.int_at("s"), 0);
}

void mirror_pipeline(Check& k) {
    const auto c = derive_flip(fixtures::trefoil_mirror());
    k.equal("genus", genus({c}), 1);
    const auto a0 = build_A_hat(c, 0);
    k.equal("dim H(A_0)", a0.homology_dim(), 3U);
    k.equal("dim H(A_0) oracle", a0.size() - 2 * oracle::gauss_rank(oracle::to_dense(a0.differential)), 3U);
    auto r = cone_homology_hat(c, 0);
    k.equal("rank v_0", r.rank_v, 1U);
    k.equal("rank h_0", r.rank_h, 1U);
    k.equal("dim H(B)", r.dim_b, 1U);  // rank 1 onto a 1-dimensional target is onto
    k.equal("rank (v0+h0)_*", r.rank_v_plus_h, 1U);
    k.equal("cone total s=0", r.total_dim, 3U + 1U - 2U * 1U);
    k.equal("oracle cone total s=0", oracle::direct_cone_dim(c, 0), 2U);
}

void y1sigma_pipeline(Check& k) {
    const auto c = fixtures::y1sigma();
    auto red = hf_red_graded(c).dims;
    k.equal("HF_red entries", red.size(), 1U);
    k.equal("HF_red in grading -1", red.count(Rational(-1)) ? red.at(Rational(-1)) : 0U, 1U);
    auto v = prop_red1_obstruction(red, true);
    k.equal("red-1 obstruction", kind(v), std::string("Fires"));
    k.equal("red-1 witness", v.str_at("grading"), std::string("-1"));
    k.that("Alexander polynomial trivial", alexander_polynomial(c).trivial_mod_2);
    // Oracle: at N = 3 the truncated B+ has dim 6 = 4 tower classes (x column)
    // + top of z column + the torsion class y.
    auto t = build_plus_truncated(c, PlusRegion::B, 0, 3).complex;
    const auto d = oracle::to_dense(t.differential);
    k.equal("enumerated H(B+, N=3)", oracle::enum_homology(d, t.size(), d, t.size()), 6U);
}

void verdict_table(Check& k) {
    k.equal("(1,1)", theorem1_verdict(1, 1).str_at("outcome"), std::string("unknotted"));
    k.equal("(5,3)", theorem1_verdict(5, 3).str_at("outcome"), std::string("inconclusive"));
    k.equal("(3,5)", theorem1_verdict(3, 5).str_at("outcome"), std::string("impossible"));
}

void property_suite(Check& k) {
    const auto corpus = testgen::corpus(250);
    k.that("at least 200 complexes", corpus.size() >= 200);
    props::Failures f;
    for (const auto& c : corpus) {
        props::rank_nullity(c, f);
        props::novikov_equals_free_rank(c, f);
        props::specializes_at_one(c, f);
        props::v_factors(c, f);
        props::symmetric_in_s(c, f);
        props::fires_only_when_alexander_trivial(c, f);
    }
    for (const auto& msg : f) k.that(msg, false);
}

void oracle_equivalence(Check& k) {
    for (const auto& raw : fixtures::all()) {
        const auto c = derive_flip(raw);
        for (int s = -2; s <= 2; ++s) {
            k.equal(c.id + " s=" + std::to_string(s), cone_homology_hat(c, s).total_dim, oracle::direct_cone_dim(c, s));
        }
    }
}

void flip_robustness(Check& k) {
    const auto base = derive_flip(fixtures::trefoil());
    const auto flips = all_flip_bijections(base);
    k.that("exhaustive flip search found the derived flip", !flips.empty());
    if (flips.size() == 1) {
        std::cout << "  trefoil flip is unique among generator bijections\n";
        return;
    }
    for (const auto& alt : flips) {
        auto c = base;
        c.flip = alt;
        for (int s = -2; s <= 2; ++s) {
            k.equal("cone s=" + std::to_string(s), cone_homology_hat(c, s).total_dim,
                    cone_homology_hat(base, s).total_dim);
            k.equal("novikov s=" + std::to_string(s), novikov_dim(c, s), novikov_dim(base, s));
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"unknot pipeline", unknot_pipeline},
        {"trefoil pipeline", trefoil_pipeline},
        {"mirror trefoil pipeline", mirror_pipeline},
        {"y1sigma reduced homology", y1sigma_pipeline},
        {"HF-hat dimension verdict table", verdict_table},
        {"random complex properties", property_suite},
        {"oracle equivalence on fixtures", oracle_equivalence},
        {"flip robustness", flip_robustness},
    };
    int failed = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Check k;
        try {
            criteria[n].second(k);
        } catch (const std::exception& e) {
            k.that(std::string("exception: ") + e.what(), false);
        }
        const bool ok = k.problems().empty();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n + 1 << ": " << criteria[n].first << "\n";
        for (const auto& p : k.problems()) std::cout << "  " << p << "\n";
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
