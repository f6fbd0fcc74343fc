#include <gtest/gtest.h>

#include <cmath>

#include "choreme/sampling.hpp"
#include "choreme/scoring.hpp"
#include "synthetic.hpp"

using namespace choreme;

namespace {

RegionMap halves() {
    return RegionMap::create({{{{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}}}, ClassId::first},
                              {{{{{1, 0}, {2, 0}, {2, 1}, {1, 1}}, {}}}, ClassId::second}});
}

Disk enclosing(const BBox& b) {
    return {{0.5 * (b.xmin + b.xmax), 0.5 * (b.ymin + b.ymax)}, b.diagonal()};
}

}  // namespace

TEST(DiskScore, SpecExamples) {
    const RegionMap m = halves();
    const ClassStats st = class_stats(m, ClassId::first, AlphaMode::fixed_value(0.5));
    const ScoreReport a = disk_score(m, {{0.5, 0.5}, 0.25}, ClassId::first, st);
    EXPECT_NEAR(a.raw_score, 0.5 * M_PI / 16.0, 1e-14);
    EXPECT_NEAR(a.covered_target, M_PI / 16.0, 1e-14);
    EXPECT_EQ(a.covered_other, 0.0);

    const ScoreReport b = disk_score(m, {{1.0, 0.5}, 0.25}, ClassId::first, st);
    EXPECT_NEAR(b.raw_score, 0.0, 1e-15);
    EXPECT_NEAR(b.raw_score, st.alpha * b.covered_target - (1 - st.alpha) * b.covered_other, 1e-15);
}

TEST(DiskScore, FullMapDiskScoresZeroUnderAutoAlpha) {
    for (const auto& s : choreme::testing::synth_corpus()) {
        for (ClassId t : {ClassId::first, ClassId::second}) {
            const ClassStats st = class_stats(s.map, t, AlphaMode::automatic());
            const ScoreReport r = disk_score(s.map, enclosing(s.map.bbox()), t, st);
            EXPECT_LE(std::abs(r.raw_score), 1e-9 * st.alpha * st.target_area());
            EXPECT_NEAR(r.normalized, 0.0, 1e-9);
        }
    }
}

TEST(DiskScore, GeneralFormMatchesTwoClassExactly) {
    const auto corpus = choreme::testing::synth_corpus();
    Rng rng(6);
    for (const auto& s : corpus) {
        const BBox b = s.map.bbox();
        for (ClassId t : {ClassId::first, ClassId::second}) {
            const ClassStats st = class_stats(s.map, t, AlphaMode::automatic());
            ClassDistance delta;
            delta.set(t, t, st.alpha);
            delta.set(other(t), t, st.alpha - 1.0);
            for (int k = 0; k < 10; ++k) {
                const Disk d{{b.xmin + rng.uniform() * b.width(), b.ymin + rng.uniform() * b.height()},
                             rng.uniform() * 0.5 * b.diagonal()};
                EXPECT_EQ(disk_score(s.map, d, t, delta), disk_score(s.map, d, t, st).raw_score);
            }
        }
    }
}

TEST(SymmetricDifference, IdentityAndRanking) {
    const auto corpus = choreme::testing::synth_corpus();
    Rng rng(10);
    for (const auto& s : corpus) {
        const BBox b = s.map.bbox();
        const ClassStats st = class_stats(s.map, ClassId::first, AlphaMode::fixed_value(0.5));
        std::vector<std::pair<double, double>> rows;
        for (int k = 0; k < 25; ++k) {
            const Disk d{{b.xmin + rng.uniform() * b.width(), b.ymin + rng.uniform() * b.height()},
                         rng.uniform() * 0.6 * b.diagonal()};
            const double raw = disk_score(s.map, d, ClassId::first, st).raw_score;
            const double sd = symmetric_difference(s.map, d, ClassId::first);
            EXPECT_NEAR(raw, 0.5 * (s.map.class_area(ClassId::first) - sd), 1e-9 * s.map.class_area(ClassId::first));
            rows.push_back({raw, sd});
        }
        for (const auto& x : rows)
            for (const auto& y : rows)
                if (x.first > y.first + 1e-12) EXPECT_LT(x.second, y.second);
    }
}

TEST(SymmetricDifference, Examples) {
    const RegionMap m = halves();
    EXPECT_NEAR(symmetric_difference(m, {{5, 5}, 0.1}, ClassId::first), 1.0, 1e-15);
    const RegionMap planted = choreme::testing::planted_disk_map({0.5, 0.5}, 0.3, 4);
    // Circumscribed disk of the class-1 square: symdiff is the disk part over class 2.
    const Disk d{{0.5, 0.5}, 0.3};
    const double sd = symmetric_difference(planted, d, ClassId::first);
    EXPECT_NEAR(sd, M_PI * 0.09 - polygon_area(planted.regions()[0].shape), 1e-12);
}

TEST(NormalizeScore, Extremes) {
    ClassStats st;
    st.target = ClassId::first;
    st.area_class1 = 1.0;
    st.area_class2 = 3.0;
    st.alpha = 0.75;
    EXPECT_DOUBLE_EQ(normalize_score(0.75, st), 1.0);
    EXPECT_DOUBLE_EQ(normalize_score(0.0, st), 0.0);
    EXPECT_DOUBLE_EQ(normalize_score(-0.75, st), -1.0);
    EXPECT_LT(normalize_score(-0.1, st), normalize_score(0.1, st));
    st.alpha = 1.0;
    EXPECT_THROW(normalize_score(0.1, st), std::invalid_argument);

    const RegionMap m = halves();
    const ClassStats auto_st = class_stats(m, ClassId::first, AlphaMode::automatic());
    const ScoreReport all_other = disk_score(m, {{1.5, 0.5}, 5.0}, ClassId::second, class_stats(m, ClassId::second, AlphaMode::automatic()));
    EXPECT_NEAR(all_other.normalized, 0.0, 1e-12);
    // Covering exactly S2 (the right square) with the target class 1.
    ScoreReport r;
    r.raw_score = -(1 - auto_st.alpha) * 1.0;
    EXPECT_DOUBLE_EQ(normalize_score(r.raw_score, auto_st), -1.0);
}

TEST(RelativeQuality, Ratios) {
    EXPECT_DOUBLE_EQ(relative_quality(2.0, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(relative_quality(0.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(relative_quality(1.0, 2.0), 0.5);
    EXPECT_THROW(relative_quality(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(relative_quality(1.0, -1.0), std::invalid_argument);
}
