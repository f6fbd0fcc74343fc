#include <gtest/gtest.h>

#include <algorithm>

#include "choreme/disk_fit.hpp"
#include "synthetic.hpp"

using namespace choreme;

namespace {

std::vector<WeightedPoint> random_grid_points(Rng& rng, int n, int extent, double positive_share = 0.5) {
    std::vector<WeightedPoint> pts;
    for (int k = 0; k < n; ++k) {
        const Point p{static_cast<double>(static_cast<int>(rng.next() % extent)),
                      static_cast<double>(static_cast<int>(rng.next() % extent))};
        pts.push_back({p, rng.uniform() < positive_share ? 0.5 : -0.5});
    }
    return pts;
}

}  // namespace

TEST(PairSweep, SpecExamples) {
    const std::vector<WeightedPoint> pts{{{-1, 0}, 1}, {{1, 0}, 1}, {{0, 3}, -1}};
    const auto r = pair_sweep(0, 1, pts);
    EXPECT_EQ(r.best_weight, 2.0);
    EXPECT_EQ(r.best_t, 0.0);

    double base = 0.0;
    const auto ev = sweep_events(0, 1, pts, &base);
    ASSERT_EQ(ev.size(), 1u);
    EXPECT_EQ(ev[0].kind, EventKind::start);
    EXPECT_DOUBLE_EQ(ev[0].t, 4.0 / 3.0);
    EXPECT_EQ(ev[0].weight_delta, -1.0);
    EXPECT_EQ(base, 2.0);

    const std::vector<WeightedPoint> only{{{-1, 0}, 1}, {{1, 0}, 1}};
    EXPECT_EQ(pair_sweep(0, 1, only).best_weight, 2.0);
    EXPECT_EQ(pair_sweep(0, 1, only).best_t, 0.0);

    const std::vector<WeightedPoint> mid{{{-1, 0}, 1}, {{1, 0}, 1}, {{0, 0}, 1}};
    EXPECT_EQ(pair_sweep(0, 1, mid).best_weight, 3.0);
    EXPECT_EQ(pair_sweep(0, 1, mid).best_t, 0.0);
    EXPECT_TRUE(sweep_events(0, 1, mid).empty());

    const std::vector<WeightedPoint> same{{{1, 1}, 1}, {{1, 1}, 1}};
    EXPECT_THROW(pair_sweep(0, 1, same), std::invalid_argument);
}

TEST(PairSweep, MovesAwayFromNegativeAndTowardPositive) {
    // Negative point on the upper side at the midpoint: go down. Positive
    // point far above: reaching it costs nothing extra but gains weight.
    const std::vector<WeightedPoint> pts{{{-1, 0}, 1}, {{1, 0}, 1}, {{0, 0.5}, -1}, {{0, 5}, 1}};
    const auto r = pair_sweep(0, 1, pts);
    // Including (0,5) needs t >= 2.4 which also includes the negative point.
    EXPECT_EQ(r.best_weight, 2.0);
    EXPECT_LT(r.best_t, 0.0);
    const double t_neg = (0.25 - 1.0) / (2 * 0.5);  // negative point enters at t = -0.75
    EXPECT_LT(r.best_t, t_neg);
}

TEST(PairSweep, EventKindsFollowTheSideOfTheBisector) {
    const std::vector<WeightedPoint> pts{{{0, 0}, 1}, {{2, 0}, 1}, {{1, 4}, -1}, {{1, -4}, -1}, {{5, 0}, 1}};
    const auto ev = sweep_events(0, 1, pts);
    ASSERT_EQ(ev.size(), 2u);  // (5,0) lies on the line through p and q, never inside
    EXPECT_EQ(ev[0].kind, EventKind::end);
    EXPECT_DOUBLE_EQ(ev[0].t, -7.5 / 4.0 * 2.0 / 2.0);
    EXPECT_EQ(ev[1].kind, EventKind::start);
    for (std::size_t k = 1; k < ev.size(); ++k) EXPECT_LE(ev[k - 1].t, ev[k].t);
}

TEST(MaxWeightDisk, SpecExamples) {
    const std::vector<WeightedPoint> two{{{0, 0}, 1}, {{2, 0}, 1}};
    const FitResult r = max_weight_smallest_disk(two);
    EXPECT_EQ(r.weight, 2.0);
    EXPECT_EQ(r.disk.center, (Point{1, 0}));
    EXPECT_EQ(r.disk.radius, 1.0);
    EXPECT_FALSE(r.degenerate);
    EXPECT_EQ(r.support, (std::vector<std::size_t>{0, 1}));

    const std::vector<WeightedPoint> guarded{{{0, 0}, 1}, {{-1, 0}, -5}, {{1, 0}, -5}, {{0, 1}, -5}, {{0, -1}, -5}};
    const FitResult g = max_weight_smallest_disk(guarded);
    EXPECT_EQ(g.weight, 1.0);
    EXPECT_EQ(g.disk.radius, 0.0);
    EXPECT_EQ(g.disk.center, (Point{0, 0}));
    EXPECT_TRUE(g.degenerate);
    EXPECT_EQ(g.support.size(), 1u);

    EXPECT_THROW(max_weight_smallest_disk(std::vector<WeightedPoint>{}), std::invalid_argument);
}

TEST(MaxWeightDisk, AllNegativeGivesEmptyDisk) {
    const std::vector<WeightedPoint> neg{{{0, 0}, -1}, {{1, 0}, -0.5}};
    const FitResult r = max_weight_smallest_disk(neg);
    EXPECT_TRUE(r.empty());
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.weight, 0.0);
    EXPECT_EQ(recount_weight(neg, r), 0.0);
    EXPECT_EQ(brute_force_oracle(neg), 0.0);
}

TEST(MaxWeightDisk, CoincidentPositivesCount) {
    const std::vector<WeightedPoint> pts{{{0, 0}, 1}, {{0, 0}, 1}, {{0, 0}, -0.5}, {{10, 0}, 1}, {{5, 0}, -3}};
    // Every disk through both far positives covers the negative between them.
    const FitResult r = max_weight_smallest_disk(pts);
    EXPECT_EQ(r.weight, 1.5);
    EXPECT_EQ(r.disk.radius, 0.0);
    EXPECT_EQ(brute_force_oracle(pts), 1.5);
}

TEST(MaxWeightDisk, OracleEquivalenceOnIntegerGrid) {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 24);
        const auto pts = random_grid_points(rng, n, 8 + static_cast<int>(rng.next() % 10));
        const FitResult fit = max_weight_smallest_disk(pts);
        const double oracle = brute_force_oracle(pts);
        ASSERT_EQ(fit.weight, oracle) << "trial " << trial;
        EXPECT_NEAR(recount_weight(pts, fit), fit.weight, 1e-9) << "trial " << trial;
        EXPECT_GE(fit.weight, 0.0);
    }
}

TEST(MaxWeightDisk, OracleEquivalenceWithAsymmetricWeights) {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        auto pts = random_grid_points(rng, 5 + static_cast<int>(rng.next() % 20), 12, 0.3);
        for (auto& p : pts) p.weight = p.weight > 0 ? 0.75 : -0.25;
        ASSERT_EQ(max_weight_smallest_disk(pts).weight, brute_force_oracle(pts)) << "trial " << trial;
    }
}

TEST(MaxWeightDisk, RecountOnRealCoordinates) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<WeightedPoint> pts;
        for (int k = 0; k < 150; ++k)
            pts.push_back({{rng.uniform() * 10.0, rng.uniform() * 7.0}, rng.uniform() < 0.4 ? 0.6 : -0.4});
        const FitResult fit = max_weight_smallest_disk(pts);
        EXPECT_NEAR(recount_weight(pts, fit), fit.weight, 1e-9);
        // Support points lie on the boundary.
        for (std::size_t s : fit.support)
            EXPECT_NEAR(norm(pts[s].position - fit.disk.center), fit.disk.radius, 1e-9 * (1 + fit.disk.radius));
    }
}

TEST(MaxWeightDisk, RigidMotionAndScalingInvariance) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = random_grid_points(rng, 20, 10);
        const FitResult base = max_weight_smallest_disk(pts);

        // Integer translation and a quarter turn keep coordinates exact.
        auto moved = pts;
        for (auto& p : moved) p.position = Point{-p.position.y, p.position.x} + Point{17, -3};
        const FitResult m = max_weight_smallest_disk(moved);
        EXPECT_EQ(m.weight, base.weight);
        EXPECT_NEAR(m.disk.radius, base.disk.radius, 1e-12);

        auto scaled = pts;
        for (auto& p : scaled) p.weight *= 2.0;
        const FitResult s = max_weight_smallest_disk(scaled);
        EXPECT_EQ(s.weight, 2.0 * base.weight);
        EXPECT_EQ(s.disk.center, base.disk.center);
        EXPECT_EQ(s.disk.radius, base.disk.radius);
    }
}

TEST(MaxWeightDisk, PermutationKeepsWeightAndRadius) {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = random_grid_points(rng, 18, 9);
        const FitResult a = max_weight_smallest_disk(pts);
        std::reverse(pts.begin(), pts.end());
        const FitResult b = max_weight_smallest_disk(pts);
        EXPECT_EQ(a.weight, b.weight);
        EXPECT_EQ(a.disk.radius, b.disk.radius);
        EXPECT_EQ(a.disk.center, b.disk.center);
    }
}

TEST(MaxWeightDisk, ParallelMatchesSequential) {
    Rng rng(5);
    std::vector<WeightedPoint> pts;
    for (int k = 0; k < 300; ++k)
        pts.push_back({{rng.uniform(), rng.uniform()}, rng.uniform() < 0.5 ? 0.5 : -0.5});
    const FitResult seq = max_weight_smallest_disk(pts, {1});
    for (unsigned threads : {2u, 3u, 8u}) {
        const FitResult par = max_weight_smallest_disk(pts, {threads});
        EXPECT_EQ(par.weight, seq.weight);
        EXPECT_EQ(par.disk.center, seq.disk.center);
        EXPECT_EQ(par.disk.radius, seq.disk.radius);
        EXPECT_EQ(par.support, seq.support);
    }
}

TEST(MaxWeightDisk, FindsAPlantedCluster) {
    Rng rng(3);
    std::vector<WeightedPoint> pts;
    for (int k = 0; k < 400; ++k) {
        const Point p{rng.uniform() * 4.0, rng.uniform() * 4.0};
        pts.push_back({p, norm(p - Point{1.5, 2.5}) < 0.8 ? 0.5 : -0.5});
    }
    const FitResult fit = max_weight_smallest_disk(pts);
    EXPECT_NEAR(fit.disk.center.x, 1.5, 0.15);
    EXPECT_NEAR(fit.disk.center.y, 2.5, 0.15);
    EXPECT_NEAR(fit.disk.radius, 0.8, 0.15);
}

TEST(AssignWeights, UsesComponentTags) {
    const RegionMap m = RegionMap::create(
        {{{{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}}}, ClassId::first}, {{{{{1, 0}, {4, 0}, {4, 1}, {1, 1}}, {}}}, ClassId::second}});
    const ClassStats st = class_stats(m, ClassId::first, AlphaMode::automatic());
    Sample s;
    s.points = {{0.5, 0.5}, {2, 0.5}, {1, 0.5}};
    s.origin_component = {0, 1, 1};
    const auto w = assign_weights(s, m, ClassId::first, st);
    EXPECT_EQ(w[0].weight, 0.75);
    EXPECT_EQ(w[1].weight, -0.25);
    EXPECT_EQ(w[2].weight, -0.25);  // tag wins over location on the shared edge

    const auto half = assign_weights(s, m, ClassId::second, class_stats(m, ClassId::second, AlphaMode::fixed_value(0.5)));
    EXPECT_EQ(half[0].weight, -0.5);
    EXPECT_EQ(half[1].weight, 0.5);

    s.origin_component.pop_back();
    EXPECT_THROW(assign_weights(s, m, ClassId::first, st), std::logic_error);
}
