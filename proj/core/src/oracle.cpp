#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "choreme/disk_fit.hpp"

namespace choreme {

namespace {

struct ExactPoint {
    mpq_class x, y;
};

double weight_at(const mpq_class& s, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                 std::span<const WeightedPoint> points) {
    double w = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (s * a[k] >= b[k]) w += points[k].weight;
    return w;
}

}  // namespace

double brute_force_oracle(std::span<const WeightedPoint> points) {
    const std::size_t n = points.size();
    std::vector<ExactPoint> ex(n);
    for (std::size_t k = 0; k < n; ++k) ex[k] = {mpq_class(points[k].position.x), mpq_class(points[k].position.y)};

    double best = 0.0;  // empty disk

    // Radius-0 disks at positive points.
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].weight > 0.0)) continue;
        double w = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (ex[k].x == ex[i].x && ex[k].y == ex[i].y) w += points[k].weight;
        best = std::max(best, w);
    }

    std::vector<mpq_class> a(n), b(n), cands;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].weight > 0.0)) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(points[j].weight > 0.0)) continue;
            if (ex[i].x == ex[j].x && ex[i].y == ex[j].y) continue;
            // Center m + s v on the bisector; x inside iff s * a >= b.
            const mpq_class mx = (ex[i].x + ex[j].x) / 2, my = (ex[i].y + ex[j].y) / 2;
            const mpq_class hx = ex[i].x - mx, hy = ex[i].y - my;
            const mpq_class vx = -(ex[j].y - ex[i].y), vy = ex[j].x - ex[i].x;
            const mpq_class hh = hx * hx + hy * hy;
            cands.clear();
            for (std::size_t k = 0; k < n; ++k) {
                const mpq_class px = ex[k].x - mx, py = ex[k].y - my;
                a[k] = 2 * (vx * px + vy * py);
                b[k] = px * px + py * py - hh;
                if (sgn(a[k]) != 0) cands.push_back(b[k] / a[k]);
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            std::vector<mpq_class> trial = cands;
            trial.push_back(mpq_class(0));
            if (!cands.empty()) {
                trial.push_back(cands.front() - 1);
                trial.push_back(cands.back() + 1);
                for (std::size_t k = 0; k + 1 < cands.size(); ++k) trial.push_back((cands[k] + cands[k + 1]) / 2);
            }
            for (const mpq_class& s : trial) best = std::max(best, weight_at(s, a, b, points));
        }
    }
    return best;
}

}  // namespace choreme
