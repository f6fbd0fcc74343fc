#include "choreme/disk_fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace choreme {

std::vector<WeightedPoint> assign_weights(const Sample& sample, const RegionMap& map, ClassId target,
                                          const ClassStats& stats) {
    if (sample.origin_component.size() != sample.points.size())
        throw std::logic_error("sample point without a component tag");
    std::vector<ClassId> comp_class;
    for (const Component& c : components(map)) comp_class.push_back(c.class_id);
    const double positive = stats.alpha;
    const double negative = stats.alpha - 1.0;
    std::vector<WeightedPoint> out;
    out.reserve(sample.points.size());
    for (std::size_t k = 0; k < sample.points.size(); ++k) {
        const std::size_t c = sample.origin_component[k];
        if (c >= comp_class.size()) throw std::logic_error("sample component tag out of range");
        out.push_back({sample.points[k], comp_class[c] == target ? positive : negative});
    }
    return out;
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Sweep in the unnormalized parameter s, with center(s) = m + s * v.
struct Frame {
    Point m, h, v;

    Frame(Point p, Point q) : m(0.5 * (p + q)), h(p - m), v{-(q.y - p.y), q.x - p.x} {}

    [[nodiscard]] Point center(double s) const { return m + s * v; }
};

struct RawEvent {
    double s;
    bool end;
    double w;
};

double build_events(std::size_t i, std::size_t j, std::span<const WeightedPoint> points, const Frame& f,
                    std::vector<RawEvent>& ev) {
    ev.clear();
    double base = points[i].weight + points[j].weight;
    const double hh = dot(f.h, f.h);
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (k == i || k == j || points[k].weight == 0.0) continue;
        const Point x = points[k].position - f.m;
        // Inside the closed disk iff s * a >= b.
        const double a = 2.0 * dot(f.v, x);
        const double b = dot(x, x) - hh;
        if (a > 0.0)
            ev.push_back({b / a, false, points[k].weight});
        else if (a < 0.0)
            ev.push_back({b / a, true, points[k].weight});
        else if (b <= 0.0)
            base += points[k].weight;
    }
    std::sort(ev.begin(), ev.end(), [](const RawEvent& x, const RawEvent& y) {
        if (x.s != y.s) return x.s < y.s;
        return !x.end && y.end;
    });
    return base;
}

struct PairBest {
    double weight = -inf;
    double s = 0.0;
};

PairBest sweep(const Frame& f, double base, const std::vector<RawEvent>& ev, double floor_weight) {
    PairBest best;
    best.weight = floor_weight;
    bool found = false;
    const double unit = 1.0 / norm(f.v);

    auto consider = [&](double w, double s) {
        if (w < best.weight) return;
        if (found && w == best.weight) {
            const double as = std::abs(s), ab = std::abs(best.s);
            if (as > ab) return;
            if (as == ab && !lex_less(f.center(s), f.center(best.s))) return;
        }
        best = {w, s};
        found = true;
    };
    auto consider_open = [&](double lo, double hi, double w) {
        if (w < best.weight) return;
        if (lo < 0.0 && 0.0 < hi) {
            consider(w, 0.0);
        } else if (lo == -inf) {
            consider(w, hi - unit);
        } else if (hi == inf) {
            consider(w, lo + unit);
        } else {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid > lo && mid < hi) consider(w, mid);
        }
    };

    double w = base;
    for (const RawEvent& e : ev)
        if (e.end) w += e.w;
    double prev = -inf;
    std::size_t k = 0;
    while (k < ev.size()) {
        const double s = ev[k].s;
        consider_open(prev, s, w);
        for (; k < ev.size() && ev[k].s == s && !ev[k].end; ++k) w += ev[k].w;
        consider(w, s);
        for (; k < ev.size() && ev[k].s == s; ++k) w -= ev[k].w;
        prev = s;
    }
    consider_open(prev, inf, w);
    if (!found) best.weight = -inf;
    return best;
}

void check_pair(std::size_t i, std::size_t j, std::span<const WeightedPoint> points) {
    if (i >= points.size() || j >= points.size() || i == j) throw std::invalid_argument("bad pair indices");
    if (points[i].position == points[j].position)
        throw std::invalid_argument("pair points share a position");
}

struct Candidate {
    double weight = -inf;
    double radius = 0.0;
    Point center{};
    std::array<std::size_t, 2> support{};
    std::size_t support_size = 0;
    bool valid = false;
};

bool better(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.radius != b.radius) return a.radius < b.radius;
    if (a.center.x != b.center.x) return a.center.x < b.center.x;
    if (a.center.y != b.center.y) return a.center.y < b.center.y;
    if (a.support_size != b.support_size) return a.support_size < b.support_size;
    return std::lexicographical_compare(a.support.begin(), a.support.begin() + a.support_size,
                                        b.support.begin(), b.support.begin() + b.support_size);
}

}  // namespace

std::vector<SweepEvent> sweep_events(std::size_t i, std::size_t j, std::span<const WeightedPoint> points,
                                     double* base) {
    check_pair(i, j, points);
    const Frame f(points[i].position, points[j].position);
    std::vector<RawEvent> raw;
    const double b = build_events(i, j, points, f, raw);
    if (base) *base = b;
    const double len = norm(f.v);
    std::vector<SweepEvent> out;
    out.reserve(raw.size());
    for (const RawEvent& e : raw)
        out.push_back({e.s * len, e.end ? EventKind::end : EventKind::start, e.w});
    return out;
}

PairSweepResult pair_sweep(std::size_t i, std::size_t j, std::span<const WeightedPoint> points) {
    check_pair(i, j, points);
    const Frame f(points[i].position, points[j].position);
    std::vector<RawEvent> raw;
    const double base = build_events(i, j, points, f, raw);
    const PairBest best = sweep(f, base, raw, -inf);
    return {best.s * norm(f.v), best.weight};
}

FitResult max_weight_smallest_disk(std::span<const WeightedPoint> points, FitOptions options) {
    if (points.empty()) throw std::invalid_argument("disk fit needs at least one point");
    for (const WeightedPoint& p : points)
        if (!std::isfinite(p.weight) || !std::isfinite(p.position.x) || !std::isfinite(p.position.y))
            throw std::invalid_argument("non-finite weighted point");

    std::vector<std::size_t> positives;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (points[k].weight > 0.0) positives.push_back(k);

    // Radius-0 disks: one per distinct positive position.
    Candidate best;
    {
        std::vector<std::size_t> order(points.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (!(points[a].position == points[b].position))
                return lex_less(points[a].position, points[b].position);
            return a < b;
        });
        for (std::size_t g = 0; g < order.size();) {
            std::size_t e = g;
            double w = 0.0;
            std::size_t first_positive = points.size();
            while (e < order.size() && points[order[e]].position == points[order[g]].position) {
                w += points[order[e]].weight;
                if (points[order[e]].weight > 0.0) first_positive = std::min(first_positive, order[e]);
                ++e;
            }
            if (first_positive < points.size()) {
                Candidate c;
                c.weight = w;
                c.radius = 0.0;
                c.center = points[first_positive].position;
                c.support = {first_positive, 0};
                c.support_size = 1;
                c.valid = true;
                if (better(c, best)) best = c;
            }
            g = e;
        }
    }

    const unsigned workers = detail::resolve_threads(options.threads);
    std::vector<Candidate> partial(workers);
    std::vector<std::vector<RawEvent>> buffers(workers);
    detail::parallel_for(positives.size(), workers, [&](std::size_t a, unsigned worker) {
        Candidate& local = partial[worker];
        std::vector<RawEvent>& ev = buffers[worker];
        const std::size_t i = positives[a];
        for (std::size_t b = a + 1; b < positives.size(); ++b) {
            const std::size_t j = positives[b];
            const Point p = points[i].position;
            const Point q = points[j].position;
            if (p == q) continue;
            // Orient the pair by position so the result does not depend on input order.
            const bool flip = lex_less(q, p);
            const Frame f = flip ? Frame(q, p) : Frame(p, q);
            const double base = flip ? build_events(j, i, points, f, ev) : build_events(i, j, points, f, ev);
            const PairBest pb = sweep(f, base, ev, local.valid ? local.weight : -inf);
            if (pb.weight == -inf) continue;
            Candidate c;
            c.weight = pb.weight;
            c.center = f.center(pb.s);
            c.radius = std::max(norm(c.center - p), norm(c.center - q));
            c.support = {i, j};
            c.support_size = 2;
            c.valid = true;
            if (better(c, local)) local = c;
        }
    });
    for (const Candidate& c : partial)
        if (better(c, best)) best = c;

    FitResult out;
    if (!best.valid || best.weight <= 0.0) {
        out.disk = {{0.0, 0.0}, 0.0};
        out.weight = 0.0;
        out.degenerate = true;
        return out;
    }
    out.disk = {best.center, best.radius};
    out.weight = best.weight;
    out.support.assign(best.support.begin(), best.support.begin() + best.support_size);
    out.degenerate = best.support_size < 2;
    return out;
}

double recount_weight(std::span<const WeightedPoint> points, const Disk& disk, double rel_tol) {
    const double tol = rel_tol * std::max(disk.radius, norm(disk.center));
    double w = 0.0;
    for (const WeightedPoint& p : points)
        if (norm(p.position - disk.center) <= disk.radius + tol) w += p.weight;
    return w;
}

double recount_weight(std::span<const WeightedPoint> points, const FitResult& fit, double rel_tol) {
    if (fit.empty()) return 0.0;
    return recount_weight(points, fit.disk, rel_tol);
}

}  // namespace choreme
