// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace twobar::detail {
namespace {

struct Vertex {
    Point x;
    double f;
};

double distance(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double diameter(const std::array<Vertex, 3>& s) {
    return std::max({distance(s[0].x, s[1].x), distance(s[0].x, s[2].x), distance(s[1].x, s[2].x)});
}

class Minimizer {
public:
    Minimizer(const std::function<double(const Point&)>& f, const SimplexOptions& o)
        : f_(f), o_(o) {}

    Vertex eval(Point x) {
        for (double& c : x) c = std::clamp(c, o_.lower, o_.upper);
        ++evaluations_;
        double v = f_(x);
        if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
        return {x, v};
    }

    // One simplex run from `start`; returns true when the diameter criterion is met.
    bool run(Vertex& best) {
        const double h = o_.initial_step;
        std::array<Vertex, 3> s{best, eval({best.x[0] + h, best.x[1]}),
                                eval({best.x[0], best.x[1] + h})};
        // A start on the upper face steps inward instead.
        for (int k = 1; k <= 2; ++k)
            if (s[k].x == best.x) {
                Point p = best.x;
                p[k - 1] -= h;
                s[k] = eval(p);
            }
        auto order = [&] {
            std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        };
        order();
        while (diameter(s) >= o_.tolerance) {
            if (evaluations_ >= o_.max_evaluations) {
                best = s[0];
                return false;
            }
            const Point c{(s[0].x[0] + s[1].x[0]) / 2, (s[0].x[1] + s[1].x[1]) / 2};
            auto along = [&](double t) {
                return Point{c[0] + t * (s[2].x[0] - c[0]), c[1] + t * (s[2].x[1] - c[1])};
            };
            const Vertex r = eval(along(-1.0));
            if (r.f < s[0].f) {
                const Vertex e = eval(along(-2.0));
                s[2] = e.f < r.f ? e : r;
            } else if (r.f < s[1].f) {
                s[2] = r;
            } else {
                const bool outside = r.f < s[2].f;
                const Vertex k = eval(along(outside ? -0.5 : 0.5));
                if (k.f < (outside ? r.f : s[2].f)) {
                    s[2] = k;
                } else {
                    for (int i = 1; i < 3; ++i)
                        s[i] = eval({s[0].x[0] + 0.5 * (s[i].x[0] - s[0].x[0]),
                                     s[0].x[1] + 0.5 * (s[i].x[1] - s[0].x[1])});
                }
            }
            order();
        }
        best = s[0];
        return true;
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    const std::function<double(const Point&)>& f_;
    const SimplexOptions& o_;
    std::size_t evaluations_ = 0;
};

}  // namespace

SimplexResult nelder_mead(const std::function<double(const Point&)>& objective, Point start,
                          const SimplexOptions& options) {
    Minimizer m(objective, options);
    Vertex best = m.eval(start);
    bool converged = false;
    for (;;) {
        const double before = best.f;
        converged = m.run(best);
        if (!converged || !(best.f < before)) break;
    }
    return {best.x, best.f, m.evaluations(), converged};
}

}  // namespace twobar::detail
