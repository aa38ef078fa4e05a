// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nelder_mead.hpp"
#include "parallel.hpp"

namespace twobar {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double inf = std::numeric_limits<double>::infinity();

double beta_sys(const Scenario& s, double l1, double l2) {
    return system_failure_probability({l1, l2}, s).beta_sys;
}

FrontierPoint frontier_point(const Scenario& s, double target, double lambda1,
                             const FrontierOptions& o, std::size_t& evals) {
    auto beta = [&](double l2) {
        ++evals;
        return beta_sys(s, lambda1, l2);
    };
    FrontierPoint p;
    p.lambda1 = lambda1;
    double prev_l = 0.0;
    double prev_b = beta(0.0);
    double best = prev_b;
    if (prev_b >= target) {
        p.lambda2_required = 0.0;
        p.beta_sys_achieved = prev_b;
        p.feasible = true;
        return p;
    }
    for (std::size_t i = 1; i <= o.scan_steps; ++i) {
        const double l = o.lambda_max * static_cast<double>(i) / static_cast<double>(o.scan_steps);
        const double b = beta(l);
        if (b < prev_b - 1e-12) p.monotone = false;
        best = std::max(best, b);
        if (b >= target) {
            double lo = prev_l;
            double hi = l;
            double b_hi = b;
            while (hi - lo > o.tolerance) {
                const double mid = 0.5 * (lo + hi);
                const double bm = beta(mid);
                if (bm >= target) {
                    hi = mid;
                    b_hi = bm;
                } else {
                    lo = mid;
                }
            }
            p.lambda2_required = hi;
            p.beta_sys_achieved = b_hi;
            p.feasible = true;
            return p;
        }
        prev_l = l;
        prev_b = b;
    }
    p.lambda2_required = nan;
    p.beta_sys_achieved = best;
    return p;
}

void check_frontier_options(const FrontierOptions& o) {
    if (!(o.lambda_max > 0.0) || !(o.tolerance > 0.0) || o.scan_steps == 0)
        throw std::invalid_argument("frontier options: lambda_max, tolerance and scan_steps must be positive");
}

void finish(OptimizationResult& r, const Scenario& s) {
    r.breakdown = system_failure_probability(r.best, s);
    r.costs = risk_objective(r.best, s, r.breakdown);
}

Design mirror(const Design& d) { return {d.lambda2, d.lambda1}; }

}  // namespace

std::vector<FrontierPoint> rbdo_frontier(const Scenario& s, double target,
                                         const std::vector<double>& grid,
                                         const FrontierOptions& o) {
    validate_scenario(s);
    check_frontier_options(o);
    if (std::isnan(target)) throw std::invalid_argument("rbdo_frontier: target index is NaN");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0)) throw std::invalid_argument("rbdo_frontier: negative lambda1 in grid");
        if (i > 0 && grid[i] < grid[i - 1])
            throw std::invalid_argument("rbdo_frontier: lambda1 grid must be ascending");
    }
    std::vector<FrontierPoint> out(grid.size());
    detail::parallel_for(grid.size(), o.jobs, [&](std::size_t i) {
        std::size_t evals = 0;
        out[i] = frontier_point(s, target, grid[i], o, evals);
    });
    return out;
}

OptimizationResult rbdo_optimize(const Scenario& s, double target, const RbdoOptions& o) {
    validate_scenario(s);
    check_frontier_options(o.frontier);
    if (!(o.lambda1_step > 0.0)) throw std::invalid_argument("rbdo_optimize: lambda1_step must be positive");
    if (std::isnan(target)) throw std::invalid_argument("rbdo_optimize: target index is NaN");

    OptimizationResult r;
    r.max_beta_sys = nan;
    r.evaluations = 1;
    if (beta_sys(s, 0.0, 0.0) >= target) {
        r.best = {0.0, 0.0};
        r.degenerate = true;
        r.converged = true;
        finish(r, s);
        r.local_minima = {{r.best, r.costs.total, true}};
        return r;
    }

    const double lmax = o.frontier.lambda_max;
    const auto n = static_cast<std::size_t>(std::floor(lmax / o.lambda1_step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = std::min(lmax, o.lambda1_step * static_cast<double>(i));

    std::vector<FrontierPoint> pts(n);
    std::vector<std::size_t> counts(n, 0);
    detail::parallel_for(n, o.frontier.jobs, [&](std::size_t i) {
        pts[i] = frontier_point(s, target, grid[i], o.frontier, counts[i]);
    });
    for (auto c : counts) r.evaluations += c;

    auto material = [&](const FrontierPoint& p) {
        return p.feasible ? material_cost({p.lambda1, p.lambda2_required}, s) : inf;
    };
    std::size_t best = n;
    std::size_t non_monotone = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!pts[i].monotone) ++non_monotone;
        if (pts[i].feasible && (best == n || material(pts[i]) < material(pts[best]))) best = i;
    }
    if (non_monotone > 0) {
        std::ostringstream msg;
        msg << "beta_sys not monotone in lambda2 below the crossing at " << non_monotone
            << " of " << n << " frontier points";
        r.diagnostics.push_back(msg.str());
    }

    if (best == n) {
        r.feasible = false;
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (pts[i].beta_sys_achieved > pts[arg].beta_sys_achieved) arg = i;
        // Start the ascent from the best scanned lambda2 of the best lambda1.
        double start2 = 0.0;
        double start_b = -inf;
        for (std::size_t k = 0; k <= o.frontier.scan_steps; ++k) {
            const double l2 = lmax * static_cast<double>(k) / static_cast<double>(o.frontier.scan_steps);
            const double b = beta_sys(s, grid[arg], l2);
            ++r.evaluations;
            if (b > start_b) {
                start_b = b;
                start2 = l2;
            }
        }
        detail::SimplexOptions so;
        so.upper = lmax;
        const auto nm = detail::nelder_mead(
            [&](const detail::Point& x) { return -beta_sys(s, x[0], x[1]); }, {grid[arg], start2}, so);
        r.evaluations += nm.evaluations;
        r.best = {nm.x[0], nm.x[1]};
        r.max_beta_sys = -nm.value;
        r.converged = nm.converged;
        finish(r, s);
        std::ostringstream msg;
        msg << "target beta_sys " << target << " infeasible on [0, " << lmax
            << "]^2; max attainable " << r.max_beta_sys;
        r.diagnostics.push_back(msg.str());
        return r;
    }

    // Golden-section refinement of lambda1 around the best grid point.
    FrontierPoint best_pt = pts[best];
    double best_cost = material(best_pt);
    double lo = std::max(0.0, grid[best] - o.lambda1_step);
    double hi = std::min(lmax, grid[best] + o.lambda1_step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto probe = [&](double l1) {
        std::size_t evals = 0;
        const auto p = frontier_point(s, target, l1, o.frontier, evals);
        r.evaluations += evals;
        const double c = material(p);
        if (c < best_cost) {
            best_cost = c;
            best_pt = p;
        }
        return c;
    };
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = probe(x1);
    double f2 = probe(x2);
    while (hi - lo > o.frontier.tolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = probe(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = probe(x2);
        }
    }
    r.best = {best_pt.lambda1, best_pt.lambda2_required};
    r.converged = true;
    finish(r, s);
    r.local_minima = {{r.best, r.costs.total, true}};
    return r;
}

OptimizationResult ro_optimize(const Scenario& s, const RoOptions& o) {
    validate_scenario(s);
    if (o.grid_points < 2 || !(o.grid_max > 0.0) || o.max_seeds == 0 || !(o.distinct > 0.0))
        throw std::invalid_argument("ro_optimize: invalid grid options");

    auto total = [&](const detail::Point& x) { return risk_objective({x[0], x[1]}, s).total; };
    const std::size_t n = o.grid_points;
    const double step = o.grid_max / static_cast<double>(n - 1);
    auto at = [&](std::size_t i) { return step * static_cast<double>(i); };

    std::vector<double> grid(n * n);
    detail::parallel_for(n, o.jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) grid[i * n + j] = total({at(i), at(j)});
    });

    struct Seed {
        double value;
        std::size_t i, j;
    };
    std::vector<Seed> seeds;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = grid[i * n + j];
            bool local = true;
            for (int di = -1; di <= 1 && local; ++di)
                for (int dj = -1; dj <= 1 && local; ++dj) {
                    const auto ii = static_cast<std::ptrdiff_t>(i) + di;
                    const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
                    if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(n) ||
                        jj >= static_cast<std::ptrdiff_t>(n))
                        continue;
                    local = v <= grid[static_cast<std::size_t>(ii) * n + static_cast<std::size_t>(jj)];
                }
            if (local) seeds.push_back({v, i, j});
        }
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.value < b.value; });
    if (seeds.size() > o.max_seeds) seeds.resize(o.max_seeds);

    std::vector<detail::SimplexResult> refined(seeds.size());
    detail::SimplexOptions so;
    so.initial_step = 0.5 * step;
    detail::parallel_for(seeds.size(), o.jobs, [&](std::size_t k) {
        refined[k] = detail::nelder_mead(total, {at(seeds[k].i), at(seeds[k].j)}, so);
    });

    OptimizationResult r;
    r.max_beta_sys = nan;
    r.evaluations = grid.size();
    const bool symmetric = s.symmetric();
    std::vector<LocalMinimum> found;
    for (std::size_t k = 0; k < refined.size(); ++k) {
        const auto& nm = refined[k];
        r.evaluations += nm.evaluations;
        r.converged = r.converged || nm.converged;
        if (!nm.converged) {
            std::ostringstream msg;
            msg << "seed " << k << " at (" << at(seeds[k].i) << ", " << at(seeds[k].j)
                << ") did not converge";
            r.diagnostics.push_back(msg.str());
        }
        Design d{nm.x[0], nm.x[1]};
        if (symmetric && d.lambda1 > d.lambda2) d = mirror(d);
        found.push_back({d, nm.value, nm.converged});
    }
    auto by_total = [](const LocalMinimum& a, const LocalMinimum& b) {
        if (a.total != b.total) return a.total < b.total;
        return a.design.lambda1 < b.design.lambda1;
    };
    std::stable_sort(found.begin(), found.end(), by_total);

    auto close = [&](const Design& a, const Design& b) {
        return std::abs(a.lambda1 - b.lambda1) <= o.distinct && std::abs(a.lambda2 - b.lambda2) <= o.distinct;
    };
    for (const auto& m : found) {
        bool dup = false;
        for (const auto& kept : r.local_minima) dup = dup || close(kept.design, m.design);
        if (!dup) r.local_minima.push_back(m);
    }
    if (symmetric) {
        const auto canonical = r.local_minima;
        for (const auto& m : canonical) {
            const Design md = mirror(m.design);
            bool present = false;
            for (const auto& kept : r.local_minima) present = present || close(kept.design, md);
            if (!present) r.local_minima.push_back({md, m.total, m.converged});
        }
        std::stable_sort(r.local_minima.begin(), r.local_minima.end(), by_total);
    }
    r.best = r.local_minima.front().design;
    finish(r, s);
    return r;
}

}  // namespace twobar
