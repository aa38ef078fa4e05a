// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "parallel.hpp"
#include "twobar/cost.hpp"

namespace twobar {
namespace {

constexpr std::uint64_t chunk_size = 1u << 16;

struct PathSpec {
    const char* label;
    Outcome outcome;
    int replaced;  // bar replaced after a service failure, 0 otherwise
};

// Order fixes the index used by the simulation below.
constexpr PathSpec active_paths[] = {
    {"n", Outcome::direct, 0},       {"l", Outcome::direct, 0},       {"h", Outcome::progressive, 0},
    {"m", Outcome::direct, 0},       {"i", Outcome::progressive, 0},  {"j", Outcome::direct, 0},
    {"f", Outcome::progressive, 0},  {"g", Outcome::progressive, 0},  {"f+", Outcome::progressive, 0},
    {"g+", Outcome::progressive, 0}, {"b", Outcome::service, 1},      {"c", Outcome::service, 2},
    {"k", Outcome::direct, 0},       {"f2", Outcome::progressive, 0}, {"g2", Outcome::progressive, 0},
    {"d", Outcome::service, 1},      {"e", Outcome::service, 2},
};
enum ActivePath { AN, AL, AH, AM, AI, AJ, AF, AG, AF_PLUS, AG_PLUS, AB, AC, AK, AF2, AG2, AD, AE };

constexpr PathSpec passive_paths[] = {
    {"k", Outcome::direct, 0}, {"j", Outcome::direct, 0},  {"e", Outcome::progressive, 0},
    {"i", Outcome::direct, 0}, {"h", Outcome::direct, 0},  {"g", Outcome::direct, 0},
    {"d", Outcome::progressive, 0}, {"c", Outcome::service, 1}, {"f", Outcome::direct, 0},
    {"h2", Outcome::direct, 0}, {"g2", Outcome::direct, 0}, {"b", Outcome::service, 1},
};
enum PassivePath { PK, PJ, PE, PI, PH, PG, PD, PC_, PF, PH2, PG2, PB };

constexpr int none = -1;

struct Counts {
    std::vector<std::uint64_t> paths;
    std::array<std::uint64_t, 4> basic{};  // F1, F2, joint, g21
};

struct Sample {
    double s1, s2, p1, p2;
    bool c1, c2;
};

class Tree {
public:
    Tree(const Scenario& s, const Design& d)
        : s_(s),
          a1_(member_area(d.lambda1, Bar::first, s)),
          a2_(member_area(d.lambda2, Bar::second, s)),
          f_(s.load.impact),
          eta_(s.material1.eta) {}

    int walk(const Sample& x, Counts& c) const {
        tally_basic(x, c);
        return s_.passive() ? passive(x) : active(x);
    }

private:
    void tally_basic(const Sample& x, Counts& c) const {
        const double r1 = a1_ * x.s1;
        const double r2 = a2_ * x.s2;
        if (s_.passive()) {
            c.basic[0] += r1 < x.p1;
            c.basic[1] += r2 < x.p1;
            c.basic[2] += r1 + r2 < f_ * x.p1;
        } else {
            c.basic[0] += (a1_ + a2_) * x.s1 < x.p1;
            c.basic[1] += (a1_ + a2_) * x.s2 < x.p1;
            c.basic[2] += r1 + r2 < x.p1;
        }
        c.basic[3] += r2 + eta_ * r1 < f_ * x.p1;
    }

    // Survivor j holding `load` after losing i; an absent survivor cannot.
    bool survivor_fails(double aj, double sj, double ai, double si, double eta, double load) const {
        return aj == 0.0 || aj * sj + eta * ai * si < load;
    }

    // Bar lost by primary failure under `load`: 1, 2 or 0. The weaker fails first.
    int primary_loss(const Sample& x, double load) const {
        const double a = a1_ + a2_;
        const bool f1 = a1_ > 0.0 && a * x.s1 < load;
        const bool f2 = a2_ > 0.0 && a * x.s2 < load;
        if (f1 && f2) return x.s1 <= x.s2 ? 1 : 2;
        return f1 ? 1 : (f2 ? 2 : 0);
    }

    bool lost_then_fails(int lost, const Sample& x, double load) const {
        return lost == 1 ? survivor_fails(a2_, x.s2, a1_, x.s1, eta_, load)
                         : survivor_fails(a1_, x.s1, a2_, x.s2, eta_, load);
    }

    int active(const Sample& x) const {
        if (x.c1 && x.c2) return AN;
        if (x.c1) {
            if (survivor_fails(a2_, x.s2, a1_, x.s1, 0.0, f_ * x.p1)) return AL;
            return survivor_fails(a2_, x.s2, a1_, x.s1, 0.0, x.p2) ? AH : none;
        }
        if (x.c2) {
            if (survivor_fails(a1_, x.s1, a2_, x.s2, 0.0, f_ * x.p1)) return AM;
            return survivor_fails(a1_, x.s1, a2_, x.s2, 0.0, x.p2) ? AI : none;
        }
        if (a1_ * x.s1 + a2_ * x.s2 < x.p1) return AJ;
        if (const int lost = primary_loss(x, x.p1)) {
            if (lost_then_fails(lost, x, f_ * x.p1)) return lost == 1 ? AF : AG;
            if (lost_then_fails(lost, x, x.p2)) return lost == 1 ? AF_PLUS : AG_PLUS;
            return lost == 1 ? AB : AC;
        }
        if (a1_ * x.s1 + a2_ * x.s2 < x.p2) return AK;
        if (const int lost = primary_loss(x, x.p2)) {
            if (lost_then_fails(lost, x, f_ * x.p2)) return lost == 1 ? AF2 : AG2;
            return lost == 1 ? AD : AE;
        }
        return none;
    }

    int passive(const Sample& x) const {
        auto standby_fails = [&](double eta, double load) {
            return survivor_fails(a2_, x.s2, a1_, x.s1, eta, load);
        };
        auto active_fails = [&](double load) { return a1_ == 0.0 || a1_ * x.s1 < load; };
        const bool early = s_.standby_engages && a2_ > 0.0;
        auto joint = [&](double load) { return early && a1_ * x.s1 + a2_ * x.s2 < f_ * load; };

        if (x.c1) {
            if (x.c2) return PK;
            if (standby_fails(0.0, f_ * x.p1)) return PJ;
            return standby_fails(0.0, x.p2) ? PE : none;
        }
        if (joint(x.p1)) return PI;
        if (active_fails(x.p1)) {
            if (x.c2) return PH;
            if (standby_fails(eta_, f_ * x.p1)) return PG;
            return standby_fails(eta_, x.p2) ? PD : PC_;
        }
        if (joint(x.p2)) return PF;
        if (active_fails(x.p2)) {
            if (x.c2) return PH2;
            return standby_fails(eta_, f_ * x.p2) ? PG2 : PB;
        }
        return none;
    }

    const Scenario& s_;
    double a1_, a2_, f_, eta_;
};

Estimate proportion(std::uint64_t count, std::uint64_t n) {
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace

const char* to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::service: return "SF";
        case Outcome::progressive: return "PC";
        case Outcome::direct: return "DC";
        default: return "none";
    }
}

const PathEstimate& MCEstimate::path(std::string_view label) const {
    for (const auto& p : paths)
        if (p.label == label) return p;
    throw std::out_of_range("MCEstimate::path: unknown label '" + std::string(label) + "'");
}

MCEstimate simulate_system(const Scenario& s, const Design& d, std::uint64_t n, std::uint64_t seed,
                           unsigned jobs) {
    if (n == 0) throw std::domain_error("simulate_system: n must be at least 1");
    validate_scenario(s);
    if (!(d.lambda1 >= 0.0 && d.lambda2 >= 0.0))
        throw std::domain_error("simulate_system: negative partial load factor");

    const PathSpec* spec = s.passive() ? passive_paths : active_paths;
    const std::size_t n_paths = s.passive() ? std::size(passive_paths) : std::size(active_paths);
    const Tree tree(s, d);

    const double m1 = s.material1.mean;
    const double sd1 = s.material1.std_dev();
    const double m2 = s.material2.mean;
    const double sd2 = s.material2.std_dev();
    const double mp = s.load.mean;
    const double sdp = s.load.std_dev();
    const double rho = s.rho12;
    const double rho_c = std::sqrt(1.0 - rho * rho);

    const std::uint64_t chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<Counts> per_chunk(chunks);
    detail::parallel_for(chunks, jobs, [&](std::size_t ci) {
        const std::uint64_t chunk = ci;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> uniform;
        Counts& c = per_chunk[ci];
        c.paths.assign(n_paths, 0);
        const std::uint64_t begin = chunk * chunk_size;
        const std::uint64_t end = std::min(n, begin + chunk_size);
        for (std::uint64_t r = begin; r < end; ++r) {
            const double z1 = normal(rng);
            const double z2 = normal(rng);
            Sample x;
            x.s1 = m1 + sd1 * z1;
            x.s2 = m2 + sd2 * (rho * z1 + rho_c * z2);
            x.p1 = mp + sdp * normal(rng);
            x.p2 = mp + sdp * normal(rng);
            x.c1 = uniform(rng) < s.latent.p1;
            x.c2 = uniform(rng) < s.latent.p2;
            const int path = tree.walk(x, c);
            if (path != none) ++c.paths[static_cast<std::size_t>(path)];
        }
    });

    Counts total;
    total.paths.assign(n_paths, 0);
    for (const auto& c : per_chunk) {
        for (std::size_t k = 0; k < n_paths; ++k) total.paths[k] += c.paths[k];
        for (std::size_t k = 0; k < 4; ++k) total.basic[k] += c.basic[k];
    }

    MCEstimate e;
    e.n = n;
    e.seed = seed;
    e.material = material_cost(d, s);
    const double rep1 = member_area(d.lambda1, Bar::first, s) / member_area(1.0, Bar::first, s);
    const double rep2 = member_area(d.lambda2, Bar::second, s) / member_area(1.0, Bar::second, s);
    double sum_w = 0.0;
    double sum_w2 = 0.0;
    std::uint64_t failed = 0;
    for (std::size_t k = 0; k < n_paths; ++k) {
        const std::uint64_t count = total.paths[k];
        e.class_counts[static_cast<std::size_t>(spec[k].outcome)] += count;
        failed += count;
        double w = 0.0;
        switch (spec[k].outcome) {
            case Outcome::service: w = s.costs.service * (spec[k].replaced == 1 ? rep1 : rep2); break;
            case Outcome::progressive: w = s.costs.progressive; break;
            case Outcome::direct: w = s.costs.direct; break;
            default: break;
        }
        sum_w += w * static_cast<double>(count);
        sum_w2 += w * w * static_cast<double>(count);
        e.paths.push_back({spec[k].label, spec[k].outcome, count, proportion(count, n)});
    }
    e.class_counts[0] = n - failed;

    const auto nd = static_cast<double>(n);
    e.p_service = proportion(e.class_counts[1], n);
    e.p_progressive = proportion(e.class_counts[2], n);
    e.p_direct = proportion(e.class_counts[3], n);
    e.p_sys = proportion(e.class_counts[2] + e.class_counts[3], n);
    const double mean_w = sum_w / nd;
    const double var_w = std::max(0.0, sum_w2 / nd - mean_w * mean_w);
    e.cost = {e.material + mean_w, std::sqrt(var_w / nd)};
    e.p_f1 = proportion(total.basic[0], n);
    e.p_f2 = proportion(total.basic[1], n);
    e.p_joint = proportion(total.basic[2], n);
    e.p_g21 = proportion(total.basic[3], n);
    return e;
}

}  // namespace twobar
