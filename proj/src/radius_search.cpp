#include "hypersteiner/fermat/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hypersteiner/errors.hpp"
#include "hypersteiner/fermat/simplex.hpp"
#include "hypersteiner/rng.hpp"

namespace hypersteiner::fermat {

using convex::ConvexPolygon;

Convex2dBoundary::Convex2dBoundary(const convex::PolyhedralNorm& norm,
                                   std::vector<ConvexPolygon> sets)
    : norm_(&norm), sets_(std::move(sets)) {
    if (sets_.empty()) throw ValidationError("boundary needs at least one set");
    const int n = static_cast<int>(sets_.size());
    pairwise_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairwise_[i][j] = pairwise_[j][i] = convex::hausdorff(sets_[i], sets_[j], norm);
}

Rat objective(const Convex2dBoundary& m, const ConvexPolygon& y) {
    Rat sum(0);
    for (int i = 0; i < m.n(); ++i) sum += convex::hausdorff(y, m.set(i), m.norm());
    return sum;
}

std::vector<Rat> distance_vector(const Convex2dBoundary& m, const ConvexPolygon& k) {
    std::vector<Rat> d;
    d.reserve(m.n());
    for (int i = 0; i < m.n(); ++i) d.push_back(convex::hausdorff(k, m.set(i), m.norm()));
    return d;
}

std::optional<ConvexPolygon> k_d(const Convex2dBoundary& m, const std::vector<Rat>& d) {
    if (static_cast<int>(d.size()) != m.n()) throw UsageError("radius vector has wrong length");
    std::vector<ConvexPolygon> offsets;
    offsets.reserve(m.n());
    for (int i = 0; i < m.n(); ++i) {
        if (d[i].sign() < 0) throw UsageError("negative radius");
        offsets.push_back(convex::minkowski_offset(m.set(i), d[i], m.norm()));
    }
    return convex::intersect(offsets);
}

namespace {

struct ExactEval {
    Rat value;
    std::vector<Rat> d;  // true vector of k
    ConvexPolygon k;
};

/// Exact evaluation at a radius vector, tightened by iterating
/// d -> d(K_d). The first step replaces an arbitrary vector by the true
/// vector of its intersection; afterwards the vectors decrease and the
/// intersections grow monotonically, so the loop settles fast.
std::optional<ExactEval> polish(const Convex2dBoundary& m, std::vector<Rat> d, long* evals,
                                bool* stabilized) {
    auto k = k_d(m, d);
    if (!k) return std::nullopt;
    *stabilized = false;
    for (int iter = 0; iter < 64; ++iter) {
        ++*evals;
        std::vector<Rat> next = distance_vector(m, *k);
        auto k_next = k_d(m, next);
        if (!k_next) throw std::logic_error("intersection vanished while tightening");
        if (next == d && *k_next == *k) {
            *stabilized = true;
            break;
        }
        d = std::move(next);
        k = std::move(k_next);
    }
    ExactEval out;
    out.d = distance_vector(m, *k);
    Rat sum(0);
    for (const Rat& di : out.d) sum += di;
    out.value = sum;
    out.k = *k;
    return out;
}

bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

}  // namespace

Convex2dSolveResult solve_radius_search(const Convex2dBoundary& m, const Convex2dSolveOptions& opts) {
    const int n = m.n();
    Convex2dSolveResult out;

    // pool of characteristic scales: 0 and the pairwise distances
    std::vector<Rat> pool{Rat(0)};
    Rat hmax(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pool.push_back(m.pairwise(i, j));
            hmax = max(hmax, m.pairwise(i, j));
        }

    if (hmax.sign() == 0) {
        // all boundary sets coincide
        out.value = Rat(0);
        out.d.assign(n, Rat(0));
        out.k = m.set(0);
        out.stabilized = true;
        out.converged = true;
        return out;
    }

    // float objective: exact geometry at a dyadic rounding of the point
    auto feval = [&](const std::vector<double>& x) -> double {
        std::vector<Rat> d(n);
        for (int i = 0; i < n; ++i) d[i] = x[i] > 0 ? round_dyadic(x[i], 24) : Rat(0);
        ++out.exact_evaluations;
        auto k = k_d(m, d);
        if (!k) return std::numeric_limits<double>::infinity();
        Rat sum(0);
        for (const Rat& di : distance_vector(m, *k)) sum += di;
        return sum.to_double();
    };

    // deterministic multi-starts: collapses onto each boundary set, the
    // half-distance vector, then seeded mixes of pool values
    std::vector<std::vector<double>> starts;
    for (int j = 0; j < n && static_cast<int>(starts.size()) < opts.starts; ++j) {
        std::vector<double> s(n);
        for (int i = 0; i < n; ++i) s[i] = m.pairwise(i, j).to_double();
        starts.push_back(std::move(s));
    }
    if (static_cast<int>(starts.size()) < opts.starts) {
        std::vector<double> s(n, (hmax * Rat(1, 2)).to_double());
        starts.push_back(std::move(s));
    }
    Rng rng(opts.seed);
    while (static_cast<int>(starts.size()) < opts.starts) {
        std::vector<double> s(n);
        for (int i = 0; i < n; ++i)
            s[i] = pool[rng.below(pool.size())].to_double() * (0.5 + 0.001 * rng.range(0, 1000));
        starts.push_back(std::move(s));
    }

    const double step = std::max(hmax.to_double() / 4.0, 1e-3);
    SimplexOptions sopts;
    sopts.diameter_tol = opts.tol;
    sopts.max_evaluations = opts.budget;

    std::vector<double> best_float;
    double best_float_value = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        std::vector<std::vector<double>> simplex{s};
        for (int i = 0; i < n; ++i) {
            std::vector<double> v = s;
            v[i] += step;
            simplex.push_back(std::move(v));
        }
        SimplexOutcome run = nelder_mead(feval, std::move(simplex), sopts);
        ++out.starts_run;
        out.converged = out.converged || run.converged;
        if (run.best_value < best_float_value) {
            best_float_value = run.best_value;
            best_float = run.best;
        }
    }

    // exact candidates to snap the float optimum onto
    std::vector<std::vector<Rat>> candidates;
    if (!best_float.empty() && std::isfinite(best_float_value)) {
        std::vector<Rat> dyadic(n), snapped(n);
        for (int i = 0; i < n; ++i) {
            double x = std::max(best_float[i], 0.0);
            dyadic[i] = round_dyadic(x, opts.snapshot_bits);
            snapped[i] = dyadic[i];
            // prefer a nearby pool value or bounded-denominator rational
            Rat best_near = dyadic[i];
            Rat best_gap = Rat(1);  // anything below 1e-6 wins
            const Rat tol(1, 1000000);
            for (const Rat& p : pool) {
                Rat gap = abs(p - dyadic[i]);
                if (gap <= tol && gap < best_gap) {
                    best_gap = gap;
                    best_near = p;
                }
            }
            for (long cap : {16L, 256L, 4096L, 100000L}) {
                Rat approx = best_approx(dyadic[i], cap);
                Rat gap = abs(approx - dyadic[i]);
                if (gap <= tol && gap < best_gap) {
                    best_gap = gap;
                    best_near = approx;
                }
            }
            if (best_gap < Rat(1)) snapped[i] = best_near;
        }
        candidates.push_back(snapped);
        candidates.push_back(dyadic);

        if (n == 2) {
            // optimal vectors trace the segment d_1 + d_2 = h
            const Rat h = m.pairwise(0, 1);
            Rat t = min(max(snapped[0], Rat(0)), h);
            candidates.push_back({t, h - t});
            candidates.push_back({h * Rat(1, 2), h * Rat(1, 2)});
        }
    }
    if (n == 3) {
        // tight triangle vector: d_i + d_j = h_ij for all pairs
        const Rat h01 = m.pairwise(0, 1), h02 = m.pairwise(0, 2), h12 = m.pairwise(1, 2);
        const Rat g0 = (h01 + h02 - h12) * Rat(1, 2);
        const Rat g1 = (h01 + h12 - h02) * Rat(1, 2);
        const Rat g2 = (h02 + h12 - h01) * Rat(1, 2);
        if (g0.sign() >= 0 && g1.sign() >= 0 && g2.sign() >= 0) candidates.push_back({g0, g1, g2});
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> collapse(n);
        for (int i = 0; i < n; ++i) collapse[i] = m.pairwise(i, j);
        candidates.push_back(std::move(collapse));
    }

    bool have_best = false;
    for (const auto& cand : candidates) {
        bool stabilized = false;
        auto eval = polish(m, cand, &out.exact_evaluations, &stabilized);
        if (!eval) continue;
        if (!have_best || eval->value < out.value ||
            (eval->value == out.value && lex_less(eval->d, out.d))) {
            out.value = eval->value;
            out.d = eval->d;
            out.k = eval->k;
            out.stabilized = stabilized;
            have_best = true;
        }
    }
    if (!have_best) throw std::logic_error("no feasible radius vector found");
    return out;
}

std::vector<std::vector<int>> d_far_vertices(const Convex2dBoundary& m, const std::vector<Rat>& d) {
    auto k = k_d(m, d);
    if (!k) throw UsageError("d-far vertices need a nonempty intersection");
    std::vector<std::vector<int>> out(m.n());
    for (int i = 0; i < m.n(); ++i) {
        const ConvexPolygon& mi = m.set(i);
        for (int v = 0; v < mi.size(); ++v)
            if (convex::dist_point_to_polygon(mi.vertex(v), *k, m.norm()) >= d[i])
                out[i].push_back(v);
    }
    return out;
}

std::vector<int> one_sided_check(const Convex2dBoundary& m, const std::vector<Rat>& d,
                                 const ConvexPolygon& k) {
    if (distance_vector(m, k) != d)
        throw UsageError("set does not have the claimed distance vector");
    std::vector<int> out;
    for (int i = 0; i < m.n(); ++i)
        if (convex::sup_dist_polygon_to_polygon(m.set(i), k, m.norm()) == d[i]) out.push_back(i + 1);
    return out;
}

std::vector<int> reverse_one_sided_check(const Convex2dBoundary& m, const std::vector<Rat>& d) {
    auto k = k_d(m, d);
    if (!k) throw UsageError("reverse check needs a nonempty intersection");
    std::vector<int> out;
    for (int i = 0; i < m.n(); ++i)
        if (convex::sup_dist_polygon_to_polygon(*k, m.set(i), m.norm()) == d[i]) out.push_back(i + 1);
    return out;
}

}  // namespace hypersteiner::fermat
