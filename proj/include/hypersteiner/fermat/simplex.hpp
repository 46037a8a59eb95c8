#pragma once

#include <functional>
#include <vector>

namespace hypersteiner::fermat {

struct SimplexOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double diameter_tol = 1e-9;
    long max_evaluations = 10000;
};

struct SimplexOutcome {
    std::vector<double> best;
    double best_value = 0;
    long evaluations = 0;
    bool converged = false;  // diameter fell below tolerance
};

/// Derivative-free downhill simplex. The initial simplex must have
/// dim + 1 affinely independent points.
SimplexOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<std::vector<double>> simplex, const SimplexOptions& opts);

}  // namespace hypersteiner::fermat
