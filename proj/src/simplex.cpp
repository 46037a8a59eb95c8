#include "hypersteiner/fermat/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypersteiner::fermat {

namespace {

double diameter(const std::vector<std::vector<double>>& simplex) {
    double worst = 0;
    for (size_t i = 0; i < simplex.size(); ++i)
        for (size_t j = i + 1; j < simplex.size(); ++j)
            for (size_t k = 0; k < simplex[i].size(); ++k)
                worst = std::max(worst, std::fabs(simplex[i][k] - simplex[j][k]));
    return worst;
}

}  // namespace

SimplexOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<std::vector<double>> simplex, const SimplexOptions& opts) {
    const size_t m = simplex.size();
    if (m < 2) throw std::invalid_argument("simplex needs at least two points");
    const size_t dim = simplex[0].size();
    if (m != dim + 1) throw std::invalid_argument("simplex must have dim + 1 points");

    SimplexOutcome out;
    std::vector<double> values(m);
    for (size_t i = 0; i < m; ++i) {
        values[i] = f(simplex[i]);
        ++out.evaluations;
    }

    auto order = [&] {
        std::vector<size_t> idx(m);
        for (size_t i = 0; i < m; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2(m);
        std::vector<double> v2(m);
        for (size_t i = 0; i < m; ++i) {
            s2[i] = simplex[idx[i]];
            v2[i] = values[idx[i]];
        }
        simplex.swap(s2);
        values.swap(v2);
    };

    auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
        std::vector<double> x(dim);
        for (size_t k = 0; k < dim; ++k) x[k] = a[k] + t * (b[k] - a[k]);
        return x;
    };

    while (out.evaluations < opts.max_evaluations) {
        order();
        if (diameter(simplex) < opts.diameter_tol) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0);
        for (size_t i = 0; i + 1 < m; ++i)
            for (size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k] / static_cast<double>(m - 1);

        const std::vector<double>& worst = simplex[m - 1];
        std::vector<double> reflected = blend(centroid, worst, -opts.reflection);
        double fr = f(reflected);
        ++out.evaluations;

        if (fr < values[0]) {
            std::vector<double> expanded = blend(centroid, worst, -opts.expansion);
            double fe = f(expanded);
            ++out.evaluations;
            if (fe < fr) {
                simplex[m - 1] = std::move(expanded);
                values[m - 1] = fe;
            } else {
                simplex[m - 1] = std::move(reflected);
                values[m - 1] = fr;
            }
            continue;
        }
        if (fr < values[m - 2]) {
            simplex[m - 1] = std::move(reflected);
            values[m - 1] = fr;
            continue;
        }

        // contraction, outside or inside of the worst point
        std::vector<double> contracted = fr < values[m - 1] ? blend(centroid, reflected, opts.contraction)
                                                            : blend(centroid, worst, opts.contraction);
        double fc = f(contracted);
        ++out.evaluations;
        if (fc < std::min(fr, values[m - 1])) {
            simplex[m - 1] = std::move(contracted);
            values[m - 1] = fc;
            continue;
        }

        for (size_t i = 1; i < m; ++i) {
            simplex[i] = blend(simplex[0], simplex[i], opts.shrink);
            values[i] = f(simplex[i]);
            ++out.evaluations;
            if (out.evaluations >= opts.max_evaluations) break;
        }
    }

    order();
    out.best = simplex[0];
    out.best_value = values[0];
    return out;
}

}  // namespace hypersteiner::fermat
