#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "vvfm/experiment.hpp"

namespace vvfm::detail {

inline double relative_change(double coarse, double fine) {
    if (coarse == fine) return 0.0;
    return std::abs(fine - coarse) / std::abs(coarse);
}

inline double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// num / den with 0/0 read as 0 (zero multiplier or zero field).
inline double safe_ratio(double num, double den) {
    if (num == 0.0) return 0.0;
    return num / den;
}

/// Runs `trial(grid_n, t)` for every trial at n and at 2n and fills ratios
/// (coarse grid) and the refinement block.
inline void with_refinement(ExperimentReport& rep, const ExperimentConfig& c, double tolerance,
                            const std::function<double(std::size_t n, int t)>& trial) {
    std::vector<double> fine;
    for (int t = 0; t < c.trials; ++t) {
        rep.ratios.push_back(trial(c.n, t));
        fine.push_back(trial(2 * c.n, t));
    }
    rep.summarize();
    if (c.trials == 0) return;
    RefinementBlock b;
    b.n_coarse = c.n;
    b.n_fine = 2 * c.n;
    b.max_coarse = rep.ensemble_max;
    b.max_fine = max_of(fine);
    b.relative_change = relative_change(b.max_coarse, b.max_fine);
    b.tolerance = tolerance;
    b.stable = b.relative_change <= tolerance;
    rep.refinement = b;
    rep.checks["ratios finite"] = all_finite(rep.ratios) && all_finite(fine);
    rep.checks["ensemble max refinement-stable"] = b.stable;
}

/// Largest |v - mean| / mean over a sweep.
inline double sweep_spread(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    if (mean == 0.0) return 0.0;
    double worst = 0.0;
    for (double x : v) worst = std::max(worst, std::abs(x - mean) / mean);
    return worst;
}

}  // namespace vvfm::detail
